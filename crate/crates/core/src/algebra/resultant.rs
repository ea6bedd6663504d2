use num_traits::{One, Zero};

use super::linalg::determinant;
use super::{int, AlgebraError, Poly, Rat};

/// Sylvester resultant `det Syl(p, q)`.
///
/// The Sylvester matrix stacks `deg q` shifted copies of `p` over `deg p`
/// shifted copies of `q`, coefficients highest degree first. Under this
/// convention `res(x − 1, x − 2) = −1` and `res(p, c) = c^{deg p}` for a
/// constant `c`.
pub fn resultant(p: &Poly, q: &Poly) -> Result<Rat, AlgebraError> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(AlgebraError::ZeroPolynomial("resultant"));
    };
    Ok(sylvester_determinant(p, dp, q, dq))
}

/// Determinant of the Sylvester matrix of `p` and `q` read with formal
/// degrees `dp ≥ deg p` and `dq ≥ deg q`.
pub(crate) fn sylvester_determinant(p: &Poly, dp: usize, q: &Poly, dq: usize) -> Rat {
    let n = dp + dq;
    if n == 0 {
        return Rat::one();
    }
    let mut m = vec![vec![Rat::zero(); n]; n];
    for r in 0..dq {
        for j in 0..=dp {
            m[r][r + j] = p.coeff(dp - j);
        }
    }
    for r in 0..dp {
        for j in 0..=dq {
            m[dq + r][r + j] = q.coeff(dq - j);
        }
    }
    determinant(m)
}

/// Rothstein–Trager resultant `res_x(den, num − t·den')` as a polynomial in
/// `t`, for `den` non-constant.
///
/// The second argument is read with its generic degree for every `t`, so the
/// result is the polynomial identity in `t`; it is recovered by evaluation at
/// `deg den + 1` integer points and interpolation.
pub fn residue_resultant(num: &Poly, den: &Poly) -> Poly {
    let dd = den.degree().unwrap_or(0);
    if dd == 0 {
        return Poly::one();
    }
    let dden = den.derivative();
    let formal = num.degree().unwrap_or(0).max(dd - 1);
    let points: Vec<(Rat, Rat)> = (0..=dd as i64)
        .map(|t| {
            let t = int(t);
            let second = num - &dden.scale(&t);
            (t, sylvester_determinant(den, dd, &second, formal))
        })
        .collect();
    interpolate(&points)
}

/// Newton interpolation through points with distinct abscissae.
pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
    let n = points.len();
    let xs: Vec<&Rat> = points.iter().map(|(x, _)| x).collect();
    let mut coef: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::from_coeffs(vec![-xs[i].clone(), Rat::one()]);
        acc = &(&acc * &lin) + &Poly::constant(coef[i].clone());
    }
    acc
}
