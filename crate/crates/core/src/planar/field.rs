use num_traits::One;

use super::bivar::{BivarPoly, BivarRatFunc};
use super::FieldError;
use crate::algebra::{int, Poly, Rat, RatFunc};

/// Polynomial vector field `X = P ∂x + Q ∂y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanarField {
    p: BivarPoly,
    q: BivarPoly,
}

impl PlanarField {
    pub fn new(p: BivarPoly, q: BivarPoly) -> Result<Self, FieldError> {
        if p.is_zero() && q.is_zero() {
            return Err(FieldError::ZeroField);
        }
        Ok(PlanarField { p, q })
    }

    pub fn p(&self) -> &BivarPoly {
        &self.p
    }

    pub fn q(&self) -> &BivarPoly {
        &self.q
    }

    /// `N = max(deg P, deg Q)`.
    pub fn degree(&self) -> u32 {
        self.p.total_degree().unwrap_or(0).max(self.q.total_degree().unwrap_or(0))
    }

    /// Lie derivative `X(F) = P·F_x + Q·F_y`.
    pub fn apply(&self, f: &BivarRatFunc) -> BivarRatFunc {
        let p = BivarRatFunc::from_poly(self.p.clone());
        let q = BivarRatFunc::from_poly(self.q.clone());
        &(&p * &f.deriv_x()) + &(&q * &f.deriv_y())
    }

    /// Polynomial version of [`PlanarField::apply`].
    pub fn apply_poly(&self, f: &BivarPoly) -> BivarPoly {
        &(&self.p * &f.deriv_x()) + &(&self.q * &f.deriv_y())
    }

    /// Same foliation: `Q₁P₂ − Q₂P₁ ≡ 0`.
    pub fn equivalent(&self, other: &PlanarField) -> bool {
        &self.q * &other.p == &other.q * &self.p
    }

    /// `f = Q/P`.
    pub fn foliation(&self) -> Result<BivarRatFunc, FieldError> {
        if self.p.is_zero() {
            return Err(FieldError::Degenerate);
        }
        Ok(BivarRatFunc::new(self.q.clone(), self.p.clone()))
    }

    /// Exchanges the roles of the coordinates: `(P, Q)(x, y) ↦ (Q, P)(y, x)`.
    pub fn swap_roles(&self) -> PlanarField {
        PlanarField {
            p: self.q.swap_vars(),
            q: self.p.swap_vars(),
        }
    }

    pub fn fmt_vars(&self, vx: &str, vy: &str) -> (String, String) {
        (self.p.fmt_vars(vx, vy), self.q.fmt_vars(vx, vy))
    }
}

/// Homogeneous components indexed by degree; `p = Σ parts[i]`. Empty for zero.
pub fn homogeneous_parts(p: &BivarPoly) -> Vec<BivarPoly> {
    let Some(d) = p.total_degree() else {
        return Vec::new();
    };
    let mut parts = vec![BivarPoly::zero(); d as usize + 1];
    for (&(i, j), c) in p.terms() {
        parts[(i + j) as usize] = &parts[(i + j) as usize] + &BivarPoly::monomial(c.clone(), i, j);
    }
    parts
}

fn part(parts: &[BivarPoly], i: usize) -> BivarPoly {
    parts.get(i).cloned().unwrap_or_default()
}

/// Field in `(x, y)` obtained from `X̃` in `(z₁, z₂)` by `y = 1/z₁`, `x = z₂/z₁`,
/// after clearing the common factor:
/// `P = Σ y^{N−i}(x·P_i(1,x) − Q_i(1,x))`, `Q = y·Σ y^{N−i} P_i(1,x)`.
pub fn infinity_transform(tilde: &PlanarField) -> PlanarField {
    let n = tilde.degree() as usize;
    let pp = homogeneous_parts(&tilde.p);
    let qp = homogeneous_parts(&tilde.q);
    let mut p = BivarPoly::zero();
    let mut q = BivarPoly::zero();
    for i in 0..=n {
        let pi = BivarPoly::from_poly_x(&part(&pp, i).dehomogenize());
        let qi = BivarPoly::from_poly_x(&part(&qp, i).dehomogenize());
        let shift = (n - i) as u32;
        p = &p + &(&(&pi * &BivarPoly::x()) - &qi).shift(0, shift);
        q = &q + &pi.shift(0, shift + 1);
    }
    PlanarField { p, q }
}

/// [`infinity_transform`], first exchanging the roles of `z₁`, `z₂` when
/// `P̃ ≡ 0`. The flag reports whether the exchange took place.
pub fn to_infinity_chart(tilde: &PlanarField) -> (PlanarField, bool) {
    if tilde.p.is_zero() {
        (infinity_transform(&tilde.swap_roles()), true)
    } else {
        (infinity_transform(tilde), false)
    }
}

/// Inverse direction: a polynomial field in `(z₁, z₂)` whose foliation is
/// `(z₂Q − P)/(z₁Q)` at `(z₂/z₁, 1/z₁)`, denominators cleared by `z₁^N`.
pub fn from_infinity_chart(x: &PlanarField) -> PlanarField {
    let n = x.degree();
    // z₁^N · f(z₂/z₁, 1/z₁)
    let lift = |f: &BivarPoly| {
        BivarPoly::from_terms(f.terms().map(|(&(i, j), c)| ((n - i - j, i), c.clone())))
    };
    let (hp, hq) = (lift(&x.p), lift(&x.q));
    let p = hq.shift(1, 0);
    let q = &hq.shift(0, 1) - &hp;
    let a = [&p, &q]
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.monomial_content().0)
        .min()
        .unwrap_or(0);
    PlanarField {
        p: p.unshift(a, 0).expect("common power of z1"),
        q: q.unshift(a, 0).expect("common power of z1"),
    }
}

/// Builds `X̃ = (P̃, Q̃)` from `parts = [P₀, …, P_N]` with `Q̃` chosen so that the
/// chart at infinity becomes `(x^k − y) ∂x + y(P₁(x)y^{N−1} + ⋯ + P_N(x)) ∂y`.
pub fn family_from_p(parts: &[BivarPoly], n: usize, k: usize) -> Result<PlanarField, FieldError> {
    if n < 2 {
        return Err(FieldError::InvalidParameter(format!("N = {n} must be at least 2")));
    }
    if !(2..=n).contains(&k) {
        return Err(FieldError::InvalidParameter(format!("k = {k} must satisfy 2 ≤ k ≤ N = {n}")));
    }
    if parts.len() != n + 1 {
        return Err(FieldError::InvalidParameter(format!(
            "expected {} homogeneous parts P_0..P_N, got {}",
            n + 1,
            parts.len()
        )));
    }
    if !parts[0].is_zero() {
        return Err(FieldError::InvalidFamily {
            index: 0,
            reason: "P_0 must vanish".into(),
        });
    }
    for (i, pi) in parts.iter().enumerate().skip(1) {
        if !pi.is_homogeneous(i as u32) {
            return Err(FieldError::InvalidFamily {
                index: i,
                reason: format!("not homogeneous of degree {i}"),
            });
        }
        if pi.unshift(1, 0).is_none() {
            return Err(FieldError::InvalidFamily {
                index: i,
                reason: "P_i(0, z2) is not identically zero".into(),
            });
        }
    }
    let mut p = BivarPoly::zero();
    let mut q = BivarPoly::zero();
    for (i, pi) in parts.iter().enumerate().skip(1) {
        p = &p + pi;
        let mut qi = pi.unshift(1, 0).expect("checked").shift(0, 1);
        if i == n - 1 {
            qi = &qi + &BivarPoly::monomial(Rat::one(), (n - 1) as u32, 0);
        }
        if i == n {
            qi = &qi - &BivarPoly::monomial(Rat::one(), (n - k) as u32, k as u32);
        }
        q = &q + &qi;
    }
    PlanarField::new(p, q)
}

/// `Q(x, φ) − φ′·P(x, φ) ≡ 0`.
pub fn is_invariant_curve(x: &PlanarField, phi: &RatFunc) -> Result<bool, FieldError> {
    let p_on = x.p.subs_y(phi);
    if p_on.is_zero() {
        return Err(FieldError::Degenerate);
    }
    let q_on = x.q.subs_y(phi);
    Ok((&q_on - &(&phi.derivative() * &p_on)).is_zero())
}

/// `[β₁, …, β_k]` with `β_j = ∂^j(Q/P)/∂y^j` on `y = φ(x)`.
///
/// Uses `∂^j(Q/P)/∂y^j = N_j/P^{j+1}`, `N₀ = Q`,
/// `N_j = ∂_y N_{j−1}·P − j·N_{j−1}·∂_y P`.
pub fn foliation_derivatives(x: &PlanarField, phi: &RatFunc, k: usize) -> Result<Vec<RatFunc>, FieldError> {
    if !is_invariant_curve(x, phi)? {
        return Err(FieldError::NotInvariant);
    }
    let p_on = x.p.subs_y(phi);
    let py = x.p.deriv_y();
    let mut nj = x.q.clone();
    let mut p_pow = p_on.clone();
    let mut betas = Vec::with_capacity(k);
    for j in 1..=k {
        nj = &(&nj.deriv_y() * &x.p) - &(&nj * &py).scale(&int(j as i64));
        p_pow = &p_pow * &p_on;
        betas.push(&nj.subs_y(phi) / &p_pow);
    }
    Ok(betas)
}

/// `(α, β)` of the second-order linearized system read from the top two
/// homogeneous parts of `X̃`, with `P_i`, `Q_i` evaluated at `(1, x)`:
/// `α = P_N/(xP_N − Q_N)`, `β = 2(P_N Q_{N−1} − P_{N−1} Q_N)/(xP_N − Q_N)²`.
pub fn lve2_coefficients_from_parts(tilde: &PlanarField) -> Result<(RatFunc, RatFunc), FieldError> {
    let n = tilde.degree() as usize;
    let pp = homogeneous_parts(&tilde.p);
    let qp = homogeneous_parts(&tilde.q);
    let at = |parts: &[BivarPoly], i: usize| -> Poly {
        if i > n {
            Poly::zero()
        } else {
            part(parts, i).dehomogenize()
        }
    };
    let (pn, qn) = (at(&pp, n), at(&qp, n));
    let (pn1, qn1) = if n >= 1 {
        (at(&pp, n - 1), at(&qp, n - 1))
    } else {
        (Poly::zero(), Poly::zero())
    };
    let den = &(&Poly::x() * &pn) - &qn;
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    let alpha = RatFunc::new(pn.clone(), den.clone());
    let beta = RatFunc::new((&(&pn * &qn1) - &(&pn1 * &qn)).scale(&int(2)), &den * &den);
    Ok((alpha, beta))
}

/// `X(R) + R·X(S) ≡ 0`, i.e. `R·e^S` is a first integral.
pub fn verify_darboux_integral(x: &PlanarField, r: &BivarRatFunc, s: &BivarRatFunc) -> bool {
    (&x.apply(r) + &(r * &x.apply(s))).is_zero()
}

/// Dehomogenized parts `P_i(1, x)` as univariate polynomials.
pub fn dehomogenized_parts(p: &BivarPoly) -> Vec<Poly> {
    homogeneous_parts(p).iter().map(BivarPoly::dehomogenize).collect()
}
