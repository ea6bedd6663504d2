use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{NoSolutionReason, RischEquation, RischError, RischOutcome, RischStatus, SolverKind};
use crate::algebra::linalg::{self, LinearSolution};
use crate::algebra::{int, is_integer, Poly, Rat, RatFunc};

/// Case of the `x^k` analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum KaltofenCase {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "2c")]
    TwoC,
    #[serde(rename = "2d")]
    TwoD,
}

impl fmt::Display for KaltofenCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KaltofenCase::One => "1",
            KaltofenCase::TwoA => "2a",
            KaltofenCase::TwoB => "2b",
            KaltofenCase::TwoC => "2c",
            KaltofenCase::TwoD => "2d",
        })
    }
}

/// `y′ + (A/x^k)·y = (2A + 2x^k·B)/x^{2k}`, solved as `y = Y/x^k` with
/// `x^k·Y′ + (A − k·x^{k−1})·Y = 2A + 2x^k·B` and `Y(0) = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaltofenInstance {
    a: Poly,
    b: Option<Poly>,
    k: usize,
}

impl KaltofenInstance {
    /// Requires `k > 1`, `deg A < k`, `A(0) ≠ 0`, and `B(0) ≠ 0` unless `B ≡ 0`.
    pub fn new(a: Poly, b: Option<Poly>, k: usize) -> Result<Self, RischError> {
        let bad = |s: &str| Err(RischError::InvalidInstance(s.to_string()));
        if k < 2 {
            return bad("pole exponent k must exceed 1");
        }
        if a.coeff(0).is_zero() {
            return bad("A(0) must be nonzero");
        }
        if a.degree().expect("A(0) ≠ 0") >= k {
            return bad("deg A must be below k");
        }
        let b = b.filter(|p| !p.is_zero());
        if let Some(bp) = &b {
            if bp.coeff(0).is_zero() {
                return bad("B(0) must be nonzero");
            }
        }
        Ok(KaltofenInstance { a, b, k })
    }

    /// Recognizes `y′ + a·y = b` with `a = A/x^k` and
    /// `b = (2A + 2x^k·B)/x^{2k}` satisfying the instance preconditions.
    pub fn from_equation(eq: &RischEquation) -> Option<Self> {
        let den = eq.a.den();
        let k = den.degree()?;
        if *den != Poly::monomial(int(1), k) {
            return None;
        }
        let a = eq.a.num().clone();
        // B = (b·x^{2k} − 2A) / (2x^k)
        let scaled = &eq.b * &RatFunc::from_poly(Poly::monomial(int(1), 2 * k));
        let top = scaled.as_polynomial()? - &a.scale(&int(2));
        let b = top.div_exact(&Poly::monomial(int(2), k))?;
        if top != &b * &Poly::monomial(int(2), k) {
            return None;
        }
        KaltofenInstance::new(a, Some(b), k).ok()
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> Option<&Poly> {
        self.b.as_ref()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n = deg A`.
    pub fn n(&self) -> usize {
        self.a.degree().expect("nonzero")
    }

    /// `m = deg B`; `None` for `B ≡ 0`.
    pub fn m(&self) -> Option<usize> {
        self.b.as_ref().and_then(Poly::degree)
    }

    pub fn alpha(&self) -> RatFunc {
        RatFunc::new(self.a.clone(), Poly::monomial(int(1), self.k))
    }

    pub fn beta(&self) -> RatFunc {
        RatFunc::new(self.rhs(), Poly::monomial(int(1), 2 * self.k))
    }

    /// `2A + 2x^k·B`.
    fn rhs(&self) -> Poly {
        let mut w = self.a.scale(&int(2));
        if let Some(b) = &self.b {
            w = &w + &(&Poly::monomial(int(2), self.k) * b);
        }
        w
    }

    /// `y′ + α·y = β`.
    pub fn equation(&self) -> RischEquation {
        RischEquation::new(self.alpha(), self.beta())
    }

    /// `v_r = −k` if `n < k − 1`, else `a_n − k`.
    pub fn v_r(&self) -> Rat {
        if self.n() + 1 < self.k {
            int(-(self.k as i64))
        } else {
            self.a.leading_coeff() - int(self.k as i64)
        }
    }

    /// `−v_r` when `v_r` is a negative integer, else `0`.
    pub fn rho(&self) -> usize {
        let v = self.v_r();
        if is_integer(&v) && v.is_negative() {
            usize::try_from(-v.to_integer()).expect("small")
        } else {
            0
        }
    }

    /// `h̃ = max{m, ρ}` when `B ≢ 0`, `ρ` when `B ≡ 0`.
    pub fn h_tilde(&self) -> usize {
        match self.m() {
            Some(m) => m.max(self.rho()),
            None => self.rho(),
        }
    }

    /// The same bound before simplification:
    /// `max{min{m, m+1}, ρ}` or `max{n − k − 1, ρ}`.
    pub fn h_tilde_unsimplified(&self) -> i64 {
        let rho = self.rho() as i64;
        match self.m() {
            Some(m) => (m as i64).min(m as i64 + 1).max(rho),
            None => (self.n() as i64 - self.k as i64 - 1).max(rho),
        }
    }

    /// Degree of `Y` actually searched: `h̃`, raised to `m + 1` when `B ≢ 0`
    /// (the leading coefficient `(h − k + a_n)·y_h` only vanishes at `h = ρ`).
    pub fn search_degree(&self) -> usize {
        match self.m() {
            Some(m) => self.h_tilde().max(m + 1),
            None => self.h_tilde(),
        }
    }

    /// Positive-integer test for `k − a_n` (requires `a_n ∈ ℤ`).
    fn k_minus_an(&self) -> Option<usize> {
        let t = int(self.k as i64) - self.a.leading_coeff();
        (is_integer(&t) && t.is_positive()).then(|| usize::try_from(t.to_integer()).expect("small"))
    }

    pub fn case(&self) -> KaltofenCase {
        if self.n() + 1 < self.k {
            return KaltofenCase::One;
        }
        match (self.k_minus_an(), self.m()) {
            (None, None) | (None, Some(0)) => KaltofenCase::TwoA,
            (None, Some(_)) => KaltofenCase::TwoB,
            (Some(t), Some(m)) if m >= t => KaltofenCase::TwoC,
            (Some(_), _) => KaltofenCase::TwoD,
        }
    }
}

/// Columns `(i − k)x^{i+k−1} + A·x^i` for `i = 1..=h` and right side
/// `2x^k·B + 2k·x^{k−1}`.
fn system(inst: &KaltofenInstance, h: usize) -> (Vec<Poly>, Poly) {
    let k = inst.k;
    let columns = (1..=h)
        .map(|i| &Poly::monomial(int(i as i64 - k as i64), i + k - 1) + &(&inst.a * &Poly::monomial(int(1), i)))
        .collect();
    let mut rhs = Poly::monomial(int(2 * k as i64), k - 1);
    if let Some(b) = &inst.b {
        rhs = &rhs + &(&Poly::monomial(int(2), k) * b);
    }
    (columns, rhs)
}

/// Solves with `Y = y_h x^h + ⋯ + y₁x + 2`; returns `Y` or the reason for failure.
pub fn solve_xk_with_degree(inst: &KaltofenInstance, h: usize) -> Result<Poly, NoSolutionReason> {
    let (columns, rhs) = system(inst, h);
    let rows = columns
        .iter()
        .chain(std::iter::once(&rhs))
        .filter_map(Poly::degree)
        .max()
        .map_or(0, |d| d + 1);
    let matrix: Vec<Vec<Rat>> = (0..rows).map(|r| columns.iter().map(|c| c.coeff(r)).collect()).collect();
    let b: Vec<Rat> = (0..rows).map(|r| rhs.coeff(r)).collect();
    match linalg::solve(&matrix, &b, h) {
        LinearSolution::Solved { solution, .. } => {
            let mut coeffs = vec![int(2)];
            coeffs.extend(solution);
            Ok(Poly::from_coeffs(coeffs))
        }
        LinearSolution::Inconsistent { .. } => {
            let unreachable = (0..rows).any(|r| !b[r].is_zero() && matrix[r].iter().all(Zero::is_zero));
            Err(if unreachable {
                NoSolutionReason::DegreeMismatch
            } else {
                NoSolutionReason::InconsistentSystem
            })
        }
    }
}

/// Specialized decision for `x^k` instances, tagged with the case.
pub fn solve_xk_specialized(inst: &KaltofenInstance) -> RischOutcome {
    debug_assert_eq!(inst.h_tilde() as i64, inst.h_tilde_unsimplified());
    let case = inst.case();
    let status = match solve_xk_with_degree(inst, inst.search_degree()) {
        Ok(y) => {
            let k = inst.k;
            if case == KaltofenCase::One && inst.n() + 2 < k && !y.coeff(k - 1).is_zero() {
                debug_assert_eq!(inst.m(), Some(k - 2), "degree 2k−2 on the left forces m = k − 2");
            }
            RischStatus::RationalSolution(RatFunc::new(y, Poly::monomial(int(1), inst.k)))
        }
        Err(reason) => RischStatus::NoRationalSolution(reason),
    };
    RischOutcome {
        status,
        solver: SolverKind::Specialized,
        case: Some(case),
    }
}
