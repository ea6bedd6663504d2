//! Rational solutions of the Risch equation `y′ + a·y = b` over ℚ(x).

mod general;
mod specialized;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{format_rat, int, residues, Poly, Rat, RatFunc};

pub use general::{solution_bounds, solve_general, solve_with_bounds, SolutionBounds};
pub use specialized::{solve_xk_specialized, solve_xk_with_degree, KaltofenCase, KaltofenInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RischError {
    #[error("variational order {0} is below 2")]
    InvalidOrder(usize),
    #[error("residue {} of the coefficient is not an integer", .0.as_ref().map(format_rat).unwrap_or_else(|| "(irrational)".into()))]
    NonIntegerResidue(Option<Rat>),
    #[error("invalid x^k instance: {0}")]
    InvalidInstance(String),
}

/// Where an equation came from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Provenance {
    /// Variational order `k`, when built from `(α, β_k)`.
    pub order: Option<usize>,
    pub note: String,
}

/// `y′ + a·y = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RischEquation {
    pub a: RatFunc,
    pub b: RatFunc,
    pub provenance: Provenance,
}

impl RischEquation {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        RischEquation {
            a,
            b,
            provenance: Provenance::default(),
        }
    }

    /// `h′ + a·h − b`.
    pub fn residual(&self, h: &RatFunc) -> RatFunc {
        &(&h.derivative() + &(&self.a * h)) - &self.b
    }
}

impl fmt::Display for RischEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y' + ({})*y = {}", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoSolutionReason {
    /// Some degree of the right-hand side is unreachable from the left.
    DegreeMismatch,
    /// The undetermined-coefficient system has no solution.
    InconsistentSystem,
    /// The pole and degree bounds leave no room for a nonzero solution.
    PoleBoundExclusion,
}

impl fmt::Display for NoSolutionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoSolutionReason::DegreeMismatch => "degree-mismatch",
            NoSolutionReason::InconsistentSystem => "inconsistent-system",
            NoSolutionReason::PoleBoundExclusion => "pole-bound-exclusion",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    General,
    Specialized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RischStatus {
    RationalSolution(RatFunc),
    NoRationalSolution(NoSolutionReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RischOutcome {
    pub status: RischStatus,
    pub solver: SolverKind,
    /// Case of the `x^k` analysis; only set by the specialized solver.
    pub case: Option<KaltofenCase>,
}

impl RischOutcome {
    pub fn solution(&self) -> Option<&RatFunc> {
        match &self.status {
            RischStatus::RationalSolution(h) => Some(h),
            RischStatus::NoRationalSolution(_) => None,
        }
    }

    pub fn has_solution(&self) -> bool {
        self.solution().is_some()
    }

    pub fn reason(&self) -> Option<NoSolutionReason> {
        match &self.status {
            RischStatus::NoRationalSolution(r) => Some(*r),
            RischStatus::RationalSolution(_) => None,
        }
    }
}

/// `y′ + (k−1)·α·y = β_k`.
pub fn build_risch(alpha: &RatFunc, beta_k: &RatFunc, k: usize) -> Result<RischEquation, RischError> {
    if k < 2 {
        return Err(RischError::InvalidOrder(k));
    }
    Ok(RischEquation {
        a: alpha.scale(&int(k as i64 - 1)),
        b: beta_k.clone(),
        provenance: Provenance {
            order: Some(k),
            note: format!("order-{k} variational Risch equation: a = {}*alpha, b = beta_{k}", k - 1),
        },
    })
}

/// Removes the simple poles with integer residues `ℓ_q` from `a`:
/// `ã = a − Σ ℓ_q q′/q`, `b̃ = u·b` with `u = ∏ q^{ℓ_q}`.
/// `h` solves the original equation iff `u·h` solves the normalized one.
pub fn residue_normalize(eq: &RischEquation) -> Result<(RischEquation, RatFunc), RischError> {
    let report = residues(&eq.a);
    let blocks = report
        .integer_blocks()
        .ok_or_else(|| RischError::NonIntegerResidue(report.first_non_integer().flatten()))?;
    let mut a = eq.a.clone();
    let mut u = RatFunc::one();
    for (q, l) in blocks.into_iter().filter(|(_, l)| *l != 0) {
        a = &a - &RatFunc::new(q.derivative().scale(&int(l)), q.clone());
        u = &u * &RatFunc::from_poly(q).pow(l as i32);
    }
    let b = &eq.b * &u;
    let mut provenance = eq.provenance.clone();
    provenance.note = format!("{} (residue-normalized)", provenance.note);
    Ok((RischEquation { a, b, provenance }, u))
}

/// `h′ + a·h = b` exactly.
pub fn verify_solution(eq: &RischEquation, h: &RatFunc) -> bool {
    eq.residual(h).is_zero()
}

/// `lcm(p, q)`, monic.
pub(crate) fn poly_lcm(p: &Poly, q: &Poly) -> Poly {
    let g = crate::algebra::poly_gcd(p, q);
    (p * &q.div_exact(&g).expect("gcd divides")).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    #[test]
    fn build_examples() {
        let alpha = rf(&[-1, -1, 1], &[0, 0, 0, 1]);
        let beta2 = (&rf(&[1], &[0, 0, 0, 1]) - &rf(&[-1, -1, 1], &[0, 0, 0, 0, 0, 0, 1])).scale(&int(-2));
        let eq = build_risch(&alpha, &beta2, 2).unwrap();
        assert_eq!(eq.a, alpha);
        assert_eq!(eq.b, beta2);
        assert_eq!(eq.provenance.order, Some(2));
        assert_eq!(build_risch(&alpha, &beta2, 3).unwrap().a, alpha.scale(&int(2)));
        assert_eq!(build_risch(&alpha, &beta2, 1), Err(RischError::InvalidOrder(1)));

        let eq = build_risch(&rf(&[1], &[0, 0, 0, 1]), &rf(&[2, 0, 0, 2], &[0, 0, 0, 0, 0, 0, 1]), 2).unwrap();
        assert_eq!(eq.b, &RatFunc::inverse_power(int(2), 6) + &RatFunc::inverse_power(int(2), 3));
    }

    #[test]
    fn normalization_examples() {
        let eq = RischEquation::new(rf(&[-1, -1, 1], &[0, 0, 0, 1]), rf(&[1], &[1]));
        let (norm, u) = residue_normalize(&eq).unwrap();
        assert_eq!(u, RatFunc::x());
        assert_eq!(norm.a, rf(&[-1, -1], &[0, 0, 0, 1]));
        assert_eq!(norm.b, RatFunc::x());

        let eq = RischEquation::new(rf(&[1], &[0, 0, 1]), rf(&[3, 1], &[7]));
        let (norm, u) = residue_normalize(&eq).unwrap();
        assert_eq!(u, RatFunc::one());
        assert_eq!(norm.a, eq.a);
        assert_eq!(norm.b, eq.b);

        let eq = RischEquation::new(rf(&[1], &[0, 2]), RatFunc::one());
        assert_eq!(residue_normalize(&eq), Err(RischError::NonIntegerResidue(Some(rat(1, 2)))));
    }

    #[test]
    fn verification() {
        let eq = RischEquation::new(RatFunc::one(), RatFunc::x());
        assert!(verify_solution(&eq, &rf(&[-1, 1], &[1])));
        assert!(!verify_solution(&eq, &RatFunc::zero()));
    }

}
