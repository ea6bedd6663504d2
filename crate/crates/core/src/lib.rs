//! Exact obstructions to rational integrability of planar polynomial vector
//! fields.
//!
//! Along an invariant curve `y = φ(x)` of a field `X = P ∂x + Q ∂y`, the
//! variational equations of the foliation `y' = Q/P` have coefficients
//! `β_j = ∂^j f/∂y^j (x, φ(x))`. When the first variational equation is
//! irregular with integer residues, the field fails to be rationally
//! integrable as soon as some order `k ≥ 2` produces a Risch equation
//! `y' + (k−1) β₁ y = β_k` without a rational solution.
//!
//! Everything here works over exact rationals:
//!
//! - [`algebra`]: univariate polynomials and rational functions over ℚ, GCD,
//!   squarefree decomposition, resultants, Hermite reduction, residues.
//! - [`planar`]: bivariate polynomials, vector fields, the chart at infinity,
//!   invariant curves and the `β_j` coefficients.
//! - [`variational`]: the structure of `VE_k`, the linearized matrices and a
//!   formal check of their fundamental matrices.
//! - [`risch`]: rational solutions of `y' + a y = b`, by a general bound-based
//!   solver and by the specialized `x^k` case analysis.
//! - [`analyzer`]: the decision procedure and its certificate.

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

pub mod algebra;
pub mod analyzer;
pub mod planar;
pub mod risch;
pub mod variational;

pub use algebra::{Poly, Rat, RatFunc};
pub use analyzer::{analyze, Certificate, H1Interpretation, Verdict};
pub use planar::{BivarPoly, BivarRatFunc, PlanarField};
pub use risch::{RischEquation, RischOutcome};
