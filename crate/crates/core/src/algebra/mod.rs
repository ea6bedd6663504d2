//! Exact arithmetic over ℚ: dense univariate polynomials, reduced rational
//! functions, and the classical algorithms built on them.

mod hermite;
pub mod linalg;
mod poly;
mod ratfunc;
mod resultant;
mod roots;
mod squarefree;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

pub use hermite::{hermite_reduce, residues, ResidueFactor, ResidueReport};
pub use poly::{extended_gcd, poly_gcd, solve_bezout, Poly};
pub use ratfunc::RatFunc;
pub use resultant::{interpolate, resultant, residue_resultant};
pub use roots::rational_roots;
pub use squarefree::squarefree_decompose;

/// Arbitrary-precision rational number; always reduced with a positive
/// denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}: zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `Some(n)` when `r` is a positive integer that fits in an `i64`.
pub fn positive_integer(r: &Rat) -> Option<i64> {
    if is_integer(r) && r.is_positive() {
        i64::try_from(r.numer().clone()).ok()
    } else {
        None
    }
}

/// Renders a rational as `num` or `num/den`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

