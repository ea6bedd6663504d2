//! Planar polynomial vector fields, the chart at infinity, invariant graphs
//! and the coefficients `β_j` of the variational equations along them.

mod bivar;
mod field;

use thiserror::Error;

pub use bivar::{BivarPoly, BivarRatFunc};
pub use field::{
    dehomogenized_parts, family_from_p, foliation_derivatives, from_infinity_chart, homogeneous_parts,
    infinity_transform, is_invariant_curve, lve2_coefficients_from_parts, to_infinity_chart,
    verify_darboux_integral, PlanarField,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("both components of the field are zero")]
    ZeroField,
    #[error("P vanishes identically on the curve; the graph parametrization degenerates")]
    Degenerate,
    #[error("the curve is not invariant under the field")]
    NotInvariant,
    #[error("family part P_{index}: {reason}")]
    InvalidFamily { index: usize, reason: String },
    #[error("x·P_N(1,x) − Q_N(1,x) vanishes identically")]
    ZeroDenominator,
    #[error("{0}")]
    InvalidParameter(String),
}
