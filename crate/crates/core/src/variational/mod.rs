//! Variational equations along an invariant graph: the structure of `VE_k`,
//! the triangular linearized systems for `k ≤ 3`, the reduced subsystem used
//! at every order, and a formal check of fundamental matrices.

mod formal;
mod ve;

use thiserror::Error;

use crate::algebra::{int, RatFunc};

pub use formal::{fundamental_matrix, satisfies_system, FormalDerivation, FormalMatrix, FormalMonomial, FormalWord};
pub use ve::{partial_bell, ve_rhs, VEStructure, VETerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariationalError {
    #[error("order {k} is below the minimum {min}")]
    InvalidOrder { k: usize, min: usize },
    #[error("full linearized matrices are only built for orders 2 and 3, got {0}")]
    UnsupportedOrder(usize),
    #[error("expected {expected} coefficients β_j, got {got}")]
    WrongBetaCount { expected: usize, got: usize },
}

/// Lower-triangular matrix of `LVE_k` for `k ∈ {2, 3}`, with `betas = [β₁, …, β_k]`.
pub fn lve_matrix(k: usize, betas: &[RatFunc]) -> Result<Vec<Vec<RatFunc>>, VariationalError> {
    if k != 2 && k != 3 {
        return Err(VariationalError::UnsupportedOrder(k));
    }
    if betas.len() != k {
        return Err(VariationalError::WrongBetaCount {
            expected: k,
            got: betas.len(),
        });
    }
    let z = RatFunc::zero;
    let s = |c: i64, b: &RatFunc| b.scale(&int(c));
    Ok(match k {
        2 => vec![vec![s(2, &betas[0]), z()], vec![betas[1].clone(), betas[0].clone()]],
        _ => vec![
            vec![s(3, &betas[0]), z(), z()],
            vec![betas[1].clone(), s(2, &betas[0]), z()],
            vec![betas[2].clone(), s(3, &betas[1]), betas[0].clone()],
        ],
    })
}

/// `χ̄₁′ = kα·χ̄₁`, `χ̄_k′ = α·χ̄_k + β_k·χ̄₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LVESubsystem {
    pub alpha: RatFunc,
    pub beta_k: RatFunc,
    pub order: usize,
}

impl LVESubsystem {
    pub fn matrix(&self) -> [[RatFunc; 2]; 2] {
        [
            [self.alpha.scale(&int(self.order as i64)), RatFunc::zero()],
            [self.beta_k.clone(), self.alpha.clone()],
        ]
    }
}

pub fn lve_subsystem(alpha: &RatFunc, beta_k: &RatFunc, k: usize) -> Result<LVESubsystem, VariationalError> {
    if k < 2 {
        return Err(VariationalError::InvalidOrder { k, min: 2 });
    }
    Ok(LVESubsystem {
        alpha: alpha.clone(),
        beta_k: beta_k.clone(),
        order: k,
    })
}

/// Checks `Φ_k′ = M_k·Φ_k` formally, with `M_k = lve_matrix(k, [α, β₂, β₃][..k])`.
pub fn verify_fundamental_matrix(
    k: usize,
    alpha: &RatFunc,
    beta2: &RatFunc,
    beta3: &RatFunc,
) -> Result<bool, VariationalError> {
    let phi = fundamental_matrix(k).ok_or(VariationalError::UnsupportedOrder(k))?;
    verify_formal_matrix(k, &phi, alpha, beta2, beta3)
}

/// [`verify_fundamental_matrix`] for a caller-supplied `Φ`.
pub fn verify_formal_matrix(
    k: usize,
    phi: &FormalMatrix,
    alpha: &RatFunc,
    beta2: &RatFunc,
    beta3: &RatFunc,
) -> Result<bool, VariationalError> {
    let betas = [alpha.clone(), beta2.clone(), beta3.clone()];
    let m = lve_matrix(k, &betas[..k])?;
    let d = FormalDerivation {
        alpha: alpha.clone(),
        beta2: beta2.clone(),
        beta3: beta3.clone(),
    };
    Ok(phi.len() == k && satisfies_system(phi, &m, &d))
}
