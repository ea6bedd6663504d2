use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::VariationalError;
use crate::algebra::{Rat, RatFunc};

/// One term `coefficient · β_{beta_index} · ∏ φ_m` of a VE row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VETerm {
    pub beta_index: usize,
    /// φ-indices with repetition, sorted ascending.
    pub monomial: Vec<usize>,
    pub coefficient: BigUint,
}

impl VETerm {
    /// Weighted φ-degree `Σ indices`.
    pub fn weight(&self) -> usize {
        self.monomial.iter().sum()
    }
}

/// Right-hand sides of `φ_j′ = Σ_i β_i·B_{j,i}(φ₁, …)` for `j = 1..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VEStructure {
    pub order: usize,
    /// `rows[j − 1]` is the right-hand side of `φ_j′`.
    pub rows: Vec<Vec<VETerm>>,
}

impl VEStructure {
    pub fn row(&self, j: usize) -> &[VETerm] {
        &self.rows[j - 1]
    }

    /// Evaluates row `j` with the given β's (1-based) and φ's (1-based).
    pub fn eval_row(&self, j: usize, betas: &[RatFunc], phis: &[RatFunc]) -> RatFunc {
        self.row(j).iter().fold(RatFunc::zero(), |acc, t| {
            let mut term = betas[t.beta_index - 1].scale(&Rat::from_integer(t.coefficient.clone().into()));
            for &m in &t.monomial {
                term = &term * &phis[m - 1];
            }
            &acc + &term
        })
    }

    /// Row `j` rendered as `phi_j' = ...`.
    pub fn fmt_row(&self, j: usize) -> String {
        let rhs: Vec<String> = self
            .row(j)
            .iter()
            .map(|t| {
                let mut parts = Vec::new();
                if !t.coefficient.is_one() {
                    parts.push(t.coefficient.to_string());
                }
                parts.push(format!("b{}", t.beta_index));
                let mut idx = 0;
                while idx < t.monomial.len() {
                    let m = t.monomial[idx];
                    let e = t.monomial[idx..].iter().take_while(|&&v| v == m).count();
                    parts.push(if e == 1 { format!("phi{m}") } else { format!("phi{m}^{e}") });
                    idx += e;
                }
                parts.join("*")
            })
            .collect();
        format!("phi{j}' = {}", rhs.join(" + "))
    }
}

impl fmt::Display for VEStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.order {
            writeln!(f, "{}", self.fmt_row(j))?;
        }
        Ok(())
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Partitions of `n` into exactly `parts` positive parts, non-increasing.
fn partitions(n: usize, parts: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if n == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if n < parts {
        return;
    }
    let hi = max.min(n - (parts - 1));
    for first in (1..=hi).rev() {
        prefix.push(first);
        partitions(n - first, parts - 1, first, prefix, out);
        prefix.pop();
    }
}

/// Terms of the partial Bell polynomial `B_{j,i}`, each as (monomial, coefficient).
pub fn partial_bell(j: usize, i: usize) -> Vec<(Vec<usize>, BigUint)> {
    let mut parts = Vec::new();
    partitions(j, i, j, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            let mut denom = BigUint::one();
            let mut idx = 0;
            while idx < p.len() {
                let r = p[idx];
                let m = p[idx..].iter().take_while(|&&v| v == r).count();
                denom *= factorial(m) * factorial(r).pow(m as u32);
                idx += m;
            }
            let coeff = factorial(j) / denom;
            (p, coeff)
        })
        .collect()
}

/// Structure of `VE_1 … VE_k` along an invariant graph.
pub fn ve_rhs(k: usize) -> Result<VEStructure, VariationalError> {
    if k < 1 {
        return Err(VariationalError::InvalidOrder { k, min: 1 });
    }
    let rows = (1..=k)
        .map(|j| {
            let mut row: Vec<VETerm> = (1..=j)
                .flat_map(|i| {
                    partial_bell(j, i).into_iter().map(move |(monomial, coefficient)| VETerm {
                        beta_index: i,
                        monomial,
                        coefficient,
                    })
                })
                .collect();
            row.sort();
            row
        })
        .collect();
    Ok(VEStructure { order: k, rows })
}
