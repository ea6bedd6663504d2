//! The decision procedure: check (H1) on `α = β₁`, then look for the first
//! order `k` whose Risch equation `y′ + (k−1)α·y = β_k` has no rational
//! solution, and record everything in a [`Certificate`].

mod json;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{residues, squarefree_decompose, Poly, Rat, RatFunc};
use crate::planar::{foliation_derivatives, to_infinity_chart, FieldError, PlanarField};
use crate::risch::{
    build_risch, solve_general, solve_xk_specialized, KaltofenInstance, RischEquation, RischError, RischOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzerError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Risch(#[from] RischError),
    #[error("k_max must be at least 2, got {0}")]
    InvalidKMax(usize),
    #[error("solvers disagree at order {k}: general {general}, specialized {specialized}")]
    SolverDisagreement { k: usize, general: String, specialized: String },
}

/// Reading of the degree alternative in (H1) for `α = R/S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum H1Interpretation {
    /// `deg R ≤ deg S`, as printed.
    #[default]
    Literal,
    /// `deg R ≥ deg S`, i.e. `exp(∫α)` irregular at infinity.
    Corrected,
}

impl fmt::Display for H1Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            H1Interpretation::Literal => "literal",
            H1Interpretation::Corrected => "corrected",
        })
    }
}

impl FromStr for H1Interpretation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "literal" => Ok(H1Interpretation::Literal),
            "corrected" => Ok(H1Interpretation::Corrected),
            other => Err(format!("unknown H1 interpretation '{other}' (expected literal or corrected)")),
        }
    }
}

/// Squarefree factor of `den(α)` and its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleRecord {
    pub factor: Poly,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueRecord {
    pub factor: Poly,
    /// `None` for irrational residues.
    pub residue: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Report {
    pub has_high_order_finite_pole: bool,
    pub degree_condition: bool,
    pub residues_all_integer: bool,
    pub holds: bool,
    pub interpretation: H1Interpretation,
    pub poles: Vec<PoleRecord>,
    pub residues: Vec<ResidueRecord>,
}

pub fn check_h1(alpha: &RatFunc, interpretation: H1Interpretation) -> H1Report {
    let poles: Vec<PoleRecord> = squarefree_decompose(alpha.den())
        .expect("denominator is nonzero")
        .into_iter()
        .map(|(factor, order)| PoleRecord { factor, order })
        .collect();
    let has_high_order_finite_pole = poles.iter().any(|p| p.order > 1);
    let degree_condition = match alpha.num().degree() {
        None => false,
        Some(r) => {
            let s = alpha.den().degree().expect("nonzero");
            match interpretation {
                H1Interpretation::Literal => r <= s,
                H1Interpretation::Corrected => r >= s,
            }
        }
    };
    let report = residues(alpha);
    let residues_all_integer = report.all_integer;
    H1Report {
        has_high_order_finite_pole,
        degree_condition,
        residues_all_integer,
        holds: (has_high_order_finite_pole || degree_condition) && residues_all_integer,
        interpretation,
        poles,
        residues: report
            .per_factor
            .into_iter()
            .map(|f| ResidueRecord {
                factor: f.factor,
                residue: f.residue,
            })
            .collect(),
    }
}

/// Runs the Risch equation of order `k`. Returns whether (Hk) holds, i.e.
/// there is no rational solution, and the outcome. Instances of the `x^k`
/// shape go through both solvers, which must agree; the specialized outcome
/// (carrying the case tag) is returned then.
pub fn check_hk(alpha: &RatFunc, beta_k: &RatFunc, k: usize) -> Result<(bool, RischOutcome), AnalyzerError> {
    let eq = build_risch(alpha, beta_k, k)?;
    let general = solve_general(&eq);
    let outcome = match KaltofenInstance::from_equation(&eq) {
        Some(inst) => {
            let specialized = solve_xk_specialized(&inst);
            if specialized.solution() != general.solution() {
                let show = |o: &RischOutcome| match o.solution() {
                    Some(h) => h.to_string(),
                    None => "no rational solution".to_string(),
                };
                return Err(AnalyzerError::SolverDisagreement {
                    k,
                    general: show(&general),
                    specialized: show(&specialized),
                });
            }
            specialized
        }
        None => general,
    };
    Ok((!outcome.has_solution(), outcome))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    Original,
    /// Chart at infinity; `swapped` when `P̃ ≡ 0` forced exchanging `z₁`, `z₂`.
    Infinity { swapped: bool },
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::Original => "original",
            Chart::Infinity { swapped: false } => "infinity",
            Chart::Infinity { swapped: true } => "infinity-swapped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRecord {
    pub k: usize,
    pub beta: RatFunc,
    pub equation: RischEquation,
    pub outcome: RischOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    H1Failed,
    AllOrdersElementary(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotRationallyIntegrable { k: usize },
    Inconclusive { reason: InconclusiveReason },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotRationallyIntegrable { k } => write!(f, "NotRationallyIntegrable{{k={k}}}"),
            Verdict::Inconclusive {
                reason: InconclusiveReason::H1Failed,
            } => f.write_str("Inconclusive{H1Failed}"),
            Verdict::Inconclusive {
                reason: InconclusiveReason::AllOrdersElementary(k),
            } => write!(f, "Inconclusive{{AllOrdersElementary({k})}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Field as given.
    pub field: PlanarField,
    /// Field in the chart where the analysis ran.
    pub analyzed: PlanarField,
    pub chart: Chart,
    pub phi: RatFunc,
    pub alpha: RatFunc,
    pub h1: H1Report,
    pub orders: Vec<OrderRecord>,
    pub verdict: Verdict,
}

impl Certificate {
    /// Canonical JSON: sorted keys, rationals and rational functions as strings.
    pub fn to_json(&self) -> serde_json::Value {
        json::certificate(self)
    }

    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("string keys")
    }
}

pub fn analyze(
    field: &PlanarField,
    phi: &RatFunc,
    k_max: usize,
    at_infinity: bool,
    interpretation: H1Interpretation,
) -> Result<Certificate, AnalyzerError> {
    if k_max < 2 {
        return Err(AnalyzerError::InvalidKMax(k_max));
    }
    let (analyzed, chart) = if at_infinity {
        let (x, swapped) = to_infinity_chart(field);
        (x, Chart::Infinity { swapped })
    } else {
        (field.clone(), Chart::Original)
    };
    let betas = foliation_derivatives(&analyzed, phi, k_max)?;
    let alpha = betas[0].clone();
    let h1 = check_h1(&alpha, interpretation);
    let mut orders = Vec::new();
    let verdict = if !h1.holds {
        Verdict::Inconclusive {
            reason: InconclusiveReason::H1Failed,
        }
    } else {
        let mut verdict = Verdict::Inconclusive {
            reason: InconclusiveReason::AllOrdersElementary(k_max),
        };
        for k in 2..=k_max {
            let beta = betas[k - 1].clone();
            let (hk, outcome) = check_hk(&alpha, &beta, k)?;
            orders.push(OrderRecord {
                k,
                equation: build_risch(&alpha, &beta, k)?,
                beta,
                outcome,
            });
            if hk {
                verdict = Verdict::NotRationallyIntegrable { k };
                break;
            }
        }
        verdict
    };
    Ok(Certificate {
        field: field.clone(),
        analyzed,
        chart,
        phi: phi.clone(),
        alpha,
        h1,
        orders,
        verdict,
    })
}
