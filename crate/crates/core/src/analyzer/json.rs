use serde_json::{json, Map, Value};

use super::{Certificate, H1Report, InconclusiveReason, OrderRecord, Verdict};
use crate::algebra::format_rat;
use crate::planar::PlanarField;
use crate::risch::{RischOutcome, RischStatus};

fn field(x: &PlanarField) -> Value {
    let (p, q) = x.fmt_vars("x", "y");
    json!({ "p": p, "q": q })
}

fn h1(r: &H1Report) -> Value {
    json!({
        "interpretation": r.interpretation.to_string(),
        "has_high_order_finite_pole": r.has_high_order_finite_pole,
        "degree_condition": r.degree_condition,
        "residues_all_integer": r.residues_all_integer,
        "holds": r.holds,
        "poles": r.poles.iter().map(|p| json!({ "factor": p.factor.to_string(), "order": p.order })).collect::<Vec<_>>(),
        "residues": r.residues.iter().map(|f| json!({
            "factor": f.factor.to_string(),
            "residue": f.residue.as_ref().map_or(Value::Null, |v| Value::String(format_rat(v))),
        })).collect::<Vec<_>>(),
    })
}

pub(crate) fn outcome(o: &RischOutcome) -> Value {
    let mut m = Map::new();
    m.insert("solver".into(), json!(o.solver));
    match &o.status {
        RischStatus::RationalSolution(h) => {
            m.insert("status".into(), json!("rational-solution"));
            m.insert("solution".into(), json!(h.to_string()));
        }
        RischStatus::NoRationalSolution(reason) => {
            m.insert("status".into(), json!("no-rational-solution"));
            m.insert("reason".into(), json!(reason));
        }
    }
    if let Some(c) = o.case {
        m.insert("case".into(), json!(c));
    }
    Value::Object(m)
}

fn order(alpha: &str, r: &OrderRecord) -> Value {
    json!({
        "k": r.k,
        "alpha": alpha,
        "beta": r.beta.to_string(),
        "risch": { "a": r.equation.a.to_string(), "b": r.equation.b.to_string() },
        "outcome": outcome(&r.outcome),
    })
}

pub(crate) fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::NotRationallyIntegrable { k } => json!({ "status": "not-rationally-integrable", "k": k }),
        Verdict::Inconclusive {
            reason: InconclusiveReason::H1Failed,
        } => json!({ "status": "inconclusive", "reason": "h1-failed" }),
        Verdict::Inconclusive {
            reason: InconclusiveReason::AllOrdersElementary(k),
        } => json!({ "status": "inconclusive", "reason": "all-orders-elementary", "k_max": k }),
    }
}

pub(crate) fn certificate(c: &Certificate) -> Value {
    let alpha = c.alpha.to_string();
    json!({
        "field": field(&c.field),
        "analyzed_field": field(&c.analyzed),
        "chart": c.chart.to_string(),
        "phi": c.phi.to_string(),
        "h1": h1(&c.h1),
        "orders": c.orders.iter().map(|r| order(&alpha, r)).collect::<Vec<_>>(),
        "verdict": verdict(&c.verdict),
    })
}
