use std::collections::BTreeMap;

use serde_json::{json, Value};
use varobs_core::algebra::format_rat;
use varobs_core::analyzer::{Certificate, H1Interpretation};
use varobs_core::risch::RischOutcome;
use varobs_core::{Rat, RischEquation};

/// Options echoed into the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub kmax: usize,
    pub at_infinity: bool,
    pub h1: H1Interpretation,
    pub phi: String,
    pub p: String,
    pub q: String,
}

fn tool() -> Value {
    json!({ "name": "varobs", "version": env!("CARGO_PKG_VERSION") })
}

/// Certificate JSON plus tool metadata, input text and options.
pub fn analysis_report(cert: &Certificate, options: &AnalysisOptions, lets: &BTreeMap<String, Rat>) -> Value {
    let mut v = cert.to_json();
    let obj = v.as_object_mut().expect("certificate is an object");
    obj.insert("tool".into(), tool());
    obj.insert(
        "input".into(),
        json!({ "p": options.p, "q": options.q, "phi": options.phi }),
    );
    obj.insert(
        "options".into(),
        json!({
            "kmax": options.kmax,
            "at_infinity": options.at_infinity,
            "h1": options.h1.to_string(),
            "lets": lets.iter().map(|(k, v)| (k.clone(), Value::String(format_rat(v)))).collect::<serde_json::Map<_, _>>(),
        }),
    );
    v
}

pub fn risch_report(eq: &RischEquation, outcome: &RischOutcome, order: usize) -> Value {
    let mut o = json!({
        "solver": outcome.solver,
    });
    let m = o.as_object_mut().expect("object");
    match (outcome.solution(), outcome.reason()) {
        (Some(h), _) => {
            m.insert("status".into(), json!("rational-solution"));
            m.insert("solution".into(), json!(h.to_string()));
        }
        (None, reason) => {
            m.insert("status".into(), json!("no-rational-solution"));
            m.insert("reason".into(), json!(reason));
        }
    }
    if let Some(c) = outcome.case {
        m.insert("case".into(), json!(c));
    }
    json!({
        "tool": tool(),
        "order": order,
        "equation": { "a": eq.a.to_string(), "b": eq.b.to_string() },
        "outcome": o,
    })
}

/// Plain-text rendering of a certificate.
pub(crate) fn summary(cert: &Certificate) -> String {
    let (p, q) = cert.analyzed.fmt_vars("x", "y");
    let h1 = &cert.h1;
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut s = format!(
        "chart: {}\nfield: P = {p}, Q = {q}\ncurve: y = {}\nalpha = {}\nH1 ({}): {} (pole of order > 1: {}, degree condition: {}, integer residues: {})\n",
        cert.chart,
        cert.phi,
        cert.alpha,
        h1.interpretation,
        if h1.holds { "holds" } else { "fails" },
        yn(h1.has_high_order_finite_pole),
        yn(h1.degree_condition),
        yn(h1.residues_all_integer),
    );
    for r in &cert.orders {
        let result = match r.outcome.solution() {
            Some(h) => format!("rational solution {h}"),
            None => format!("no rational solution ({})", r.outcome.reason().expect("unsolved")),
        };
        let case = r.outcome.case.map(|c| format!(" [case {c}]")).unwrap_or_default();
        s.push_str(&format!("k = {}: {} -> {result}{case}\n", r.k, r.equation));
    }
    s.push_str(&format!("verdict: {}\n", cert.verdict));
    s
}
