use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use varobs_core::algebra::{int, rat, Poly, Rat, RatFunc};
use varobs_core::analyzer::{analyze, Chart, H1Interpretation, InconclusiveReason, Verdict};
use varobs_core::planar::{verify_darboux_integral, BivarPoly, BivarRatFunc, PlanarField};
use varobs_core::risch::{solution_bounds, solve_with_bounds, verify_solution, KaltofenCase};

fn example1(a: Rat, b: Rat, c: Rat) -> PlanarField {
    let p = BivarPoly::from_terms([((3, 0), int(1)), ((0, 1), int(-1))]);
    let q = BivarPoly::from_terms([((2, 1), int(1)), ((1, 1), -c), ((0, 1), -b), ((0, 2), -a)]);
    PlanarField::new(p, q).unwrap()
}

/// `(x² − y)∂x + y(x + 1)∂y`
fn elementary_field() -> PlanarField {
    let p = BivarPoly::from_terms([((2, 0), int(1)), ((0, 1), int(-1))]);
    let q = BivarPoly::from_terms([((1, 1), int(1)), ((0, 1), int(1))]);
    PlanarField::new(p, q).unwrap()
}

#[test]
fn example1_generic_triples_are_obstructed_at_order_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 20 {
        let mut r = || rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        let (a, b, c) = (r(), r(), r());
        if b == int(0) || c == -(&a * &b) / int(3) {
            continue;
        }
        let cert = analyze(&example1(a, b, c), &RatFunc::zero(), 2, false, H1Interpretation::Literal).unwrap();
        assert_eq!(cert.verdict, Verdict::NotRationallyIntegrable { k: 2 });
        assert_eq!(cert.orders[0].outcome.case, Some(KaltofenCase::TwoD));
        done += 1;
    }
}

#[test]
fn elementary_family_up_to_order_ten() {
    let start = Instant::now();
    let x = elementary_field();
    let cert = analyze(&x, &RatFunc::zero(), 10, false, H1Interpretation::Literal).unwrap();
    assert_eq!(
        cert.verdict,
        Verdict::Inconclusive {
            reason: InconclusiveReason::AllOrdersElementary(10)
        }
    );
    assert_eq!(cert.orders.len(), 9);
    for r in &cert.orders {
        assert!(verify_solution(&r.equation, r.outcome.solution().unwrap()), "k = {}", r.k);
    }
    assert!(start.elapsed().as_secs() < 30);

    // R = (x + y)/y, S = −(x + 1)/(x + y)
    let xy = BivarPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1)]);
    let r = BivarRatFunc::new(xy.clone(), BivarPoly::y());
    let s = BivarRatFunc::new(BivarPoly::from_int_terms(&[(1, 0, -1), (0, 0, -1)]), xy);
    assert!(verify_darboux_integral(&x, &r, &s));
    assert!(!verify_darboux_integral(&x, &s, &r));
}

#[test]
fn obstruction_survives_widened_search() {
    for (a, b, c) in [(1, 1, 1), (2, -1, 5), (-3, 2, 0)] {
        let cert = analyze(&example1(int(a), int(b), int(c)), &RatFunc::zero(), 2, false, H1Interpretation::Literal)
            .unwrap();
        let Verdict::NotRationallyIntegrable { k } = cert.verdict else {
            panic!("expected an obstruction for {a}, {b}, {c}");
        };
        assert!(cert.h1.holds);
        let record = cert.orders.iter().find(|r| r.k == k).unwrap();
        assert!(!record.outcome.has_solution());
        let eq = &record.equation;
        let bounds = solution_bounds(eq);
        let e = &(&bounds.denominator * eq.a.den()) * eq.b.den();
        let n = bounds.numerator_degree.unwrap_or(0) + e.degree().unwrap() + 10;
        assert_eq!(solve_with_bounds(eq, &e, n), None);
    }
}

#[test]
fn witnessing_order_is_minimal() {
    let x = example1(int(1), int(1), int(1));
    let cert = analyze(&x, &RatFunc::zero(), 6, false, H1Interpretation::Literal).unwrap();
    assert_eq!(cert.verdict, Verdict::NotRationallyIntegrable { k: 2 });
    assert_eq!(cert.orders.len(), 1);
}

#[test]
fn infinity_chart_and_role_swap() {
    // X̃ = z₂∂₁ + z₁∂₂ becomes P = x² − 1, Q = xy, invariant line y = 0.
    let tilde = PlanarField::new(BivarPoly::y(), BivarPoly::x()).unwrap();
    let cert = analyze(&tilde, &RatFunc::zero(), 3, true, H1Interpretation::Literal).unwrap();
    assert_eq!(cert.chart, Chart::Infinity { swapped: false });
    assert_eq!(cert.alpha, RatFunc::new(Poly::x(), Poly::from_ints(&[-1, 0, 1])));

    let swapped = PlanarField::new(BivarPoly::zero(), BivarPoly::y()).unwrap();
    let (analyzed, flag) = varobs_core::planar::to_infinity_chart(&swapped);
    assert!(flag);
    assert!(!analyzed.p().is_zero());
}

fn assert_sorted(v: &Value) {
    match v {
        Value::Object(m) => {
            let keys: Vec<_> = m.keys().collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
            m.values().for_each(assert_sorted);
        }
        Value::Array(a) => a.iter().for_each(assert_sorted),
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "non-integer number {n}"),
        _ => {}
    }
}

#[test]
fn canonical_json_is_deterministic() {
    let run = || {
        analyze(&elementary_field(), &RatFunc::zero(), 4, false, H1Interpretation::Corrected)
            .unwrap()
            .to_canonical_string()
    };
    let first = run();
    assert_eq!(first, run());
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_sorted(&v);
    assert_eq!(v["verdict"]["status"], "inconclusive");
    assert_eq!(v["h1"]["interpretation"], "corrected");
    assert_eq!(v["orders"].as_array().unwrap().len(), 3);

    let cert = analyze(&example1(int(1), int(1), int(1)), &RatFunc::zero(), 2, false, H1Interpretation::Literal)
        .unwrap();
    let v = cert.to_json();
    assert_eq!(v["verdict"], serde_json::json!({"k": 2, "status": "not-rationally-integrable"}));
    assert_eq!(v["orders"][0]["outcome"]["case"], "2d");
    assert_eq!(v["field"]["p"], "x^3 - y");
}
