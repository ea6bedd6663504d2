use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::squarefree::squarefree_part;
use super::{int, AlgebraError, Poly, Rat};

/// All rational roots of `p`, with multiplicity, in increasing order.
///
/// Real roots of the squarefree part are isolated with a Sturm sequence and
/// bisected until each interval is narrower than `1/|lc|` of the primitive
/// integer polynomial; a rational root `r/s` must have `s | lc`, so each such
/// interval holds at most one candidate, which is then checked exactly.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rat>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial("rational_roots"));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sqf = squarefree_part(p);
    let ints = sqf.to_primitive_integer();
    let lc = ints.last().cloned().expect("non-constant");
    let sqf = Poly::from_coeffs(ints.iter().cloned().map(Rat::from_integer).collect());

    let sturm = sturm_sequence(&sqf);
    let bound = cauchy_bound(&sqf);
    let lc_rat = Rat::from_integer(lc.clone());

    let mut distinct = Vec::new();
    let mut stack = vec![(-&bound - Rat::one(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        if (&hi - &lo) * &lc_rat < Rat::one() {
            // The single candidate k/lc with k the integer in (lc·lo, lc·hi].
            let k = (&hi * &lc_rat).floor();
            if k > &lo * &lc_rat {
                let cand = k / &lc_rat;
                if sqf.eval(&cand).is_zero() {
                    distinct.push(cand);
                }
            }
            continue;
        }
        let mid = (&lo + &hi) / int(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    distinct.sort();

    let mut roots = Vec::new();
    for r in distinct {
        let lin = Poly::from_coeffs(vec![-r.clone(), Rat::one()]);
        let mut rest = p.clone();
        while let Some(q) = rest.div_exact(&lin) {
            roots.push(r.clone());
            rest = q;
        }
    }
    Ok(roots)
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rat) -> i64 {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

/// `1 + max |a_i / a_n|`, an upper bound on the modulus of every root.
fn cauchy_bound(p: &Poly) -> Rat {
    let lc = p.leading_coeff().abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rat::zero);
    Rat::from_integer(BigInt::one()) + max.ceil()
}
