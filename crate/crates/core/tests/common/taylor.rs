//! Variational rows from direct substitution of `y = Σ ε^j φ_j / j!` into
//! `y′ = f(x, y)`; row `j` is `j!` times the coefficient of `ε^j`.

use std::collections::BTreeMap;

use varobs_core::algebra::{int, Poly, Rat};
use varobs_core::planar::BivarPoly;
use varobs_core::variational::VEStructure;

/// Polynomial in `φ₁..φ_k` (exponent vector) with coefficients in ℚ[x].
pub type PhiPoly = BTreeMap<Vec<u32>, Poly>;

fn add_into(acc: &mut PhiPoly, key: Vec<u32>, c: Poly) {
    let entry = acc.entry(key.clone()).or_insert_with(Poly::zero);
    *entry = &*entry + &c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn mul(a: &PhiPoly, b: &PhiPoly) -> PhiPoly {
    let mut out = PhiPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            add_into(&mut out, key, ca * cb);
        }
    }
    out
}

/// Series in `ε` truncated after `ε^k`, each coefficient a [`PhiPoly`].
type Series = Vec<PhiPoly>;

fn series_mul(a: &Series, b: &Series, k: usize) -> Series {
    let mut out = vec![PhiPoly::new(); k + 1];
    for i in 0..=k {
        for j in 0..=k - i {
            for (key, c) in mul(&a[i], &b[j]) {
                add_into(&mut out[i + j], key, c);
            }
        }
    }
    out
}

/// Rows `1..=k` from the coefficients of `ε^j` in `f(x, Σ_{j≤k} ε^j φ_j)`; `f(x, 0)` must vanish.
pub fn taylor_rows(f: &BivarPoly, k: usize) -> Vec<PhiPoly> {
    let mut y: Series = vec![PhiPoly::new(); k + 1];
    let mut fact = Rat::from_integer(1.into());
    let mut facts = vec![fact.clone()];
    for (j, slot) in y.iter_mut().enumerate().skip(1) {
        fact *= int(j as i64);
        facts.push(fact.clone());
        let mut e = vec![0u32; k];
        e[j - 1] = 1;
        slot.insert(e, Poly::constant(fact.recip()));
    }
    let mut one: Series = vec![PhiPoly::new(); k + 1];
    one[0].insert(vec![0; k], Poly::one());
    let max_b = f.degree_y().unwrap_or(0) as usize;
    let mut powers = vec![one];
    for b in 1..=max_b {
        let next = series_mul(&powers[b - 1], &y, k);
        powers.push(next);
    }
    let mut out: Series = vec![PhiPoly::new(); k + 1];
    for (&(a, b), c) in f.terms() {
        let xa = Poly::monomial(c.clone(), a as usize);
        for (n, slot) in out.iter_mut().enumerate() {
            for (key, p) in &powers[b as usize][n] {
                add_into(slot, key.clone(), &xa * p);
            }
        }
    }
    out.into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, row)| row.into_iter().map(|(key, p)| (key, p.scale(&facts[j]))).collect())
        .collect()
}

/// Instantiates VE rows with `β_i = i!·[y^i] f` in the same representation.
pub fn ve_rows(ve: &VEStructure, f: &BivarPoly, k: usize) -> Vec<PhiPoly> {
    let coeffs = f.coeffs_in_y();
    let mut fact = Rat::from_integer(1.into());
    let mut betas = Vec::new();
    for i in 1..=k {
        fact *= int(i as i64);
        betas.push(coeffs.get(i).cloned().unwrap_or_else(Poly::zero).scale(&fact));
    }
    (1..=k)
        .map(|j| {
            let mut row = PhiPoly::new();
            for t in ve.row(j) {
                let mut key = vec![0u32; k];
                for &m in &t.monomial {
                    key[m - 1] += 1;
                }
                let coeff = Rat::from_integer(t.coefficient.clone().into());
                add_into(&mut row, key, betas[t.beta_index - 1].scale(&coeff));
            }
            row
        })
        .collect()
}

/// Fixed polynomial foliation with `y = 0` invariant and nonzero `β₁..β₅`.
pub fn fixed_foliation() -> BivarPoly {
    BivarPoly::from_int_terms(&[(2, 1, 1), (1, 1, -1), (0, 1, -1), (0, 2, -1), (1, 3, 1), (0, 4, 2), (3, 5, 1)])
}
