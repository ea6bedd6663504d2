mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use varobs_core::algebra::{rat, RatFunc};
use varobs_core::variational::{
    fundamental_matrix, partial_bell, ve_rhs, verify_formal_matrix, verify_fundamental_matrix, FormalWord,
};

use common::ratfunc_strategy;
use common::taylor::{fixed_foliation, taylor_rows, ve_rows};

/// Bell numbers from the Bell triangle.
fn bell_numbers(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::from(1u32)];
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..=n {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

#[test]
fn bell_sums() {
    let bell = bell_numbers(8);
    for j in 1..=8 {
        let total: BigUint = (1..=j).flat_map(|i| partial_bell(j, i)).map(|(_, c)| c).sum();
        assert_eq!(total, bell[j], "j = {j}");
    }
}

#[test]
fn rows_match_taylor_recursion() {
    let f = fixed_foliation();
    for k in 1..=5 {
        let ve = ve_rhs(k).unwrap();
        assert_eq!(ve_rows(&ve, &f, k), taylor_rows(&f, k), "k = {k}");
    }
}

/// Adds a stray `ω⁵` to one entry; detectable whenever `α ≢ 0`.
fn corrupt(k: usize, i: usize, j: usize) -> Vec<Vec<FormalWord>> {
    let mut phi = fundamental_matrix(k).unwrap();
    phi[i][j] = &phi[i][j] + &FormalWord::term(RatFunc::one(), 0, 0, 5);
    phi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fundamental_matrices_are_formal_solutions(
        a in ratfunc_strategy(3, 3, 6).prop_filter("nonzero", |a| !a.is_zero()),
        b2 in ratfunc_strategy(3, 3, 6),
        b3 in ratfunc_strategy(3, 3, 6),
        pick in 0usize..6,
    ) {
        prop_assert!(verify_fundamental_matrix(2, &a, &b2, &b3).unwrap());
        prop_assert!(verify_fundamental_matrix(3, &a, &b2, &b3).unwrap());
        // Corrupt one lower-triangular entry.
        let (i, j) = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)][pick];
        prop_assert!(!verify_formal_matrix(3, &corrupt(3, i, j), &a, &b2, &b3).unwrap());
        let (i, j) = [(0, 0), (1, 0), (1, 1)][pick % 3];
        prop_assert!(!verify_formal_matrix(2, &corrupt(2, i, j), &a, &b2, &b3).unwrap());
    }
}

#[test]
fn zero_coefficients_are_fine() {
    let z = RatFunc::zero();
    assert!(verify_fundamental_matrix(3, &z, &z, &z).unwrap());
}

#[test]
fn sign_flip_below_the_diagonal_is_caught() {
    let (a, b2, b3) = (common::rf(&[1, 1], &[0, 0, 1]), common::rf(&[2], &[0, 0, 0, 1]), common::c(5));
    let mut phi = fundamental_matrix(3).unwrap();
    phi[2][1] = phi[2][1].scale_rat(&rat(-1, 1));
    assert!(!verify_formal_matrix(3, &phi, &a, &b2, &b3).unwrap());
    let mut phi = fundamental_matrix(2).unwrap();
    phi[1][0] = phi[1][0].scale_rat(&rat(-1, 1));
    assert!(!verify_formal_matrix(2, &phi, &a, &b2, &b3).unwrap());
}
