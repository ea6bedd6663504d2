#![allow(dead_code)]

pub mod gen;
pub mod taylor;

use proptest::prelude::*;
use varobs_core::algebra::{int, Poly, RatFunc};

pub fn poly_strategy(max_len: usize, bound: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-bound..=bound, 0..=max_len).prop_map(|c| Poly::from_ints(&c))
}

pub fn nonzero_poly(max_len: usize, bound: i64) -> impl Strategy<Value = Poly> {
    poly_strategy(max_len, bound).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc_strategy(num_len: usize, den_len: usize, bound: i64) -> impl Strategy<Value = RatFunc> {
    (poly_strategy(num_len, bound), nonzero_poly(den_len, bound)).prop_map(|(n, d)| RatFunc::new(n, d))
}

pub fn rf(n: &[i64], d: &[i64]) -> RatFunc {
    RatFunc::new(Poly::from_ints(n), Poly::from_ints(d))
}

pub fn c(v: i64) -> RatFunc {
    RatFunc::constant(int(v))
}
