//! Seeded random instances for the Risch solvers.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use varobs_core::algebra::{int, rat, Poly, Rat, RatFunc};
use varobs_core::risch::{verify_solution, KaltofenInstance, RischEquation};

pub fn small_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let d = *[1, 1, 1, 2, 3].choose(rng).unwrap();
    rat(rng.gen_range(-bound..=bound), d)
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    loop {
        let r = small_rat(rng, bound);
        if r != int(0) {
            return r;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=d).map(|_| small_rat(rng, bound)).collect())
}

pub fn linear(root: i64) -> Poly {
    Poly::from_ints(&[-root, 1])
}

/// Coefficient with simple poles of integer residue, plus optionally a
/// polynomial part and a higher-order pole. Returns `(a, has_irregular_part)`.
pub fn random_coefficient(rng: &mut ChaCha8Rng) -> (RatFunc, bool) {
    let mut roots: Vec<i64> = (-4..=4).collect();
    roots.shuffle(rng);
    let mut a = RatFunc::zero();
    for &r in &roots[..rng.gen_range(0..=2)] {
        let l = *[-2, -1, 1, 2, 3].choose(rng).unwrap();
        a = &a + &RatFunc::new(Poly::constant(int(l)), linear(r));
    }
    let mut irregular = false;
    if rng.gen_bool(0.5) {
        let p = random_poly(rng, 1, 3);
        irregular |= !p.is_zero();
        a = &a + &RatFunc::from_poly(p);
    }
    if rng.gen_bool(0.5) {
        let s = roots[3];
        let e = rng.gen_range(2..=3);
        let c = nonzero_rat(rng, 3);
        a = &a + &RatFunc::new(Poly::constant(c), linear(s).pow(e));
        irregular = true;
    }
    (a, irregular)
}

pub fn random_ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    let num = random_poly(rng, 3, 4);
    let mut den = Poly::one();
    for _ in 0..rng.gen_range(0..=2) {
        den = &den * &linear(rng.gen_range(-3..=3)).pow(rng.gen_range(1..=2));
    }
    RatFunc::new(num, den)
}

pub fn homogeneous_solution(a: &RatFunc, y: &RatFunc) -> bool {
    verify_solution(&RischEquation::new(a.clone(), RatFunc::zero()), y)
}

/// `A` with `A(0) ≠ 0`, `deg A < k`; sometimes with integer `k − a_n > 0`.
pub fn random_a(rng: &mut ChaCha8Rng, k: usize) -> Poly {
    let n = rng.gen_range(0..k);
    let mut cs: Vec<Rat> = (0..=n).map(|_| small_rat(rng, 4)).collect();
    cs[0] = nonzero_rat(rng, 4);
    if n > 0 {
        cs[n] = if rng.gen_bool(0.5) {
            int(rng.gen_range(-2..k as i64).max(1))
        } else {
            nonzero_rat(rng, 4)
        };
    }
    Poly::from_coeffs(cs)
}

pub fn random_b(rng: &mut ChaCha8Rng, k: usize) -> Option<Poly> {
    if rng.gen_bool(0.2) {
        return None;
    }
    let m = rng.gen_range(0..k);
    let mut cs: Vec<Rat> = (0..=m).map(|_| small_rat(rng, 4)).collect();
    cs[0] = nonzero_rat(rng, 4);
    Some(Poly::from_coeffs(cs))
}

/// Instance built backwards from `Y = 2 + (2k/a₀)x^{k−1} + ⋯`, which makes
/// `2x^k·B = x^kY′ + (A − kx^{k−1})Y − 2A` divisible by `x^k`.
pub fn planted_instance(rng: &mut ChaCha8Rng, k: usize) -> Option<KaltofenInstance> {
    let a = random_a(rng, k);
    let mut ys = vec![int(0); k + 1];
    ys[0] = int(2);
    ys[k - 1] = int(2 * k as i64) / a.coeff(0);
    ys[k] = if rng.gen_bool(0.5) { small_rat(rng, 3) } else { int(0) };
    let y = Poly::from_coeffs(ys);
    let xk = Poly::monomial(int(1), k);
    let w = &(&(&xk * &y.derivative()) + &(&(&a - &Poly::monomial(int(k as i64), k - 1)) * &y)) - &a.scale(&int(2));
    let b = w.div_exact(&xk.scale(&int(2)))?;
    KaltofenInstance::new(a, Some(b), k).ok()
}

pub fn random_instance(rng: &mut ChaCha8Rng) -> KaltofenInstance {
    loop {
        let k = rng.gen_range(2..=6);
        let inst = if rng.gen_bool(0.4) {
            planted_instance(rng, k)
        } else {
            KaltofenInstance::new(random_a(rng, k), random_b(rng, k), k).ok()
        };
        if let Some(i) = inst {
            return i;
        }
    }
}
