use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{int, rat, Rat, RatFunc};

/// Exponents of `θ₂`, `θ₁`, `ω`, in that order, so that the map orders
/// monomials lexicographically with `θ₂ > θ₁ > ω`.
pub type FormalMonomial = (u32, u32, u32);

/// Polynomial in `ω`, `θ₁`, `θ₂` with coefficients in ℚ(x).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FormalWord {
    terms: BTreeMap<FormalMonomial, RatFunc>,
}

/// Derivation rules `ω′ = αω`, `θ₁′ = β₂ω`, `θ₂′ = β₃ω²` on ℚ(x)[ω, θ₁, θ₂].
#[derive(Clone, Debug)]
pub struct FormalDerivation {
    pub alpha: RatFunc,
    pub beta2: RatFunc,
    pub beta3: RatFunc,
}

impl FormalWord {
    pub fn zero() -> Self {
        FormalWord::default()
    }

    /// `c·θ₂^t2·θ₁^t1·ω^w`.
    pub fn term(c: RatFunc, t2: u32, t1: u32, w: u32) -> Self {
        let mut out = FormalWord::zero();
        out.add_term((t2, t1, w), c);
        out
    }

    pub fn constant(c: RatFunc) -> Self {
        FormalWord::term(c, 0, 0, 0)
    }

    pub fn omega() -> Self {
        FormalWord::term(RatFunc::one(), 0, 0, 1)
    }

    pub fn theta1() -> Self {
        FormalWord::term(RatFunc::one(), 0, 1, 0)
    }

    pub fn theta2() -> Self {
        FormalWord::term(RatFunc::one(), 1, 0, 0)
    }

    fn add_term(&mut self, key: FormalMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormalMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RatFunc) -> FormalWord {
        let mut out = FormalWord::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> FormalWord {
        self.scale(&RatFunc::constant(c.clone()))
    }

    /// Derivative under the rewrite rules of `d`.
    pub fn derivative(&self, d: &FormalDerivation) -> FormalWord {
        let mut out = FormalWord::zero();
        for (&(t2, t1, w), c) in &self.terms {
            out.add_term((t2, t1, w), c.derivative());
            if w > 0 {
                out.add_term((t2, t1, w), &d.alpha * &c.scale(&int(w as i64)));
            }
            if t1 > 0 {
                out.add_term((t2, t1 - 1, w + 1), &d.beta2 * &c.scale(&int(t1 as i64)));
            }
            if t2 > 0 {
                out.add_term((t2 - 1, t1, w + 2), &d.beta3 * &c.scale(&int(t2 as i64)));
            }
        }
        out
    }
}

impl fmt::Debug for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(t2, t1, w), c)| {
                let mut s = format!("({c})");
                for (name, e) in [("theta2", t2), ("theta1", t1), ("omega", w)] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{name}")),
                        _ => s.push_str(&format!("*{name}^{e}")),
                    }
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add<&FormalWord> for &FormalWord {
    type Output = FormalWord;
    fn add(self, rhs: &FormalWord) -> FormalWord {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Neg for &FormalWord {
    type Output = FormalWord;
    fn neg(self) -> FormalWord {
        self.scale_rat(&int(-1))
    }
}

impl Sub<&FormalWord> for &FormalWord {
    type Output = FormalWord;
    fn sub(self, rhs: &FormalWord) -> FormalWord {
        self + &(-rhs)
    }
}

impl Mul<&FormalWord> for &FormalWord {
    type Output = FormalWord;
    fn mul(self, rhs: &FormalWord) -> FormalWord {
        let mut out = FormalWord::zero();
        for (&(a2, a1, aw), c) in &self.terms {
            for (&(b2, b1, bw), d) in &rhs.terms {
                out.add_term((a2 + b2, a1 + b1, aw + bw), c * d);
            }
        }
        out
    }
}

forward_binop!(FormalWord, Add, add);
forward_binop!(FormalWord, Sub, sub);
forward_binop!(FormalWord, Mul, mul);

/// Square matrix of formal words.
pub type FormalMatrix = Vec<Vec<FormalWord>>;

fn omega_pow(e: u32) -> FormalWord {
    FormalWord::term(RatFunc::one(), 0, 0, e)
}

/// `Φ₂ = [[ω², 0], [ωθ₁, ω]]`; `Φ₃` adds the row
/// `[3/2·ωθ₁² + ωθ₂, 3ωθ₁, ω]` under `[[ω³,0,0],[ω²θ₁,ω²,0]]`.
pub fn fundamental_matrix(k: usize) -> Option<FormalMatrix> {
    let z = FormalWord::zero;
    let one = RatFunc::one;
    match k {
        2 => Some(vec![
            vec![omega_pow(2), z()],
            vec![FormalWord::term(one(), 0, 1, 1), omega_pow(1)],
        ]),
        3 => Some(vec![
            vec![omega_pow(3), z(), z()],
            vec![FormalWord::term(one(), 0, 1, 2), omega_pow(2), z()],
            vec![
                &FormalWord::term(RatFunc::constant(rat(3, 2)), 0, 2, 1) + &FormalWord::term(one(), 1, 0, 1),
                FormalWord::term(RatFunc::constant(int(3)), 0, 1, 1),
                omega_pow(1),
            ],
        ]),
        _ => None,
    }
}

/// `Φ′ = M·Φ` entrywise, with `M` over ℚ(x) and `Φ` formal.
pub fn satisfies_system(phi: &FormalMatrix, m: &[Vec<RatFunc>], d: &FormalDerivation) -> bool {
    let n = phi.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = phi[i][j].derivative(d);
            let rhs = (0..n).fold(FormalWord::zero(), |acc, l| &acc + &phi[l][j].scale(&m[i][l]));
            lhs == rhs
        })
    })
}
