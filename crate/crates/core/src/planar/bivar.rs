use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::algebra::{format_rat, int, Poly, Rat, RatFunc};

/// Sparse bivariate polynomial over ℚ keyed by `(deg_x, deg_y)`.
///
/// No zero coefficient is ever stored, so structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    /// First variable.
    pub fn x() -> Self {
        BivarPoly::monomial(Rat::one(), 1, 0)
    }

    /// Second variable.
    pub fn y() -> Self {
        BivarPoly::monomial(Rat::one(), 0, 1)
    }

    /// `c·x^i·y^j`.
    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivarPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(it: I) -> Self {
        let mut p = BivarPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    /// Integer coefficients `(i, j, c)` for `c·x^i·y^j`.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        BivarPoly::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), int(c))))
    }

    /// Embeds a univariate polynomial in the first variable.
    pub fn from_poly_x(p: &Poly) -> Self {
        BivarPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Embeds a univariate polynomial in the second variable.
    pub fn from_poly_y(p: &Poly) -> Self {
        BivarPoly::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    /// True when every monomial has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|(i, j)| i + j == d)
    }

    /// Leading term in degree-lexicographic order.
    fn leading(&self) -> Option<(&(u32, u32), &Rat)> {
        self.terms.iter().max_by_key(|((i, j), _)| (i + j, *i))
    }

    pub fn scale(&self, c: &Rat) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BivarPoly {
        let mut base = self.clone();
        let mut acc = BivarPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn deriv_x(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * int(i as i64))),
        )
    }

    pub fn deriv_y(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * int(j as i64))),
        )
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Multiplies by `x^a·y^b`.
    pub fn shift(&self, a: u32, b: u32) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    /// Divides by `x^a·y^b`; `None` when some monomial is not divisible.
    pub fn unshift(&self, a: u32, b: u32) -> Option<BivarPoly> {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if i < a || j < b {
                return None;
            }
            terms.insert((i - a, j - b), c.clone());
        }
        Some(BivarPoly { terms })
    }

    /// Largest `(a, b)` with `x^a·y^b` dividing every monomial.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|(i, _)| *i).min().unwrap_or(0);
        let b = self.terms.keys().map(|(_, j)| *j).min().unwrap_or(0);
        (a, b)
    }

    /// Coefficients of `y^j` as polynomials in `x`, lowest `j` first.
    pub fn coeffs_in_y(&self) -> Vec<Poly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = c.clone();
        }
        rows.into_iter().map(Poly::from_coeffs).collect()
    }

    /// `p(1, t)` as a univariate polynomial in `t`.
    pub fn dehomogenize(&self) -> Poly {
        let mut coeffs = vec![Rat::zero(); self.degree_y().map_or(0, |d| d as usize + 1)];
        for (&(_, j), c) in &self.terms {
            coeffs[j as usize] += c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// `p(x, φ(x))`.
    pub fn subs_y(&self, phi: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for c in self.coeffs_in_y().iter().rev() {
            acc = &(&acc * phi) + &RatFunc::from_poly(c.clone());
        }
        acc
    }

    /// `p(a, b)` at a rational point.
    pub fn eval(&self, a: &Rat, b: &Rat) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize)
        })
    }

    /// Substitutes rational functions for both variables.
    pub fn compose(&self, xs: &BivarRatFunc, ys: &BivarRatFunc) -> BivarRatFunc {
        let mut acc = BivarRatFunc::zero();
        for (&(i, j), c) in &self.terms {
            let term = &xs.pow(i) * &ys.pow(j);
            acc = &acc + &term.scale(c);
        }
        acc
    }

    /// Renders with the given variable names in a form the expression parser
    /// reads back.
    pub fn fmt_vars(&self, vx: &str, vy: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| {
            let (ia, ja) = a.0;
            let (ib, jb) = b.0;
            (ib + jb, ib).cmp(&(ia + ja, ia))
        });
        for (&(i, j), c) in keys {
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (v, e) in [(vx, i), (vy, j)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&format_rat(&abs));
            } else {
                if !abs.is_one() {
                    factors.insert(0, format_rat(&abs));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars("x", "y"))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({})", self.fmt_vars("x", "y"))
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

forward_binop!(BivarPoly, Add, add);
forward_binop!(BivarPoly, Sub, sub);
forward_binop!(BivarPoly, Mul, mul);

/// Bivariate rational function `num/den`.
///
/// Only monomial factors and the scalar normalization of the leading
/// denominator term are reduced; equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct BivarRatFunc {
    num: BivarPoly,
    den: BivarPoly,
}

impl BivarRatFunc {
    /// Panics when `den` is zero.
    pub fn new(num: BivarPoly, den: BivarPoly) -> Self {
        assert!(!den.is_zero(), "bivariate rational function with zero denominator");
        if num.is_zero() {
            return BivarRatFunc::zero();
        }
        let (na, nb) = num.monomial_content();
        let (da, db) = den.monomial_content();
        let (a, b) = (na.min(da), nb.min(db));
        let num = num.unshift(a, b).expect("content divides");
        let den = den.unshift(a, b).expect("content divides");
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero");
        if lc.is_one() {
            BivarRatFunc { num, den }
        } else {
            let inv = lc.recip();
            BivarRatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        BivarRatFunc {
            num: BivarPoly::zero(),
            den: BivarPoly::one(),
        }
    }

    pub fn one() -> Self {
        BivarRatFunc::from_poly(BivarPoly::one())
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        BivarRatFunc {
            num: p,
            den: BivarPoly::one(),
        }
    }

    pub fn num(&self) -> &BivarPoly {
        &self.num
    }

    pub fn den(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> BivarRatFunc {
        BivarRatFunc::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> BivarRatFunc {
        BivarRatFunc::new(self.num.pow(e), self.den.pow(e))
    }

    pub fn recip(&self) -> Option<BivarRatFunc> {
        (!self.is_zero()).then(|| BivarRatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn deriv_x(&self) -> BivarRatFunc {
        BivarRatFunc::new(
            &(&self.num.deriv_x() * &self.den) - &(&self.num * &self.den.deriv_x()),
            &self.den * &self.den,
        )
    }

    pub fn deriv_y(&self) -> BivarRatFunc {
        BivarRatFunc::new(
            &(&self.num.deriv_y() * &self.den) - &(&self.num * &self.den.deriv_y()),
            &self.den * &self.den,
        )
    }

    /// `f(x, φ(x))`; `None` when the denominator vanishes identically on the
    /// curve.
    pub fn subs_y(&self, phi: &RatFunc) -> Option<RatFunc> {
        let d = self.den.subs_y(phi);
        (!d.is_zero()).then(|| &self.num.subs_y(phi) / &d)
    }

    pub fn fmt_vars(&self, vx: &str, vy: &str) -> String {
        if self.den == BivarPoly::one() {
            return self.num.fmt_vars(vx, vy);
        }
        format!("({})/({})", self.num.fmt_vars(vx, vy), self.den.fmt_vars(vx, vy))
    }
}

impl PartialEq for BivarRatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for BivarRatFunc {}

impl fmt::Display for BivarRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars("x", "y"))
    }
}

impl fmt::Debug for BivarRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarRatFunc({})", self.fmt_vars("x", "y"))
    }
}

impl From<BivarPoly> for BivarRatFunc {
    fn from(p: BivarPoly) -> Self {
        BivarRatFunc::from_poly(p)
    }
}

impl Add<&BivarRatFunc> for &BivarRatFunc {
    type Output = BivarRatFunc;
    fn add(self, rhs: &BivarRatFunc) -> BivarRatFunc {
        if self.den == rhs.den {
            return BivarRatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        BivarRatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&BivarRatFunc> for &BivarRatFunc {
    type Output = BivarRatFunc;
    fn sub(self, rhs: &BivarRatFunc) -> BivarRatFunc {
        self + &(-rhs)
    }
}

impl Mul<&BivarRatFunc> for &BivarRatFunc {
    type Output = BivarRatFunc;
    fn mul(self, rhs: &BivarRatFunc) -> BivarRatFunc {
        BivarRatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Div<&BivarRatFunc> for &BivarRatFunc {
    type Output = BivarRatFunc;
    fn div(self, rhs: &BivarRatFunc) -> BivarRatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        BivarRatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &BivarRatFunc {
    type Output = BivarRatFunc;
    fn neg(self) -> BivarRatFunc {
        BivarRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for BivarRatFunc {
    type Output = BivarRatFunc;
    fn neg(self) -> BivarRatFunc {
        -&self
    }
}

forward_binop!(BivarRatFunc, Add, add);
forward_binop!(BivarRatFunc, Sub, sub);
forward_binop!(BivarRatFunc, Mul, mul);
forward_binop!(BivarRatFunc, Div, div);
