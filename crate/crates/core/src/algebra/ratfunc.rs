use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{poly_gcd, AlgebraError, Poly, Rat};

/// Reduced rational function over ℚ: `gcd(num, den) = 1`, `den` monic.
///
/// All constructors canonicalize, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics when `den` is zero; see [`RatFunc::try_new`].
    pub fn new(num: Poly, den: Poly) -> Self {
        Self::try_new(num, den).expect("rational function with zero denominator")
    }

    pub fn try_new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Ok(RatFunc { num, den })
        } else {
            let inv = lc.recip();
            Ok(RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c / x^k`.
    pub fn inverse_power(c: Rat, k: usize) -> Self {
        RatFunc::new(Poly::constant(c), Poly::monomial(Rat::one(), k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `deg num − deg den`; `None` for zero.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.num.degree_i64() - self.den.degree_i64())
        }
    }

    pub fn derivative(&self) -> RatFunc {
        if self.is_polynomial() {
            return RatFunc::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(num, &self.den * &self.den)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 {
            self.recip().expect("negative power of zero rational function")
        } else {
            self.clone()
        };
        let k = e.unsigned_abs();
        RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Substitutes `x ↦ inner`.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        let eval = |p: &Poly| {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * inner) + &RatFunc::constant(c.clone());
            }
            acc
        };
        &eval(&self.num) / &eval(&self.den)
    }

    /// Renders in `var`; polynomials print bare, everything else as
    /// `(num)/(den)`.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.fmt_var("x"))
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        RatFunc::constant(c)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

forward_binop!(RatFunc, Add, add);
forward_binop!(RatFunc, Sub, sub);
forward_binop!(RatFunc, Mul, mul);
forward_binop!(RatFunc, Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn canonical_form() {
        let f = RatFunc::new(Poly::from_ints(&[-2, 0, 2]), Poly::from_ints(&[-2, 2]));
        assert_eq!(f, RatFunc::from_poly(Poly::from_ints(&[1, 1])));
        let g = RatFunc::new(Poly::from_ints(&[1]), Poly::from_ints(&[0, 2]));
        assert_eq!(g.num(), &Poly::constant(rat(1, 2)));
        assert_eq!(g.den(), &Poly::x());
        assert!(RatFunc::try_new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn arithmetic_and_derivative() {
        let inv_x = RatFunc::inverse_power(int(1), 1);
        assert_eq!(inv_x.derivative(), RatFunc::inverse_power(int(-1), 2));
        let sum = &inv_x + &RatFunc::one();
        assert_eq!(sum.to_string(), "(x + 1)/(x)");
        assert_eq!(&(&sum - &inv_x), &RatFunc::one());
        assert_eq!((&sum * &RatFunc::x()).as_polynomial(), Some(&Poly::from_ints(&[1, 1])));
        assert_eq!(inv_x.pow(-2), RatFunc::from_poly(Poly::from_ints(&[0, 0, 1])));
        assert_eq!(sum.eval(&int(2)), Some(rat(3, 2)));
        assert_eq!(sum.eval(&int(0)), None);
    }
}
