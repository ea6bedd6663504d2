//! Exact expression parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := ident | uint | '(' expr ')'
//! ```
//!
//! `1/2` is a quotient of integer literals, so fractions need no separate
//! rule. Implicit multiplication and floating literals are rejected.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;
use varobs_core::algebra::{int, Rat, RatFunc};
use varobs_core::planar::{BivarPoly, BivarRatFunc};

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character '{ch}' at column {}", .pos + 1)]
    UnexpectedChar { ch: char, pos: usize },
    #[error("expected {expected}, found '{found}' at column {}", .pos + 1)]
    UnexpectedToken { expected: &'static str, found: String, pos: usize },
    #[error("expected {expected}, found end of input at column {}", .pos + 1)]
    UnexpectedEnd { expected: &'static str, pos: usize },
    #[error("unknown identifier '{name}' at column {}", .pos + 1)]
    UnknownIdentifier { name: String, pos: usize },
    #[error("division by zero at column {}", .pos + 1)]
    DivisionByZero { pos: usize },
    #[error("exponent above {MAX_EXPONENT} at column {}", .pos + 1)]
    ExponentTooLarge { pos: usize },
    #[error("expression is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("invalid substitution '{0}' (expected NAME=VALUE)")]
    InvalidLet(String),
    #[error("'{0}' is a variable and cannot be substituted")]
    LetShadowsVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("ascii digits")), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar { ch: c, pos: i });
        }
    }
    Ok(out)
}

/// Values the parser can build: a field with named generators.
trait Value: Sized + Clone {
    fn constant(c: Rat) -> Self;
    fn var(index: usize) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn pow(&self, e: u32) -> Self;
}

impl Value for BivarRatFunc {
    fn constant(c: Rat) -> Self {
        BivarRatFunc::from_poly(BivarPoly::constant(c))
    }
    fn var(index: usize) -> Self {
        BivarRatFunc::from_poly(if index == 0 { BivarPoly::x() } else { BivarPoly::y() })
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
    fn pow(&self, e: u32) -> Self {
        BivarRatFunc::pow(self, e)
    }
}

impl Value for RatFunc {
    fn constant(c: Rat) -> Self {
        RatFunc::constant(c)
    }
    fn var(_: usize) -> Self {
        RatFunc::x()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }
    fn pow(&self, e: u32) -> Self {
        RatFunc::pow(self, e as i32)
    }
}

/// Variable names and parameter substitutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    vars: Vec<String>,
    lets: BTreeMap<String, Rat>,
}

impl Scope {
    /// At most two variables; the first maps to `x`, the second to `y`.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(vars.len() <= 2, "at most two variables");
        Scope {
            vars,
            lets: BTreeMap::new(),
        }
    }

    pub fn xy() -> Self {
        Scope::new(["x", "y"])
    }

    pub fn x() -> Self {
        Scope::new(["x"])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn lets(&self) -> &BTreeMap<String, Rat> {
        &self.lets
    }

    pub fn with_let(mut self, name: &str, value: Rat) -> Result<Self, ParseError> {
        if self.vars.iter().any(|v| v == name) {
            return Err(ParseError::LetShadowsVariable(name.to_string()));
        }
        self.lets.insert(name.to_string(), value);
        Ok(self)
    }

    /// Applies `NAME=VALUE` bindings, e.g. `a=1/2`.
    pub fn with_lets<S: AsRef<str>>(self, bindings: &[S]) -> Result<Self, ParseError> {
        bindings.iter().try_fold(self, |scope, b| {
            let (name, value) = parse_let(b.as_ref())?;
            scope.with_let(&name, value)
        })
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    scope: &'a Scope,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.toks.get(self.at) {
            None => ParseError::UnexpectedEnd { expected, pos: self.end },
            Some((t, pos)) => ParseError::UnexpectedToken {
                expected,
                found: match t {
                    Tok::Num(n) => n.to_string(),
                    Tok::Ident(s) => s.clone(),
                    Tok::Op(c) => c.to_string(),
                },
                pos: *pos,
            },
        }
    }

    fn expr<V: Value>(&mut self) -> Result<V, ParseError> {
        let mut acc = self.term::<V>()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<V: Value>(&mut self) -> Result<V, ParseError> {
        let mut acc = self.factor::<V>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                self.at += 1;
                let pos = self.pos();
                let rhs = self.factor()?;
                acc = acc.div(&rhs).ok_or(ParseError::DivisionByZero { pos })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<V: Value>(&mut self) -> Result<V, ParseError> {
        if self.eat('-') {
            return Ok(self.factor::<V>()?.neg());
        }
        let base = self.base::<V>()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let e = u32::try_from(n)
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or(ParseError::ExponentTooLarge { pos })?;
                self.at += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.unexpected("a non-negative integer exponent")),
        }
    }

    fn base<V: Value>(&mut self) -> Result<V, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(V::constant(Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if let Some(i) = self.scope.vars.iter().position(|v| *v == name) {
                    Ok(V::var(i))
                } else if let Some(c) = self.scope.lets.get(&name) {
                    Ok(V::constant(c.clone()))
                } else {
                    Err(ParseError::UnknownIdentifier { name, pos })
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected("')'"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

fn parse_value<V: Value>(text: &str, scope: &Scope) -> Result<V, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.chars().count(),
        scope,
    };
    let v = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(v)
}

/// Rational function in the scope's variables.
pub fn parse_bivar_ratfunc(text: &str, scope: &Scope) -> Result<BivarRatFunc, ParseError> {
    parse_value(text, scope)
}

/// Polynomial in the scope's variables; division only by nonzero constants.
pub fn parse_poly_in(text: &str, scope: &Scope) -> Result<BivarPoly, ParseError> {
    let f = parse_bivar_ratfunc(text, scope)?;
    let den = f.den();
    if !den.is_constant() {
        return Err(ParseError::NotPolynomial(text.to_string()));
    }
    let c = den.coeff(0, 0);
    Ok(f.num().scale(&(int(1) / c)))
}

/// Polynomial in `x`, `y`.
pub fn parse_poly(text: &str) -> Result<BivarPoly, ParseError> {
    parse_poly_in(text, &Scope::xy())
}

/// Univariate rational function; the scope must declare at most one variable.
pub fn parse_ratfunc_in(text: &str, scope: &Scope) -> Result<RatFunc, ParseError> {
    assert!(scope.vars.len() <= 1, "univariate scope expected");
    parse_value(text, scope)
}

/// Rational function in `x`.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ParseError> {
    parse_ratfunc_in(text, &Scope::x())
}

/// Exact rational constant, e.g. `-3/4`.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let f = parse_ratfunc_in(text, &Scope::new(Vec::<String>::new()))?;
    Ok(f.num().coeff(0) / f.den().coeff(0))
}

/// `NAME=VALUE`.
pub fn parse_let(text: &str) -> Result<(String, Rat), ParseError> {
    let invalid = || ParseError::InvalidLet(text.to_string());
    let (name, value) = text.split_once('=').ok_or_else(invalid)?;
    let name = name.trim();
    let valid_name = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid_name {
        return Err(invalid());
    }
    Ok((name.to_string(), parse_rat(value)?))
}

/// `NAME=VALUE` for command-line flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetBinding(pub String, pub Rat);

impl FromStr for LetBinding {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_let(s).map(|(n, v)| LetBinding(n, v))
    }
}
