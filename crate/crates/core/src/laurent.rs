//! Exact arithmetic in the bivariate Laurent ring `Z[u^±1, v^±1]`.
//!
//! A [`LaurentPoly`] is a finitely supported map from integer exponent pairs
//! `(p, q)` to arbitrary-precision integer coefficients, standing for
//! `Σ c_{p,q} u^p v^q`. Zero coefficients are never stored, so structural
//! equality is value equality, and terms iterate in lexicographic `(p, q)`
//! order.
//!
//! The text form is `c*u^p*v^q` terms joined by `+`/`-`, for example
//! `u*v^3 + u^2*v^2` or `2*u^(-1)`. [`fmt::Display`] and [`FromStr`] are
//! inverse to each other.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("expected a single monomial, found {0} terms")]
    NotAMonomial(usize),
    #[error("monomial coefficient {0} is not a unit of Z")]
    NotAUnit(BigInt),
    #[error("cannot substitute zero for a variable of a Laurent polynomial")]
    ZeroSubstitution,
    #[error("cannot parse Laurent polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Bidegree of a monomial `u^p v^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentPair {
    pub p: i64,
    pub q: i64,
}

impl ExponentPair {
    pub const ZERO: ExponentPair = ExponentPair { p: 0, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        ExponentPair { p, q }
    }

    pub fn total_degree(self) -> i64 {
        self.p + self.q
    }
}

impl Add for ExponentPair {
    type Output = ExponentPair;

    fn add(self, rhs: ExponentPair) -> ExponentPair {
        ExponentPair::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Neg for ExponentPair {
    type Output = ExponentPair;

    fn neg(self) -> ExponentPair {
        ExponentPair::new(-self.p, -self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentPair, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, p: i64, q: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentPair::new(p, q), c);
        }
        LaurentPoly { terms }
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(p, q, c)` triples, summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (p, q, c) in terms {
            out.add_term(ExponentPair::new(p, q), c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ExponentPair::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentPair, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, p: i64, q: i64) -> BigInt {
        self.terms.get(&ExponentPair::new(p, q)).cloned().unwrap_or_default()
    }

    /// The constant coefficient if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&ExponentPair::ZERO).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, e: ExponentPair, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by the unit-coefficient monomial `u^p v^q`.
    pub fn shift(&self, by: ExponentPair) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e + by, c.clone())).collect(),
        }
    }

    /// `self += a * b` without materializing the product.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(*ea + *eb, ca * cb);
            }
        }
    }

    /// `self -= a * b`.
    pub fn sub_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(*ea + *eb, -(ca * cb));
            }
        }
    }

    /// Inverse of a unit monomial `±u^p v^q`.
    pub fn invert_monomial(&self) -> Result<LaurentPoly, LaurentError> {
        if self.terms.len() != 1 {
            return Err(LaurentError::NotAMonomial(self.terms.len()));
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        if !c.abs().is_one() {
            return Err(LaurentError::NotAUnit(c.clone()));
        }
        Ok(LaurentPoly::monomial(c.clone(), -e.p, -e.q))
    }

    /// Exact value at `(u, v) = (u0, v0)`.
    pub fn specialize(&self, u0: i64, v0: i64) -> Result<BigRational, LaurentError> {
        if u0 == 0 || v0 == 0 {
            return Err(LaurentError::ZeroSubstitution);
        }
        let u0 = BigRational::from_integer(u0.into());
        let v0 = BigRational::from_integer(v0.into());
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let term = BigRational::from_integer(c.clone()) * rational_pow(&u0, e.p) * rational_pow(&v0, e.q);
            total += term;
        }
        Ok(total)
    }

    /// Integer value at `(u0, v0)`; `None` when the value is not an integer.
    pub fn specialize_integer(&self, u0: i64, v0: i64) -> Result<Option<BigInt>, LaurentError> {
        let value = self.specialize(u0, v0)?;
        Ok(value.is_integer().then(|| value.to_integer()))
    }

    /// True iff every term has total degree `p + q = m` (vacuous for zero).
    pub fn is_homogeneous(&self, m: Ratio<i64>) -> bool {
        self.terms.keys().all(|e| Ratio::from_integer(e.total_degree()) == m)
    }

    /// The common total degree, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|e| e.total_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn min_exponents(&self) -> Option<ExponentPair> {
        let p = self.terms.keys().map(|e| e.p).min()?;
        let q = self.terms.keys().map(|e| e.q).min()?;
        Some(ExponentPair::new(p, q))
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let magnitude = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        magnitude.recip()
    } else {
        magnitude
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, var: char, exp: i64) -> fmt::Result {
    match exp {
        1 => write!(f, "{var}"),
        e if e < 0 => write!(f, "{var}^({e})"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let factors: Vec<(char, i64)> = [('u', e.p), ('v', e.q)].into_iter().filter(|&(_, x)| x != 0).collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            for (j, (var, exp)) in factors.into_iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write_factor(f, var, exp)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, reason: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            input: self.input.to_string(),
            reason: format!("{} at offset {}", reason.into(), self.pos),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        let parenthesized = self.eat('(');
        let negative = parenthesized && self.eat('-');
        let Some(digits) = self.digits() else {
            return self.fail("expected exponent digits");
        };
        if parenthesized && !self.eat(')') {
            return self.fail("expected ')'");
        }
        let Ok(value) = digits.parse::<i64>() else {
            return self.fail("exponent out of range");
        };
        Ok(if negative { -value } else { value })
    }

    fn term(&mut self) -> Result<(ExponentPair, BigInt), LaurentError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
        let mut exps = ExponentPair::ZERO;
        let mut seen = (false, false);
        let mut expect_factor = coeff.is_none();
        loop {
            if !expect_factor && !self.eat('*') {
                break;
            }
            expect_factor = false;
            let var = match self.peek() {
                Some(c @ ('u' | 'v')) => c,
                _ => return self.fail("expected 'u' or 'v'"),
            };
            self.pos += 1;
            let exp = if self.eat('^') { self.exponent()? } else { 1 };
            let slot = if var == 'u' { &mut seen.0 } else { &mut seen.1 };
            if *slot {
                return self.fail(format!("variable {var} repeated in one term"));
            }
            *slot = true;
            if var == 'u' {
                exps.p = exp;
            } else {
                exps.q = exp;
            }
        }
        Ok((exps, coeff.unwrap_or_else(BigInt::one)))
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            input: s,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        if parser.chars.is_empty() {
            return parser.fail("empty input");
        }
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while parser.peek().is_some() {
            let negative = if parser.eat('-') {
                true
            } else if parser.eat('+') {
                if first {
                    return parser.fail("leading '+'");
                }
                false
            } else if first {
                false
            } else {
                return parser.fail("expected '+' or '-'");
            };
            first = false;
            let (e, c) = parser.term()?;
            out.add_term(e, if negative { -c } else { c });
        }
        Ok(out)
    }
}
