//! Exact Laurent polynomials with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `sum c_i x^i` stored densely from the lowest non-zero exponent; both ends
/// are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i128, e: i32) -> Self {
        Self::from_dense(e, vec![c])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i128)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else { return Self::zero() };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn from_dense(low: i32, mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> i128 {
        let i = e - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i128) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Substitutes `x -> x^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Substitutes `x -> x^k` for `k > 0`.
    pub fn dilate(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Divides every exponent by `k`; fails unless all are multiples of `k`.
    pub fn contract(&self, k: i32) -> Option<Self> {
        if self.terms().any(|(e, _)| e % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c))))
    }

    /// Value at `x = -1`.
    pub fn at_minus_one(&self) -> i128 {
        self.terms().map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c }).sum()
    }

    pub fn at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Representative of `{±x^k f}` with lowest exponent 0 and positive leading coefficient.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign = if *self.coeffs.last().unwrap() < 0 { -1 } else { 1 };
        LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|&c| c * sign).collect() }
    }

    /// Equality up to multiplication by `±x^k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    /// Exact quotient, if `divisor` divides `self` in `Z[x, x^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &divisor.coeffs;
        let dl = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.len() - 1];
            if top % dl != 0 {
                return None;
            }
            let f = top / dl;
            quot[i] = f;
            if f != 0 {
                for (j, &dc) in d.iter().enumerate() {
                    rem[i + j] -= f * dc;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        let mut last = None;
        for tok in s.split_whitespace() {
            let bad = || Error::Parse { line: 1, msg: format!("bad polynomial term `{tok}`") };
            let (e, c) = tok.split_once(':').ok_or_else(bad)?;
            let e: i32 = e.parse().map_err(|_| bad())?;
            let c: i128 = c.parse().map_err(|_| bad())?;
            if c == 0 || last.is_some_and(|l| l >= e) {
                return Err(bad());
            }
            last = Some(e);
            terms.push((e, c));
        }
        if terms.is_empty() {
            return Err(Error::Parse { line: 1, msg: "empty polynomial".into() });
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for LaurentPoly {
    /// Sorted `exponent:coefficient` pairs, e.g. `-1:1 0:-1 1:1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("{e}:{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        LaurentPoly::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![0i128; (high - low + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}
