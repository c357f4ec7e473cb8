//! Sparse polynomials in `q` and `t` with big-integer coefficients, the
//! univariate polynomials in `q` they collapse to, and the umbral map
//! `t^k -> q^(-k(k-1)/2)` between them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Bivariate polynomial: `(e_q, e_t) -> coefficient`, no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseBiPoly {
    terms: BTreeMap<(u64, u64), BigInt>,
}

impl SparseBiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(coeff: BigInt, e_q: u64, e_t: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((e_q, e_t), coeff);
        }
        SparseBiPoly { terms }
    }

    /// Builds a polynomial from possibly repeated `(e_q, e_t, coeff)` triples.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = SparseBiPoly::zero();
        for (e_q, e_t, c) in terms {
            p.add_term(e_q, e_t, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e_q: u64, e_t: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((e_q, e_t)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(e_q, e_t));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e_q: u64, e_t: u64) -> BigInt {
        self.terms.get(&(e_q, e_t)).cloned().unwrap_or_default()
    }

    /// Terms as `(e_q, e_t, coeff)`, ordered by `(e_q, e_t)`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    /// Multiplies by `q^e_q t^e_t`.
    pub fn mono_mul(&self, e_q: u64, e_t: u64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(q, t), c)| ((q + e_q, t + e_t), c.clone()))
            .collect();
        SparseBiPoly { terms }
    }

    /// Substitutes `t -> q^m t`.
    pub fn subst_t_scale(&self, m: u64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(q, t), c)| ((q + m * t, t), c.clone()))
            .collect();
        SparseBiPoly { terms }
    }

    /// Value at `q = t = 1`.
    pub fn eval_q1_t1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Replaces every `q^a t^k` by `q^(a - k(k-1)/2)`.
    pub fn umbral(&self) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (&(e_q, e_t), c) in &self.terms {
            let shift = e_t * e_t.saturating_sub(1) / 2;
            let e = e_q
                .checked_sub(shift)
                .ok_or(Error::NegativeExponent { e_q, e_t })?;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

impl From<&QPoly> for SparseBiPoly {
    fn from(p: &QPoly) -> Self {
        SparseBiPoly::from_terms(p.terms().map(|(e, c)| (e, 0, c.clone())))
    }
}

impl Add for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn add(self, rhs: &SparseBiPoly) -> SparseBiPoly {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.terms {
            out.add_term(q, t, c.clone());
        }
        out
    }
}

impl Neg for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn neg(self) -> SparseBiPoly {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c)).collect();
        SparseBiPoly { terms }
    }
}

impl Sub for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn sub(self, rhs: &SparseBiPoly) -> SparseBiPoly {
        self + &(-rhs)
    }
}

impl Mul for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn mul(self, rhs: &SparseBiPoly) -> SparseBiPoly {
        let mut acc: BTreeMap<(u64, u64), BigInt> = BTreeMap::new();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &rhs.terms {
                *acc.entry((q1 + q2, t1 + t2)).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparseBiPoly { terms: acc }
    }
}

impl fmt::Display for SparseBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(q, t), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*q^{q}*t^{t}")?;
        }
        Ok(())
    }
}

/// Univariate polynomial in `q`: `exponent -> coefficient`, no zeros stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<u64, BigInt>,
}

pub const TEXT_MAGIC: &str = "# straub-poly v1";

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        QPoly::from_terms([(0, 1)])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponent: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: u64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Highest exponent with a nonzero coefficient; 0 for the zero polynomial.
    pub fn degree_q(&self) -> u64 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn coeff_vector(&self) -> Vec<(u64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// Serializes in the `straub-poly v1` text format.
    pub fn to_text(&self, n: u64) -> String {
        let mut s = format!("{TEXT_MAGIC} n={n} terms={}\n", self.terms.len());
        for (e, c) in &self.terms {
            s.push_str(&format!("{e} {c}\n"));
        }
        s
    }

    /// Parses the `straub-poly v1` text format, returning `(n, polynomial)`.
    ///
    /// Anything [`QPoly::to_text`] would not have produced is rejected.
    pub fn from_text(text: &str) -> Result<(u64, QPoly)> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        if !text.ends_with('\n') {
            return Err(err(0, "missing final newline"));
        }
        let mut lines = text[..text.len() - 1].split('\n');
        let header = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let rest = header
            .strip_prefix(TEXT_MAGIC)
            .and_then(|r| r.strip_prefix(" n="))
            .ok_or_else(|| err(1, "bad header"))?;
        let (n_str, terms_str) = rest
            .split_once(" terms=")
            .ok_or_else(|| err(1, "bad header"))?;
        let n = parse_decimal_u64(n_str).ok_or_else(|| err(1, "bad n"))?;
        let count = parse_decimal_u64(terms_str).ok_or_else(|| err(1, "bad term count"))?;

        let mut terms = BTreeMap::new();
        let mut last: Option<u64> = None;
        for (idx, line) in lines.enumerate() {
            let lineno = idx + 2;
            let (e_str, c_str) = line
                .split_once(' ')
                .ok_or_else(|| err(lineno, "expected '<exponent> <coefficient>'"))?;
            let e = parse_decimal_u64(e_str).ok_or_else(|| err(lineno, "bad exponent"))?;
            let c = parse_decimal_bigint(c_str).ok_or_else(|| err(lineno, "bad coefficient"))?;
            if c.is_zero() {
                return Err(err(lineno, "zero coefficient"));
            }
            if last.is_some_and(|l| l >= e) {
                return Err(err(lineno, "exponents not strictly increasing"));
            }
            last = Some(e);
            terms.insert(e, c);
        }
        if terms.len() as u64 != count {
            return Err(err(1, "term count does not match header"));
        }
        Ok((n, QPoly { terms }))
    }
}

fn canonical_digits(s: &str) -> bool {
    (s == "0" || (!s.is_empty() && !s.starts_with('0'))) && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_decimal_u64(s: &str) -> Option<u64> {
    canonical_digits(s).then(|| s.parse().ok()).flatten()
}

fn parse_decimal_bigint(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if !canonical_digits(digits) || s == "-0" {
        return None;
    }
    s.parse().ok()
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}
