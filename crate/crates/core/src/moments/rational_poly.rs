use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `n` with rational coefficients; `coeffs[i]` multiplies `n^i`.
/// Trailing zeros are trimmed, so equal polynomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `(sum_i numerators[i] n^i) / denominator`, coefficients in increasing
    /// degree order. Panics on malformed decimal literals.
    pub fn from_decimal(numerators: &[&str], denominator: &str) -> Self {
        let den: BigInt = denominator.parse().expect("decimal denominator");
        Self::new(
            numerators
                .iter()
                .map(|s| BigRational::new(s.parse().expect("decimal coefficient"), den.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, n: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: u64) -> BigRational {
        self.eval(&BigRational::from_integer(n.into()))
    }

    /// Least common denominator of the coefficients.
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get =
            |p: &RationalPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        RationalPoly::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

/// Common-denominator form, highest degree first: `(10*n^3 + 27*n^2 + 19*n)/32`.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let den = self.common_denominator();
        let mut body = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let num = (c * BigRational::from_integer(den.clone())).to_integer();
            if num.is_zero() {
                continue;
            }
            let mag = num.abs();
            if body.is_empty() {
                if num.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(if num.is_negative() { " - " } else { " + " });
            }
            body.push_str(&match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "n".to_string(),
                (1, false) => format!("{mag}*n"),
                (_, true) => format!("n^{i}"),
                (_, false) => format!("{mag}*n^{i}"),
            });
        }
        if den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_and_evaluates() {
        let p = RationalPoly::new(vec![q(0, 1), q(19, 32), q(27, 32), q(10, 32), q(0, 1)]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.leading(), q(5, 16));
        assert_eq!(p.eval_int(1), q(7, 4));
        assert_eq!(p.eval_int(2), q(113, 16));
        assert_eq!(p.to_string(), "(10*n^3 + 27*n^2 + 19*n)/32");
        assert_eq!(RationalPoly::zero().degree(), None);
        assert_eq!(RationalPoly::new(vec![q(0, 1)]), RationalPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let n = RationalPoly::new(vec![q(0, 1), q(1, 1)]);
        let n1 = RationalPoly::new(vec![q(1, 1), q(1, 1)]);
        assert_eq!(&n * &n1, RationalPoly::new(vec![q(0, 1), q(1, 1), q(1, 1)]));
        assert_eq!(&n + &n1, RationalPoly::new(vec![q(1, 1), q(2, 1)]));
        assert_eq!((&n * &n1).to_string(), "n^2 + n");
        let neg = RationalPoly::new(vec![q(-3, 2), q(0, 1), q(-1, 1)]);
        assert_eq!(neg.to_string(), "(-2*n^2 - 3)/2");
    }
}
