use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact value `r * sqrt(d)` with `d` square-free; zero is stored as `0 * sqrt(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    r: BigRational,
    d: BigUint,
}

impl Surd {
    pub fn zero() -> Self {
        Surd::rational(BigRational::zero())
    }

    pub fn rational(r: BigRational) -> Self {
        Surd {
            r,
            d: BigUint::one(),
        }
    }

    /// `r * sqrt(d)` for any positive `d`, moving square factors of `d` into `r`.
    pub fn new(r: BigRational, d: BigUint) -> Self {
        if r.is_zero() || d.is_zero() {
            return Surd::zero();
        }
        let (square_root, free) = split_square(&d);
        Surd {
            r: r * BigRational::from_integer(BigInt::from(square_root)),
            d: free,
        }
    }

    /// Square root of a non-negative rational: `sqrt(a/b) = sqrt(a*b) / b`.
    pub fn sqrt(x: &BigRational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::NegativeRadicand(x.to_string()));
        }
        let radicand = (x.numer() * x.denom()).to_biguint().expect("non-negative");
        let inv_den = BigRational::new(BigInt::one(), x.denom().clone());
        Ok(Surd::new(inv_den, radicand))
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.r
    }

    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_one()
    }

    /// `r^2 d`.
    pub fn square(&self) -> BigRational {
        &self.r * &self.r * BigRational::from_integer(BigInt::from(self.d.clone()))
    }

    pub fn scale(&self, k: &BigRational) -> Surd {
        Surd::new(&self.r * k, self.d.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.r.to_f64().unwrap_or(f64::NAN) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Decimal expansion truncated toward zero after `places` fractional digits.
    pub fn truncated_decimal(&self, places: usize) -> String {
        let sq = self.square();
        let scale = BigInt::from(10u32).pow(2 * places as u32);
        let scaled = (sq.numer() * scale) / sq.denom();
        let digits = scaled.magnitude().sqrt().to_string();
        let digits = format!("{digits:0>width$}", width = places + 1);
        let (int_part, frac) = digits.split_at(digits.len() - places);
        let sign = if self.r.is_negative() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }

    /// The first `sig` significant digits, truncated, with the decimal point.
    pub fn significant_digits(&self, sig: usize) -> String {
        let expansion = self.truncated_decimal(sig + 40);
        let mut out = String::new();
        let mut counted = 0;
        let mut leading = true;
        for ch in expansion.chars() {
            if counted == sig {
                break;
            }
            out.push(ch);
            if ch.is_ascii_digit() {
                if ch != '0' {
                    leading = false;
                }
                if !leading {
                    counted += 1;
                }
            }
        }
        out
    }
}

/// `d = s^2 * f` with `f` square-free; returns `(s, f)`.
fn split_square(d: &BigUint) -> (BigUint, BigUint) {
    let mut rest = d.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut exp = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            exp += 1;
        }
        if exp > 0 {
            root *= p.pow(exp / 2);
            if exp % 2 == 1 {
                free *= &p;
            }
        }
        p += 1u32;
    }
    // what is left is 1 or a prime
    (root, free * rest)
}

/// True when no prime square divides `d`.
pub fn is_square_free(d: &BigUint) -> bool {
    !d.is_zero() && split_square(d).0.is_one()
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d.is_one() {
            write!(f, "{}", self.r)
        } else if self.r.is_one() {
            write!(f, "sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.r, self.d)
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
    fn canonical_radicand() {
        let s = Surd::new(q(1, 1), BigUint::from(467u32 * 7680));
        assert_eq!(s.radicand(), &BigUint::from(14010u32));
        assert_eq!(s.coefficient(), &q(16, 1));
        assert!(is_square_free(&BigUint::from(14010u32)));
        assert!(!is_square_free(&BigUint::from(12u32)));
        assert_eq!(Surd::new(q(0, 1), BigUint::from(8u32)), Surd::zero());
        assert_eq!(
            Surd::new(q(3, 1), BigUint::from(49u32)),
            Surd::rational(q(21, 1))
        );
    }

    #[test]
    fn square_roots_of_rationals() {
        let s = Surd::sqrt(&q(467, 7680)).unwrap();
        assert_eq!(s, Surd::new(q(1, 480), BigUint::from(14010u32)));
        assert_eq!(s.square(), q(467, 7680));
        assert_eq!(Surd::sqrt(&q(9, 4)).unwrap(), Surd::rational(q(3, 2)));
        assert!(Surd::sqrt(&q(-1, 2)).is_err());
    }

    #[test]
    fn decimals() {
        let s = Surd::new(q(1, 150), BigUint::from(14010u32));
        assert_eq!(s.truncated_decimal(19), "0.7890923055426827989");
        assert_eq!(s.significant_digits(10), "0.7890923055");
        assert_eq!(Surd::rational(q(-7, 4)).truncated_decimal(3), "-1.750");
        assert_eq!(Surd::rational(q(1, 1000)).significant_digits(2), "0.0010");
        assert_eq!(Surd::rational(q(5, 1)).truncated_decimal(0), "5");
        assert!((s.to_f64() - 0.7890923055426828).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(
            Surd::new(q(1, 150), BigUint::from(14010u32)).to_string(),
            "1/150*sqrt(14010)"
        );
        assert_eq!(Surd::rational(q(3, 2)).to_string(), "3/2");
    }
}
