//! Exact moments of the size distribution encoded by a generating polynomial.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bipoly::QPoly;
use crate::error::{Error, Result};

/// `(size, multiplicity)` pairs in increasing size order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    support: Vec<(u64, BigUint)>,
}

/// Reads off the size distribution of `S(q)`; rejects negative coefficients.
pub fn distribution(s: &QPoly) -> Result<Distribution> {
    let mut support = Vec::with_capacity(s.len());
    for (e, c) in s.terms() {
        let m = c.to_biguint().ok_or_else(|| Error::NegativeCoefficient {
            exponent: e,
            coeff: c.to_string(),
        })?;
        support.push((e, m));
    }
    Ok(Distribution { support })
}

impl Distribution {
    /// Tallies a list of observed sizes.
    pub fn from_sizes(sizes: impl IntoIterator<Item = u64>) -> Self {
        let mut poly = QPoly::zero();
        for s in sizes {
            poly.add_term(s, BigInt::from(1));
        }
        distribution(&poly).expect("counts are positive")
    }

    pub fn support(&self) -> &[(u64, BigUint)] {
        &self.support
    }

    pub fn total(&self) -> BigUint {
        self.support.iter().map(|(_, c)| c).sum()
    }

    /// `sum_m m^j c_m`, i.e. `(q d/dq)^j S(q)` at `q = 1`.
    pub fn power_sum(&self, j: u32) -> BigUint {
        self.support
            .iter()
            .map(|(m, c)| BigUint::from(*m).pow(j) * c)
            .sum()
    }

    pub fn raw_moment(&self, j: u32) -> BigRational {
        BigRational::new(self.power_sum(j).into(), self.total().into())
    }

    pub fn mean(&self) -> BigRational {
        self.raw_moment(1)
    }

    /// `E[(X - mean)^k]`, expanded binomially over the raw moments.
    pub fn central_moment(&self, k: u32) -> BigRational {
        let mu = self.mean();
        let mut sum = BigRational::zero();
        let mut binom = BigInt::from(1);
        for j in 0..=k {
            let term =
                self.raw_moment(j) * pow(&-&mu, k - j) * BigRational::from_integer(binom.clone());
            sum += term;
            binom = binom * (k - j) / (j + 1);
        }
        sum
    }

    /// Moment summary with central moments of orders 2 through 7.
    pub fn report(&self, n: u64) -> MomentReport {
        MomentReport {
            n,
            count: self.total(),
            mean: self.mean(),
            central: (2..=7).map(|k| self.central_moment(k)).collect(),
        }
    }
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::from_integer(1.into()), |acc, _| acc * x)
}

/// Mean size of the distribution encoded by `s`.
pub fn mean(s: &QPoly) -> Result<BigRational> {
    Ok(distribution(s)?.mean())
}

pub fn central_moment(s: &QPoly, k: u32) -> Result<BigRational> {
    Ok(distribution(s)?.central_moment(k))
}

/// Exact moments of one `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub n: u64,
    pub count: BigUint,
    pub mean: BigRational,
    /// Central moments of orders 2..=7.
    pub central: Vec<BigRational>,
}

impl MomentReport {
    /// Central moment of order `k` in `1..=7`; order 1 is identically 0.
    pub fn central_moment(&self, k: u32) -> Result<BigRational> {
        match k {
            1 => Ok(BigRational::zero()),
            2..=7 => Ok(self.central[k as usize - 2].clone()),
            _ => Err(Error::MomentOrder(k)),
        }
    }

    /// The quantity fitted for order `k`: the mean for `k = 1`, otherwise the
    /// central moment.
    pub fn fit_target(&self, k: u32) -> Result<BigRational> {
        if k == 1 {
            Ok(self.mean.clone())
        } else {
            self.central_moment(k)
        }
    }

    /// `mu_k / sigma^k` for `k = 3..=7`, for display only.
    pub fn scaled_moments(&self) -> Vec<(u32, f64)> {
        let var = self.central[0].to_f64().unwrap_or(f64::NAN);
        (3..=7)
            .map(|k| {
                let mu = self.central[k as usize - 2].to_f64().unwrap_or(f64::NAN);
                (k, mu / var.powf(k as f64 / 2.0))
            })
            .collect()
    }

    /// Ordered `key=value` records; rationals are written `num/den`.
    pub fn records(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("n".to_string(), self.n.to_string()),
            ("count".to_string(), self.count.to_string()),
            ("mean".to_string(), rational_text(&self.mean)),
            ("mu1".to_string(), "0/1".to_string()),
        ];
        for (k, v) in (2..).zip(&self.central) {
            out.push((format!("mu{k}"), rational_text(v)));
        }
        out
    }

    pub fn to_key_value_text(&self) -> String {
        self.records()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    /// Parses [`MomentReport::to_key_value_text`] output.
    pub fn from_key_value_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut field = |key: &str| -> Result<(usize, String)> {
            let (line, raw) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing {key}"),
            })?;
            let value = raw
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("expected {key}=..."),
                })?;
            Ok((line, value.to_string()))
        };
        let bad = |line: usize| Error::Parse {
            line,
            msg: "bad value".to_string(),
        };
        let (l, v) = field("n")?;
        let n = v.parse().map_err(|_| bad(l))?;
        let (l, v) = field("count")?;
        let count = v.parse().map_err(|_| bad(l))?;
        let (l, v) = field("mean")?;
        let mean = parse_rational(&v).ok_or_else(|| bad(l))?;
        let (l, v) = field("mu1")?;
        if parse_rational(&v).is_none_or(|x| !x.is_zero()) {
            return Err(bad(l));
        }
        let mut central = Vec::new();
        for k in 2..=7 {
            let (l, v) = field(&format!("mu{k}"))?;
            central.push(parse_rational(&v).ok_or_else(|| bad(l))?);
        }
        Ok(MomentReport {
            n,
            count,
            mean,
            central,
        })
    }
}

/// `num/den`, always with an explicit denominator.
pub fn rational_text(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/')?;
    let d: BigInt = d.parse().ok()?;
    if !d.is_positive() {
        return None;
    }
    Some(BigRational::new(n.parse().ok()?, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn s1() -> QPoly {
        QPoly::from_terms([(4, 1), (2, 1), (1, 1), (0, 1)])
    }

    #[test]
    fn small_distributions() {
        let d = distribution(&s1()).unwrap();
        let sizes: Vec<u64> = d.support().iter().map(|(m, _)| *m).collect();
        assert_eq!(sizes, vec![0, 1, 2, 4]);
        assert_eq!(d.total(), BigUint::from(4u32));
        let d0 = distribution(&QPoly::one()).unwrap();
        assert_eq!(d0.support(), &[(0, BigUint::from(1u32))]);
        assert!(distribution(&QPoly::from_terms([(3, -1)])).is_err());
    }

    #[test]
    fn moments_of_s1() {
        let d = distribution(&s1()).unwrap();
        assert_eq!(d.mean(), q(7, 4));
        assert_eq!(d.central_moment(1), q(0, 1));
        assert_eq!(d.central_moment(2), q(35, 16));
        assert_eq!(d.raw_moment(2) - q(49, 16), q(35, 16));
        assert_eq!(mean(&s1()).unwrap(), q(7, 4));
        assert_eq!(central_moment(&s1(), 2).unwrap(), q(35, 16));
    }

    #[test]
    fn central_moments_by_direct_summation() {
        let d = Distribution::from_sizes([0, 3, 3, 5, 9, 9, 9, 14]);
        let mu = d.mean();
        for k in 0..=7u32 {
            let direct: BigRational = [0i64, 3, 3, 5, 9, 9, 9, 14]
                .iter()
                .map(|&m| pow(&(q(m, 1) - &mu), k))
                .sum::<BigRational>()
                / q(8, 1);
            assert_eq!(d.central_moment(k), direct, "k={k}");
        }
    }

    #[test]
    fn report_records_round_trip() {
        let r = distribution(&s1()).unwrap().report(1);
        assert_eq!(r.central_moment(1).unwrap(), q(0, 1));
        assert_eq!(r.central_moment(2).unwrap(), q(35, 16));
        assert!(r.central_moment(8).is_err());
        let text = r.to_key_value_text();
        assert!(text.starts_with("n=1\ncount=4\nmean=7/4\nmu1=0/1\nmu2=35/16\n"));
        assert_eq!(MomentReport::from_key_value_text(&text).unwrap(), r);
        assert!(MomentReport::from_key_value_text("n=1\n").is_err());
    }
}
