//! Moment polynomials in `n` and the limits of scaled moments they imply.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::fit::{fit_polynomial, Fit};
use super::stats::MomentReport;
use super::surd::Surd;
use super::RationalPoly;
use crate::error::{Error, Result};

fn check_order(k: u32) -> Result<()> {
    if (1..=7).contains(&k) {
        Ok(())
    } else {
        Err(Error::MomentOrder(k))
    }
}

/// Fits the order-`k` moment (the mean for `k = 1`) at degree `3k`.
///
/// `reports` supply the data points in the given order: the first `3k + 1`
/// are interpolated and every later one must be reproduced exactly.
pub fn moment_polynomial(k: u32, reports: &[MomentReport]) -> Result<Fit> {
    check_order(k)?;
    let points = reports
        .iter()
        .map(|r| Ok((r.n, r.fit_target(k)?)))
        .collect::<Result<Vec<_>>>()?;
    fit_polynomial(&points, 3 * k as usize)
}

fn expect_degree(k: u32, p: &RationalPoly) -> Result<BigRational> {
    let expected = 3 * k as usize;
    match p.degree() {
        Some(d) if d == expected => Ok(p.leading()),
        found => Err(Error::DegreeMismatch {
            k,
            expected,
            found: found.unwrap_or(0),
        }),
    }
}

/// `lim mu_k(n) / mu_2(n)^(k/2)` from the leading coefficients of the
/// variance polynomial and the order-`k` central moment polynomial.
pub fn scaled_limit(k: u32, variance: &RationalPoly, moment: &RationalPoly) -> Result<Surd> {
    if !(2..=7).contains(&k) {
        return Err(Error::MomentOrder(k));
    }
    let l2 = expect_degree(2, variance)?;
    let lk = expect_degree(k, moment)?;
    let half = (0..k / 2).fold(BigRational::one(), |acc, _| acc * &l2);
    let ratio = lk / half;
    if k.is_multiple_of(2) {
        Ok(Surd::rational(ratio))
    } else {
        Ok(Surd::sqrt(&l2.recip())?.scale(&ratio))
    }
}

/// `lim sigma(n) / mean(n) = sqrt(L2) / L1`; zero when the variance
/// polynomial vanishes.
pub fn cv_limit(mean: &RationalPoly, variance: &RationalPoly) -> Result<Surd> {
    if variance.is_zero() {
        return Ok(Surd::zero());
    }
    let l1 = expect_degree(1, mean)?;
    let l2 = expect_degree(2, variance)?;
    if l1.is_zero() {
        return Ok(Surd::zero());
    }
    Ok(Surd::sqrt(&l2)?.scale(&l1.recip()))
}
