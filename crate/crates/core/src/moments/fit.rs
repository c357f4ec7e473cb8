//! Exact polynomial interpolation with held-out validation.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::Zero;

use super::RationalPoly;
use crate::error::{Error, Result};

/// A data point the interpolant was not built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeldOut {
    pub n: u64,
    pub expected: BigRational,
    pub fitted: BigRational,
}

impl HeldOut {
    pub fn passed(&self) -> bool {
        self.expected == self.fitted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fit {
    pub poly: RationalPoly,
    pub nodes: Vec<u64>,
    pub held_out: Vec<HeldOut>,
}

impl Fit {
    pub fn all_held_out_pass(&self) -> bool {
        self.held_out.iter().all(HeldOut::passed)
    }
}

/// Interpolates the first `degree + 1` points and evaluates the result on
/// the rest. Mismatches are recorded, not raised; see [`fit_polynomial`].
pub fn interpolate(points: &[(u64, BigRational)], degree: usize) -> Result<Fit> {
    let need = degree + 1;
    if points.len() < need {
        return Err(Error::TooFewPoints {
            need,
            got: points.len(),
        });
    }
    let mut seen = HashSet::new();
    for &(n, _) in points {
        if !seen.insert(n) {
            return Err(Error::DuplicateNode(n));
        }
    }
    let (nodes, rest) = points.split_at(need);
    let poly = newton_interpolant(nodes);
    let held_out = rest
        .iter()
        .map(|(n, y)| HeldOut {
            n: *n,
            expected: y.clone(),
            fitted: poly.eval_int(*n),
        })
        .collect();
    Ok(Fit {
        poly,
        nodes: nodes.iter().map(|&(n, _)| n).collect(),
        held_out,
    })
}

/// Like [`interpolate`], but any held-out mismatch is an error.
pub fn fit_polynomial(points: &[(u64, BigRational)], degree: usize) -> Result<Fit> {
    let fit = interpolate(points, degree)?;
    if let Some(bad) = fit.held_out.iter().find(|h| !h.passed()) {
        return Err(Error::HeldOutMismatch {
            n: bad.n,
            expected: bad.expected.to_string(),
            fitted: bad.fitted.to_string(),
        });
    }
    Ok(fit)
}

/// Divided differences, then the Newton form expanded by Horner's rule into
/// monomial coefficients.
fn newton_interpolant(points: &[(u64, BigRational)]) -> RationalPoly {
    let xs: Vec<BigRational> = points
        .iter()
        .map(|&(n, _)| BigRational::from_integer(n.into()))
        .collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // p(x) = dd[0] + (x - x0)(dd[1] + (x - x1)(dd[2] + ...))
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(dd.len());
    for i in (0..dd.len()).rev() {
        // coeffs <- coeffs * (x - x_i) + dd[i]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    RationalPoly::new(coeffs)
}

/// Lagrange basis evaluation at `x`, used as an independent check in tests.
#[cfg(test)]
fn lagrange_eval(points: &[(u64, BigRational)], x: u64) -> BigRational {
    use num_traits::One;
    let x = BigRational::from_integer(x.into());
    let mut total = BigRational::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let xi = BigRational::from_integer((*xi).into());
        let mut basis = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let xj = BigRational::from_integer((*xj).into());
                basis = basis * (&x - &xj) / (&xi - &xj);
            }
        }
        total += basis * yi;
    }
    total
}
