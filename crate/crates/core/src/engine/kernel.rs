//! Row-dense bivariate polynomials used inside the weighted recurrences.
//!
//! Row `j` holds the coefficients of `t^j` as a dense run of `q` powers
//! starting at `lo`. All coefficients produced by the recurrences count
//! order ideals, so they are non-negative and bounded by the polynomial's
//! value at `q = t = 1`. The engine checks that value against the integer
//! counts before trusting a table, which keeps `u64` arithmetic exact.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bipoly::{QPoly, SparseBiPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Row {
    lo: u64,
    coeffs: Vec<u64>,
}

impl Row {
    fn hi(&self) -> u64 {
        self.lo + self.coeffs.len() as u64 - 1
    }
}

/// Invariant: every stored row is either empty or has nonzero end
/// coefficients, and the last row is nonempty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowPoly {
    rows: Vec<Row>,
}

impl RowPoly {
    pub fn one() -> Self {
        RowPoly {
            rows: vec![Row {
                lo: 0,
                coeffs: vec![1],
            }],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.coeffs.iter().filter(|&&c| c != 0).count())
            .sum()
    }

    /// Number of stored coefficient slots, zeros included.
    pub fn dense_len(&self) -> usize {
        self.rows.iter().map(|r| r.coeffs.len()).sum()
    }

    /// Value at `q = t = 1`.
    pub fn total(&self) -> u128 {
        self.rows
            .iter()
            .flat_map(|r| r.coeffs.iter())
            .map(|&c| c as u128)
            .sum()
    }

    /// Converts to the big-integer sparse form, applying `t -> q^scale t`.
    pub fn to_sparse(&self, scale: u64) -> SparseBiPoly {
        let mut out = SparseBiPoly::zero();
        for (j, row) in self.rows.iter().enumerate() {
            let base = row.lo + scale * j as u64;
            for (k, &c) in row.coeffs.iter().enumerate() {
                if c != 0 {
                    out.add_term(base + k as u64, j as u64, BigInt::from(c));
                }
            }
        }
        out
    }

    /// Umbral image `t^k -> q^(-k(k-1)/2)`.
    pub fn umbral(&self) -> Result<QPoly> {
        let mut lo = u64::MAX;
        let mut hi = 0;
        for (j, row) in self.nonempty_rows() {
            let shift = j * j.saturating_sub(1) / 2;
            if row.lo < shift {
                return Err(Error::NegativeExponent {
                    e_q: row.lo,
                    e_t: j,
                });
            }
            lo = lo.min(row.lo - shift);
            hi = hi.max(row.hi() - shift);
        }
        if lo > hi {
            return Ok(QPoly::zero());
        }
        let mut dense = vec![0u128; (hi - lo + 1) as usize];
        for (j, row) in self.nonempty_rows() {
            let start = (row.lo - j * j.saturating_sub(1) / 2 - lo) as usize;
            for (d, &c) in dense[start..].iter_mut().zip(&row.coeffs) {
                *d += c as u128;
            }
        }
        Ok(QPoly::from_terms(
            dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(k, c)| (lo + k as u64, BigInt::from(c))),
        ))
    }

    fn nonempty_rows(&self) -> impl Iterator<Item = (u64, &Row)> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.coeffs.is_empty())
            .map(|(j, r)| (j as u64, r))
    }
}

/// A polynomial seen through `t -> q^scale t`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scaled<'a> {
    pub poly: &'a RowPoly,
    pub scale: u64,
}

/// `q^e_q t^e_t * left * right`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Term<'a> {
    pub e_q: u64,
    pub e_t: u64,
    pub left: Scaled<'a>,
    pub right: Scaled<'a>,
}

/// Sums the products described by `terms`.
///
/// Output rows are independent of each other and are filled in parallel;
/// the integer result does not depend on the schedule.
pub(crate) fn sum_of_products(terms: &[Term<'_>]) -> RowPoly {
    // bounds[r] = (lo, hi) of output row r
    let mut bounds: Vec<Option<(u64, u64)>> = Vec::new();
    for term in terms {
        for (j1, r1) in term.left.poly.nonempty_rows() {
            for (j2, r2) in term.right.poly.nonempty_rows() {
                let r = (term.e_t + j1 + j2) as usize;
                let lo = term.e_q + r1.lo + term.left.scale * j1 + r2.lo + term.right.scale * j2;
                let hi = lo + (r1.coeffs.len() + r2.coeffs.len() - 2) as u64;
                if bounds.len() <= r {
                    bounds.resize(r + 1, None);
                }
                bounds[r] = Some(match bounds[r] {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
        }
    }

    let rows: Vec<Row> = bounds
        .par_iter()
        .enumerate()
        .map(|(r, b)| match *b {
            None => Row::default(),
            Some((lo, hi)) => fill_row(terms, r as u64, lo, hi),
        })
        .collect();
    RowPoly { rows }
}

fn fill_row(terms: &[Term<'_>], r: u64, lo: u64, hi: u64) -> Row {
    let mut out = vec![0u64; (hi - lo + 1) as usize];
    for term in terms {
        if r < term.e_t {
            continue;
        }
        let need = r - term.e_t;
        let left = &term.left.poly.rows;
        let right = &term.right.poly.rows;
        if left.is_empty() || right.is_empty() {
            continue;
        }
        let j1_min = need.saturating_sub(right.len() as u64 - 1);
        let j1_max = need.min(left.len() as u64 - 1);
        for j1 in j1_min..=j1_max {
            let j2 = need - j1;
            let r1 = &left[j1 as usize];
            let r2 = &right[j2 as usize];
            if r1.coeffs.is_empty() || r2.coeffs.is_empty() {
                continue;
            }
            let start =
                term.e_q + r1.lo + term.left.scale * j1 + r2.lo + term.right.scale * j2 - lo;
            convolve_into(&mut out[start as usize..], &r1.coeffs, &r2.coeffs);
        }
    }
    let first = out.iter().position(|&c| c != 0).unwrap_or(out.len());
    let last = out.iter().rposition(|&c| c != 0).map_or(first, |p| p + 1);
    Row {
        lo: lo + first as u64,
        coeffs: out[first..last].to_vec(),
    }
}

/// `out[i + j] += a[i] * b[j]`, wrapping (callers guarantee no overflow).
fn convolve_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for (i, &x) in short.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (d, &y) in out[i..i + long.len()].iter_mut().zip(long) {
            *d = d.wrapping_add(x.wrapping_mul(y));
        }
    }
}

#[cfg(test)]
pub(crate) fn from_triples(triples: &[(u64, u64, u64)]) -> RowPoly {
    let mut bounds: Vec<Option<(u64, u64)>> = Vec::new();
    for &(q, t, c) in triples {
        if c == 0 {
            continue;
        }
        let t = t as usize;
        if bounds.len() <= t {
            bounds.resize(t + 1, None);
        }
        bounds[t] = Some(match bounds[t] {
            None => (q, q),
            Some((a, b)) => (a.min(q), b.max(q)),
        });
    }
    let mut rows: Vec<Row> = bounds
        .iter()
        .map(|b| match *b {
            None => Row::default(),
            Some((lo, hi)) => Row {
                lo,
                coeffs: vec![0; (hi - lo + 1) as usize],
            },
        })
        .collect();
    for &(q, t, c) in triples {
        if c != 0 {
            let row = &mut rows[t as usize];
            row.coeffs[(q - row.lo) as usize] += c;
        }
    }
    RowPoly { rows }
}
