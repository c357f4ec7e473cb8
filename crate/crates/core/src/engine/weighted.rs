//! Weight enumerators `P^(c,h)_k`, `E^(c)_{x,y}`, `O^(c)_{x,y}` and `A_n`,
//! where an ideal `I` weighs `q^(sum of labels) t^|I|`.
//!
//! Tables hold the canonical polynomials in plain `t`; every substitution
//! `t -> q^m t` is applied lazily when a table entry is used as a factor.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigUint;

use super::counts::CountTables;
use super::kernel::{sum_of_products, RowPoly, Scaled, Term};
use crate::bipoly::{QPoly, SparseBiPoly};
use crate::error::{Error, Result};

type PKey = (u64, u64, i64);
type EoKey = (u64, i64, i64);

/// Memoized weight enumerators.
///
/// Reads and inserts may come from several threads. Two threads racing on the
/// same key both compute it; the first insert wins and the values are equal.
#[derive(Debug, Default)]
pub struct MemoStore {
    p: RwLock<HashMap<PKey, Arc<RowPoly>>>,
    e: RwLock<HashMap<EoKey, Arc<RowPoly>>>,
    o: RwLock<HashMap<EoKey, Arc<RowPoly>>>,
    counts: Mutex<CountTables>,
}

/// A table entry together with the `t -> q^scale t` it is read through.
struct View {
    poly: Arc<RowPoly>,
    scale: u64,
}

impl View {
    fn plain(poly: Arc<RowPoly>) -> Self {
        View { poly, scale: 0 }
    }

    fn scaled(&self, extra: u64) -> Scaled<'_> {
        Scaled {
            poly: &self.poly,
            scale: self.scale + extra,
        }
    }
}

fn one() -> Arc<RowPoly> {
    Arc::new(RowPoly::one())
}

fn lookup<K: std::hash::Hash + Eq>(
    map: &RwLock<HashMap<K, Arc<RowPoly>>>,
    key: &K,
) -> Option<Arc<RowPoly>> {
    map.read().expect("memo lock poisoned").get(key).cloned()
}

fn publish<K: std::hash::Hash + Eq>(
    map: &RwLock<HashMap<K, Arc<RowPoly>>>,
    key: K,
    value: RowPoly,
) -> Arc<RowPoly> {
    map.write()
        .expect("memo lock poisoned")
        .entry(key)
        .or_insert_with(|| Arc::new(value))
        .clone()
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of stored `(P, E, O)` entries.
    pub fn len(&self) -> (usize, usize, usize) {
        (
            self.p.read().expect("memo lock poisoned").len(),
            self.e.read().expect("memo lock poisoned").len(),
            self.o.read().expect("memo lock poisoned").len(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.len() == (0, 0, 0)
    }

    pub fn clear(&self) {
        self.p.write().expect("memo lock poisoned").clear();
        self.e.write().expect("memo lock poisoned").clear();
        self.o.write().expect("memo lock poisoned").clear();
    }

    fn count(&self, f: impl FnOnce(&mut CountTables) -> BigUint) -> BigUint {
        f(&mut self.counts.lock().expect("count lock poisoned"))
    }

    /// Every coefficient is at most the polynomial's value at q = t = 1, so a
    /// count below 2^64 rules out overflow while the table is built.
    fn check_bound(what: impl Fn() -> String, count: &BigUint) -> Result<()> {
        if count.bits() > 64 {
            return Err(Error::CoefficientBound {
                what: what(),
                total: count.to_string(),
            });
        }
        Ok(())
    }

    fn check_total(what: impl Fn() -> String, poly: &RowPoly, count: &BigUint) -> Result<()> {
        if BigUint::from(poly.total()) != *count {
            return Err(Error::CountMismatch {
                what: what(),
                expected: count.to_string(),
                got: poly.total().to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn p_rows(&self, c: u64, h: u64, k: i64) -> Result<Arc<RowPoly>> {
        if k <= 0 {
            return Ok(one());
        }
        if let Some(p) = lookup(&self.p, &(c, h, k)) {
            return Ok(p);
        }
        let what = || format!("P^({c},{h})_{k}");
        let count = self.count(|t| t.p(k));
        Self::check_bound(what, &count)?;

        let mut factors = Vec::with_capacity(k as usize + 1);
        for i in 1..=k + 1 {
            factors.push((self.p_rows(c, h, i - 2)?, self.p_rows(c, h, k - i)?));
        }
        let terms: Vec<Term<'_>> = factors
            .iter()
            .zip(1u64..)
            .map(|((left, right), i)| Term {
                e_t: i - 1,
                e_q: (i - 1) + (i - 1) * (i.saturating_sub(2)) * h / 2,
                left: Scaled {
                    poly: left,
                    scale: c + h,
                },
                right: Scaled {
                    poly: right,
                    scale: i * h,
                },
            })
            .collect();
        let poly = sum_of_products(&terms);
        Self::check_total(what, &poly, &count)?;
        Ok(publish(&self.p, (c, h, k), poly))
    }

    fn e_view(&self, c: u64, x: i64, y: i64) -> Result<View> {
        if x <= 0 {
            return Ok(View::plain(self.p_rows(c, 2, y)?));
        }
        if let Some(p) = lookup(&self.e, &(c, x, y)) {
            return Ok(View::plain(p));
        }
        let what = || format!("E^({c})_{{{x},{y}}}");
        let count = self.count(|t| t.e(x, y));
        Self::check_bound(what, &count)?;

        let mut factors = Vec::new();
        for i in 1..=y + 1 {
            factors.push((self.o_view(c, x - i + 1, y - i)?, self.p_rows(c, 2, i - 2)?));
        }
        let poly = self.odd_step_sum(c, &factors);
        Self::check_total(what, &poly, &count)?;
        Ok(View::plain(publish(&self.e, (c, x, y), poly)))
    }

    fn o_view(&self, c: u64, x: i64, y: i64) -> Result<View> {
        if x <= 0 {
            return Ok(View {
                poly: self.p_rows(c, 2, y)?,
                scale: 1,
            });
        }
        if let Some(p) = lookup(&self.o, &(c, x, y)) {
            return Ok(View::plain(p));
        }
        let what = || format!("O^({c})_{{{x},{y}}}");
        let count = self.count(|t| t.o(x, y));
        Self::check_bound(what, &count)?;

        let mut factors = Vec::new();
        for i in 1..=x + 1 {
            factors.push((self.e_view(c, x - i, y - i + 1)?, self.p_rows(c, 2, i - 2)?));
        }
        let poly = self.odd_step_sum(c, &factors);
        Self::check_total(what, &poly, &count)?;
        Ok(View::plain(publish(&self.o, (c, x, y), poly)))
    }

    /// `sum_i t^(i-1) q^((i-1)^2) F_i(q, q^(2i-1) t) P_(i-2)(q, q^(c+2) t)`:
    /// the shared shape of the `E` and `O` recurrences, where the odd labels
    /// `1, 3, ..., 2i-3` are occupied and `2i-1` is the first free one.
    fn odd_step_sum(&self, c: u64, factors: &[(View, Arc<RowPoly>)]) -> RowPoly {
        let terms: Vec<Term<'_>> = factors
            .iter()
            .zip(1u64..)
            .map(|((inner, triangle), i)| Term {
                e_t: i - 1,
                e_q: (i - 1) * (i - 1),
                left: inner.scaled(2 * i - 1),
                right: Scaled {
                    poly: triangle,
                    scale: c + 2,
                },
            })
            .collect();
        sum_of_products(&terms)
    }

    pub(crate) fn a_rows(&self, n: u64) -> Result<RowPoly> {
        if n == 0 {
            return Ok(RowPoly::one());
        }
        let c = 2 * n + 1;
        let ni = n as i64;
        let mut factors = Vec::new();
        for i in 1..=ni + 1 {
            factors.push(self.e_view(c, ni - i, ni)?);
        }
        let unit = RowPoly::one();
        let terms: Vec<Term<'_>> = factors
            .iter()
            .zip(1u64..)
            .map(|(e, i)| Term {
                e_t: i - 1,
                e_q: (i - 1) * (i - 1),
                left: e.scaled(2 * i - 1),
                right: Scaled {
                    poly: &unit,
                    scale: 0,
                },
            })
            .collect();
        let poly = sum_of_products(&terms);
        let count = self.count(|t| t.s(n));
        Self::check_total(|| format!("A_{n}"), &poly, &count)?;
        Ok(poly)
    }

    /// `P^(c,h)_k(q,t)`: weight enumerator of the triangle with `k` rank-zero
    /// vertices labelled `1, 1+h, ..., 1+(k-1)h` and covers `+c`, `+(c+h)`.
    pub fn p_poly(&self, c: u64, h: u64, k: i64) -> Result<SparseBiPoly> {
        Ok(self.p_rows(c, h, k)?.to_sparse(0))
    }

    /// `E^(c)_{x,y}(q,t)`; for `x <= 0` this is `P^(c,2)_y(q,t)`.
    pub fn e_poly(&self, c: u64, x: i64, y: i64) -> Result<SparseBiPoly> {
        let v = self.e_view(c, x, y)?;
        Ok(v.poly.to_sparse(v.scale))
    }

    /// `O^(c)_{x,y}(q,t)`; for `x <= 0` this is `P^(c,2)_y(q,qt)`.
    pub fn o_poly(&self, c: u64, x: i64, y: i64) -> Result<SparseBiPoly> {
        let v = self.o_view(c, x, y)?;
        Ok(v.poly.to_sparse(v.scale))
    }

    pub fn a_poly(&self, n: u64) -> Result<SparseBiPoly> {
        Ok(self.a_rows(n)?.to_sparse(0))
    }

    /// `S_n(q)`, the umbral image of `A_n(q,t)`.
    pub fn straub_poly(&self, n: u64) -> Result<QPoly> {
        self.a_rows(n)?.umbral()
    }
}

pub fn p_poly(c: u64, h: u64, k: i64) -> Result<SparseBiPoly> {
    MemoStore::new().p_poly(c, h, k)
}

pub fn e_poly(c: u64, x: i64, y: i64) -> Result<SparseBiPoly> {
    MemoStore::new().e_poly(c, x, y)
}

pub fn o_poly(c: u64, x: i64, y: i64) -> Result<SparseBiPoly> {
    MemoStore::new().o_poly(c, x, y)
}

pub fn a_poly(n: u64) -> Result<SparseBiPoly> {
    MemoStore::new().a_poly(n)
}

/// `S_n(q)` computed with a private memo store, released on return.
pub fn straub_poly(n: u64) -> Result<QPoly> {
    MemoStore::new().straub_poly(n)
}

/// Largest size of a `(2n+1, 2n+3)`-core with distinct parts: `deg S_n`.
pub fn max_size(s_n: &QPoly) -> u64 {
    s_n.degree_q()
}

/// Closed form `(5n+11) n (n+1) (n+2) / 24`.
pub fn max_size_formula(n: u64) -> u64 {
    (5 * n + 11) * n * (n + 1) * (n + 2) / 24
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::a_poly_bruteforce;
    use num_bigint::BigInt;

    fn bp(terms: &[(u64, u64, i64)]) -> SparseBiPoly {
        SparseBiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn triangle_initial_conditions() {
        let store = MemoStore::new();
        for (c, h) in [(3, 1), (5, 2), (13, 2)] {
            assert_eq!(store.p_poly(c, h, -1).unwrap(), SparseBiPoly::one());
            assert_eq!(store.p_poly(c, h, 0).unwrap(), SparseBiPoly::one());
            assert_eq!(store.p_poly(c, h, 1).unwrap(), bp(&[(0, 0, 1), (1, 1, 1)]));
        }
        assert_eq!(
            store.p_poly(3, 2, 4).unwrap().eval_q1_t1(),
            BigInt::from(42)
        );
    }

    #[test]
    fn two_rank_triangle_by_hand() {
        // k = 2, c = 3, h = 1: rank zero {1, 2}, top vertex 1 + (c+h) = 5
        // covering both; ideals {}, {1}, {2}, {1,2}, {1,2,5}
        let p = p_poly(3, 1, 2).unwrap();
        assert_eq!(
            p,
            bp(&[(0, 0, 1), (1, 1, 1), (2, 1, 1), (3, 2, 1), (8, 3, 1)])
        );
    }

    #[test]
    fn boundary_enumerators() {
        let store = MemoStore::new();
        for y in -1..5 {
            let p = store.p_poly(13, 2, y).unwrap();
            assert_eq!(store.e_poly(13, 0, y).unwrap(), p);
            assert_eq!(store.e_poly(13, -3, y).unwrap(), p);
            assert_eq!(store.o_poly(13, 0, y).unwrap(), p.subst_t_scale(1));
        }
        assert_eq!(
            store.e_poly(13, 1, 2).unwrap().eval_q1_t1(),
            BigInt::from(6)
        );
    }

    #[test]
    fn a_poly_small_cases() {
        assert_eq!(a_poly(0).unwrap(), SparseBiPoly::one());
        assert_eq!(
            a_poly(1).unwrap(),
            bp(&[(0, 0, 1), (1, 1, 1), (2, 1, 1), (5, 2, 1)])
        );
        assert_eq!(a_poly(2).unwrap().eval_q1_t1(), BigInt::from(16));
        for n in 0..=3 {
            assert_eq!(a_poly(n).unwrap(), a_poly_bruteforce(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn straub_small_cases() {
        assert_eq!(straub_poly(0).unwrap(), QPoly::one());
        assert_eq!(
            straub_poly(1).unwrap(),
            QPoly::from_terms([(4, 1), (2, 1), (1, 1), (0, 1)])
        );
        let s3 = straub_poly(3).unwrap();
        assert_eq!(s3.eval_one(), BigInt::from(64));
        assert_eq!(max_size(&s3), 65);
    }

    #[test]
    fn max_size_closed_form() {
        assert_eq!(max_size_formula(1), 4);
        assert_eq!(max_size_formula(2), 21);
        assert_eq!(max_size_formula(4), 155);
        assert_eq!(max_size_formula(21), 51359);
    }

    #[test]
    fn store_is_reusable_across_n() {
        let store = MemoStore::new();
        let a = store.straub_poly(4).unwrap();
        let b = store.straub_poly(4).unwrap();
        assert_eq!(a, b);
        assert!(!store.is_empty());
        store.clear();
        assert!(store.is_empty());
        assert_eq!(store.straub_poly(4).unwrap(), a);
    }
}
