//! Unweighted ideal counts: `p(k)` for triangles, `e(a,b)` / `o(a,b)` for the
//! two-triangle lattices, and `s(n)` for `P(2n+1, 2n+3)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

/// Memo tables for the integer recurrences. Entries never change once stored.
#[derive(Debug)]
pub struct CountTables {
    // p[k] for k >= 0
    p: Vec<BigUint>,
    e: HashMap<(i64, i64), BigUint>,
    o: HashMap<(i64, i64), BigUint>,
}

impl Default for CountTables {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTables {
    pub fn new() -> Self {
        CountTables {
            p: vec![BigUint::one()],
            e: HashMap::new(),
            o: HashMap::new(),
        }
    }

    /// `p(k)`, with `p(k) = 1` for every `k <= 0`.
    pub fn p(&mut self, k: i64) -> BigUint {
        if k <= 0 {
            return BigUint::one();
        }
        let k = k as usize;
        while self.p.len() <= k {
            let m = self.p.len() as i64;
            let next = (1..=m + 1)
                .map(|i| self.p_cached(i - 2) * self.p_cached(m - i))
                .sum();
            self.p.push(next);
        }
        self.p[k].clone()
    }

    fn p_cached(&self, k: i64) -> &BigUint {
        &self.p[k.max(0) as usize]
    }

    pub fn e(&mut self, a: i64, b: i64) -> BigUint {
        if a <= 0 {
            return self.p(b);
        }
        if let Some(v) = self.e.get(&(a, b)) {
            return v.clone();
        }
        let mut sum = BigUint::default();
        for i in 1..=b + 1 {
            sum += self.o(a + 1 - i, b - i) * self.p(i - 2);
        }
        self.e.insert((a, b), sum.clone());
        sum
    }

    pub fn o(&mut self, a: i64, b: i64) -> BigUint {
        if a <= 0 {
            return self.p(b);
        }
        if let Some(v) = self.o.get(&(a, b)) {
            return v.clone();
        }
        let mut sum = BigUint::default();
        for i in 1..=a + 1 {
            sum += self.e(a - i, b + 1 - i) * self.p(i - 2);
        }
        self.o.insert((a, b), sum.clone());
        sum
    }

    pub fn s(&mut self, n: u64) -> BigUint {
        let n = n as i64;
        (1..=n + 1).map(|i| self.e(n - i, n)).sum()
    }
}

/// Number of order ideals of the triangle `P(k+1, k+2)`; `p(-1) = p(0) = 1`.
pub fn p_count(k: i64) -> BigUint {
    CountTables::new().p(k)
}

pub fn e_count(a: i64, b: i64) -> BigUint {
    CountTables::new().e(a, b)
}

pub fn o_count(a: i64, b: i64) -> BigUint {
    CountTables::new().o(a, b)
}

/// Number of ideals of `P(2n+1, 2n+3)` without consecutive labels.
pub fn s_count(n: u64) -> BigUint {
    CountTables::new().s(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(m: u64) -> BigUint {
        // C_m = binom(2m, m) / (m + 1)
        let mut c = BigUint::one();
        for i in 0..m {
            c = c * (2 * m - i) / (i + 1);
        }
        c / (m + 1)
    }

    #[test]
    fn triangle_counts_are_catalan() {
        assert_eq!(p_count(-1), BigUint::one());
        assert_eq!(p_count(0), BigUint::one());
        assert_eq!(p_count(2), BigUint::from(5u32));
        assert_eq!(p_count(5), BigUint::from(132u32));
        let mut tables = CountTables::new();
        for k in 0..60 {
            assert_eq!(tables.p(k), catalan(k as u64 + 1), "k={k}");
        }
    }

    #[test]
    fn two_triangle_counts() {
        assert_eq!(o_count(1, 1), BigUint::from(3u32));
        assert_eq!(e_count(1, 2), BigUint::from(6u32));
        for b in -1..8 {
            assert_eq!(e_count(0, b), p_count(b));
            assert_eq!(o_count(-2, b), p_count(b));
        }
    }

    #[test]
    fn small_s() {
        assert_eq!(s_count(0), BigUint::one());
        assert_eq!(s_count(1), BigUint::from(4u32));
        assert_eq!(s_count(2), BigUint::from(16u32));
        let mut tables = CountTables::new();
        for n in 0..60u64 {
            assert_eq!(tables.s(n), BigUint::from(4u32).pow(n as u32));
        }
    }
}
