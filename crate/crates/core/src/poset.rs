//! The poset `P(s,t)` of non-negative integers not of the form `a*s + b*t`,
//! its order ideals without consecutive labels, and the brute-force
//! enumerators `A_n(q,t)` and `S_n(q)` built from them.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::bipoly::{QPoly, SparseBiPoly};
use crate::error::{Error, Result};

/// `P(s,t)` with elements sorted by label and generator covers precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorePoset {
    s: u64,
    t: u64,
    elements: Vec<u64>,
    // index of x - s / x - t, when that is >= 0
    below_s: Vec<Option<usize>>,
    below_t: Vec<Option<usize>>,
    // index of x - 1 when it is an element
    predecessor: Vec<Option<usize>>,
}

/// Rejects `gcd(s, t) != 1` (and zero arguments).
pub fn build_poset(s: u64, t: u64) -> Result<CorePoset> {
    if s == 0 || t == 0 || s.gcd(&t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    // Frobenius number is s*t - s - t, so every gap is below s*t.
    let limit = (s * t) as usize;
    let mut representable = vec![false; limit];
    representable[0] = true;
    for x in 1..limit {
        let xs = x as u64;
        representable[x] = (xs >= s && representable[x - s as usize])
            || (xs >= t && representable[x - t as usize]);
    }
    let elements: Vec<u64> = (0..limit as u64)
        .filter(|&x| !representable[x as usize])
        .collect();
    let index_of = |label: u64| elements.binary_search(&label).ok();
    let below = |g: u64| -> Vec<Option<usize>> {
        elements
            .iter()
            .map(|&x| {
                x.checked_sub(g)
                    .map(|y| index_of(y).expect("closure under generators"))
            })
            .collect()
    };
    let below_s = below(s);
    let below_t = below(t);
    let predecessor = elements
        .iter()
        .map(|&x| x.checked_sub(1).and_then(index_of))
        .collect();
    Ok(CorePoset {
        s,
        t,
        elements,
        below_s,
        below_t,
        predecessor,
    })
}

impl CorePoset {
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, label: u64) -> bool {
        self.elements.binary_search(&label).is_ok()
    }

    /// `c <= d` in the poset order: `d - c` is a non-negative combination of `s` and `t`.
    pub fn le(&self, c: u64, d: u64) -> bool {
        if d < c {
            return false;
        }
        let diff = d - c;
        (0..=diff / self.s).any(|a| (diff - a * self.s).is_multiple_of(self.t))
    }

    /// Downward closure checked through generator covers only.
    pub fn is_order_ideal(&self, members: &[u64]) -> bool {
        members.iter().all(|&x| {
            self.contains(x)
                && [self.s, self.t]
                    .iter()
                    .all(|&g| x < g || members.contains(&(x - g)))
        })
    }

    /// Enumerates ideals without consecutive labels by backtracking over the
    /// elements in increasing label order.
    pub fn ideals_no_consec(&self) -> Result<IdealIter<'_>> {
        if self.elements.len() > 128 {
            return Err(Error::PosetTooLarge(self.elements.len()));
        }
        Ok(IdealIter {
            poset: self,
            stack: vec![(0, 0)],
        })
    }
}

/// A set of poset elements, sorted by label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: Vec<u64>,
}

impl OrderIdeal {
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn label_sum(&self) -> u64 {
        self.members.iter().sum()
    }

    pub fn has_consecutive(&self) -> bool {
        self.members.windows(2).any(|w| w[1] - w[0] == 1)
    }
}

/// Depth-first stream of ideals; each stack entry is (next index, chosen mask).
pub struct IdealIter<'a> {
    poset: &'a CorePoset,
    stack: Vec<(usize, u128)>,
}

impl Iterator for IdealIter<'_> {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        let p = self.poset;
        let has = |mask: u128, idx: Option<usize>| idx.is_some_and(|i| mask >> i & 1 == 1);
        while let Some((idx, mask)) = self.stack.pop() {
            if idx == p.elements.len() {
                let members = (0..idx)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| p.elements[i])
                    .collect();
                return Some(OrderIdeal { members });
            }
            self.stack.push((idx + 1, mask));
            let closed = [p.below_s[idx], p.below_t[idx]]
                .iter()
                .all(|&b| b.is_none() || has(mask, b));
            if closed && !has(mask, p.predecessor[idx]) {
                self.stack.push((idx + 1, mask | 1 << idx));
            }
        }
        None
    }
}

/// Free-function form of [`CorePoset::ideals_no_consec`].
pub fn enumerate_ideals_no_consec(p: &CorePoset) -> Result<IdealIter<'_>> {
    p.ideals_no_consec()
}

/// `A_n(q,t)`: sum of `q^(label sum) t^(size)` over ideals of `P(2n+1, 2n+3)`
/// without consecutive labels.
pub fn a_poly_bruteforce(n: u64) -> Result<SparseBiPoly> {
    let poset = build_poset(2 * n + 1, 2 * n + 3)?;
    let mut a = SparseBiPoly::zero();
    for ideal in poset.ideals_no_consec()? {
        a.add_term(ideal.label_sum(), ideal.len() as u64, BigInt::from(1));
    }
    Ok(a)
}

/// `S_n(q)` as the umbral image of [`a_poly_bruteforce`].
pub fn straub_poly_bruteforce(n: u64) -> Result<QPoly> {
    a_poly_bruteforce(n)?.umbral()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_five() {
        let p = build_poset(3, 5).unwrap();
        assert_eq!(p.elements(), &[1, 2, 4, 7]);
        let ideals: Vec<Vec<u64>> = p
            .ideals_no_consec()
            .unwrap()
            .map(|i| i.members().to_vec())
            .collect();
        let mut sorted = ideals.clone();
        sorted.sort();
        assert_eq!(sorted, vec![vec![], vec![1], vec![1, 4], vec![2]]);
    }

    #[test]
    fn degenerate_and_large_posets() {
        let p = build_poset(1, 7).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.ideals_no_consec().unwrap().count(), 1);
        assert_eq!(build_poset(13, 15).unwrap().len(), 84);
        assert!(build_poset(6, 9).is_err());
        assert!(build_poset(0, 3).is_err());
    }

    #[test]
    fn cardinality_formula() {
        for (s, t) in [(2, 3), (3, 7), (5, 8), (7, 9), (11, 13), (4, 9)] {
            let p = build_poset(s, t).unwrap();
            assert_eq!(p.len() as u64, (s - 1) * (t - 1) / 2, "({s},{t})");
            for &x in p.elements() {
                for g in [s, t] {
                    if x >= g {
                        assert!(p.contains(x - g));
                    }
                }
            }
        }
    }

    #[test]
    fn five_seven_has_sixteen_ideals() {
        let p = build_poset(5, 7).unwrap();
        let ideals: Vec<_> = p.ideals_no_consec().unwrap().collect();
        assert_eq!(ideals.len(), 16);
        for i in &ideals {
            assert!(p.is_order_ideal(i.members()));
            assert!(!i.has_consecutive());
        }
    }

    #[test]
    fn brute_force_enumerators() {
        assert_eq!(a_poly_bruteforce(0).unwrap(), SparseBiPoly::one());
        assert_eq!(straub_poly_bruteforce(0).unwrap(), QPoly::one());
        let a1 = SparseBiPoly::from_terms([(0, 0, 1), (1, 1, 1), (2, 1, 1), (5, 2, 1)]);
        assert_eq!(a_poly_bruteforce(1).unwrap(), a1);
        assert_eq!(
            straub_poly_bruteforce(1).unwrap(),
            QPoly::from_terms([(4, 1), (2, 1), (1, 1), (0, 1)])
        );
        assert_eq!(a_poly_bruteforce(2).unwrap().eval_q1_t1(), BigInt::from(16));
    }

    #[test]
    fn order_relation() {
        let p = build_poset(3, 5).unwrap();
        assert!(p.le(1, 4));
        assert!(p.le(2, 7));
        assert!(p.le(2, 2));
        assert!(!p.le(1, 2));
        assert!(!p.le(4, 1));
    }
}
