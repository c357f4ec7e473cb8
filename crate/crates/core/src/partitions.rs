//! Integer partitions, hook lengths, core predicates and beta-sets.
//!
//! [`enumerate_core_distinct`] is the slow, direct enumerator of simultaneous
//! core partitions with distinct parts. It only ever looks at hook lengths of
//! Ferrers diagrams, so it shares no machinery with the poset or recurrence
//! code it is used to check.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let positive = parts.iter().all(|&p| p > 0);
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if positive && ordered {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition { parts })
        }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// True when the parts are strictly decreasing.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate partition (columns of the Ferrers diagram read as rows).
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u64)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Hook lengths of every cell, row by row.
pub fn hook_lengths(p: &Partition) -> Vec<u64> {
    let conj = p.conjugate();
    let mut hooks = Vec::with_capacity(p.size() as usize);
    for (i, &row) in p.parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - j as u64 - 1;
            let leg = conj.parts[j] - i as u64 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// True iff no hook length of `p` equals `s`.
pub fn is_core(p: &Partition, s: u64) -> bool {
    !hook_lengths(p).contains(&s)
}

/// All partitions with distinct parts that are both `s`-cores and `t`-cores,
/// sorted by size and then lexicographically.
///
/// Rows are stacked from the bottom up. Putting a longer row on top leaves
/// every existing hook unchanged, so a stack is abandoned as soon as one of
/// its cells has a forbidden hook. Parts are bounded by `s * t`.
pub fn enumerate_core_distinct(s: u64, t: u64) -> Result<Vec<Partition>> {
    if s == 0 || t == 0 || s.gcd(&t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    let bound = s * t;
    let mut found = Vec::new();
    // bottom-to-top rows, strictly increasing
    let mut stack: Vec<u64> = Vec::new();
    extend_upwards(&mut stack, bound, s, t, &mut found);
    found.sort_by(|a: &Partition, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    Ok(found)
}

fn extend_upwards(rows: &mut Vec<u64>, bound: u64, s: u64, t: u64, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: rows.iter().rev().copied().collect(),
    });
    let floor = rows.last().copied().unwrap_or(0);
    for len in floor + 1..bound {
        if top_row_avoids(rows, len, s, t) {
            rows.push(len);
            extend_upwards(rows, bound, s, t, out);
            rows.pop();
        }
    }
}

/// Hooks of a new top row of length `len` over the existing `rows`.
fn top_row_avoids(rows: &[u64], len: u64, s: u64, t: u64) -> bool {
    (1..=len).all(|j| {
        let leg = rows.iter().filter(|&&r| r >= j).count() as u64;
        let hook = len - j + leg + 1;
        hook != s && hook != t
    })
}

/// A finite set of distinct non-negative labels encoding a partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    labels: BTreeSet<u64>,
}

impl BetaSet {
    /// Rejects label lists containing a repeat.
    pub fn new(labels: &[u64]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &l in labels {
            if !set.insert(l) {
                return Err(Error::RepeatedLabel(l));
            }
        }
        Ok(BetaSet { labels: set })
    }

    pub fn labels(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.labels.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.labels.iter().sum()
    }

    /// Size of the encoded partition: label sum minus k(k-1)/2.
    pub fn partition_size(&self) -> u64 {
        let k = self.labels.len() as u64;
        self.sum() - k * k.saturating_sub(1) / 2
    }

    pub fn contains_consecutive(&self) -> bool {
        self.labels
            .iter()
            .zip(self.labels.iter().skip(1))
            .any(|(a, b)| b - a == 1)
    }
}

/// First-column hook lengths of `p`.
pub fn beta_set(p: &Partition) -> BetaSet {
    let k = p.len() as u64;
    let labels = p
        .parts
        .iter()
        .enumerate()
        .map(|(i, &part)| part + k - i as u64 - 1)
        .collect();
    BetaSet { labels }
}

/// Inverse of [`beta_set`]; zero parts produced by a label 0 are dropped.
pub fn partition_from_beta(b: &BetaSet) -> Partition {
    let k = b.labels.len() as u64;
    let parts = b
        .labels
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &a)| a - (k - 1 - i as u64))
        .filter(|&p| p > 0)
        .collect();
    Partition { parts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u64]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn hook_table_of_54211() {
        let hooks = hook_lengths(&part(&[5, 4, 2, 1, 1]));
        assert_eq!(hooks, vec![9, 6, 4, 3, 1, 7, 4, 2, 1, 4, 1, 2, 1]);
        assert_eq!(part(&[5, 4, 2, 1, 1]).conjugate(), part(&[5, 3, 2, 2, 1]));
    }

    #[test]
    fn hooks_of_tiny_partitions() {
        assert!(hook_lengths(&Partition::empty()).is_empty());
        assert_eq!(hook_lengths(&part(&[1])), vec![1]);
    }

    #[test]
    fn core_predicate() {
        let p = part(&[5, 4, 2, 1, 1]);
        assert!(is_core(&p, 5));
        assert!(!is_core(&p, 4));
        assert!((10..40).all(|s| is_core(&p, s)));
        assert!((1..20).all(|s| is_core(&Partition::empty(), s)));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn three_five_cores_with_distinct_parts() {
        let cores = enumerate_core_distinct(3, 5).unwrap();
        let expected = vec![Partition::empty(), part(&[1]), part(&[2]), part(&[3, 1])];
        assert_eq!(cores, expected);
        let sizes: Vec<u64> = cores.iter().map(Partition::size).collect();
        assert_eq!(sizes, vec![0, 1, 2, 4]);
    }

    #[test]
    fn all_three_five_cores_via_hooks() {
        // every partition with parts < 15 and at most 8 rows, filtered only by hooks
        let mut all = Vec::new();
        for p in small_partitions(8, 8) {
            if is_core(&p, 3) && is_core(&p, 5) {
                all.push(p.size());
            }
        }
        assert_eq!(sorted(all), vec![0, 1, 2, 2, 4, 4, 8]);
    }

    #[test]
    fn one_two_has_only_the_empty_core() {
        assert_eq!(
            enumerate_core_distinct(1, 2).unwrap(),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn five_seven_has_sixteen() {
        let cores = enumerate_core_distinct(5, 7).unwrap();
        assert_eq!(cores.len(), 16);
        assert!(cores.iter().all(|p| p.has_distinct_parts()));
        assert!(cores.iter().all(|p| is_core(p, 5) && is_core(p, 7)));
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(matches!(
            enumerate_core_distinct(4, 6),
            Err(Error::NotCoprime { s: 4, t: 6 })
        ));
    }

    #[test]
    fn beta_set_examples() {
        let b = beta_set(&part(&[3, 1]));
        assert_eq!(b.labels().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(b.partition_size(), 4);
        assert_eq!(beta_set(&Partition::empty()), BetaSet::default());
        assert_eq!(partition_from_beta(&BetaSet::default()), Partition::empty());
        assert_eq!(
            partition_from_beta(&BetaSet::new(&[2]).unwrap()),
            part(&[2])
        );
        assert!(matches!(
            BetaSet::new(&[3, 1, 3]),
            Err(Error::RepeatedLabel(3))
        ));
    }

    /// Partitions with at most `rows` parts, each at most `max_part`.
    fn small_partitions(rows: usize, max_part: u64) -> Vec<Partition> {
        fn go(prefix: &mut Vec<u64>, rows: usize, cap: u64, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if prefix.len() == rows {
                return;
            }
            for p in 1..=cap {
                prefix.push(p);
                go(prefix, rows, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), rows, max_part, &mut out);
        out
    }

    #[test]
    fn beta_round_trip_and_consecutive_labels() {
        // at most 8 parts, parts at most 20 would be ~10^7 partitions; the
        // full sweep lives in the integration suite
        for p in small_partitions(6, 10) {
            let b = beta_set(&p);
            assert_eq!(partition_from_beta(&b), p);
            assert_eq!(b.partition_size(), p.size());
            assert_eq!(!b.contains_consecutive(), p.has_distinct_parts(), "{p}");
            assert_eq!(hook_lengths(&p).len() as u64, p.size());
        }
    }
}
