//! Integer partitions and compositions: the index sets that label graded
//! bases and graph vertices.
//!
//! Enumeration orders are pinned once and for all — reverse-lexicographic
//! for partitions, lexicographic for compositions — so that every matrix,
//! DOT file, and report downstream is byte-deterministic. `Ord` on both
//! types is the canonical enumeration order graded by size.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty sequence
/// is the unique partition of 0. Renders as `[3,1]`, the empty one as `[]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts: the grading degree.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// The i-th part, or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Part-wise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }
}

impl Ord for Partition {
    /// Canonical enumeration order: by size, then reverse-lexicographic on
    /// the part sequences, so `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A finite sequence of positive integers; the empty sequence is the unique
/// composition of 0. Renders as `(2,1,1)`, the empty one as `()`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().all(|&p| p >= 1) {
            Ok(Composition(parts))
        } else {
            Err(Error::InvalidComposition(parts))
        }
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Composition {
    /// Canonical enumeration order: by size, then lexicographic, so
    /// `(1,1,1) < (1,2) < (2,1) < (3)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=remaining.min(max_part)).rev() {
            cur.push(k);
            rec(remaining - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` in canonical (lexicographic) order; there are
/// 2^(n-1) of them for n >= 1.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    fn rec(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for k in 1..=remaining {
            cur.push(k);
            rec(remaining - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// The partitions covering `lam` in the Young lattice: add 1 to a part
/// where the result stays weakly decreasing, or append a new part 1.
/// Canonical order.
pub fn young_covers(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for i in 0..lam.num_parts() {
        if i == 0 || lam.0[i - 1] > lam.0[i] {
            let mut parts = lam.0.clone();
            parts[i] += 1;
            out.push(Partition(parts));
        }
    }
    let mut parts = lam.0.clone();
    parts.push(1);
    out.push(Partition(parts));
    out.sort();
    out.dedup();
    out
}

/// The composition of n whose partial sums are the descent positions of the
/// permutation `w` of {1..n}. Rejects words that are not permutations.
pub fn descent_composition(w: &[u32]) -> Result<Composition> {
    let n = w.len();
    let mut seen = vec![false; n];
    for &x in w {
        if x == 0 || x as usize > n || seen[x as usize - 1] {
            return Err(Error::NotPermutation(w.to_vec()));
        }
        seen[x as usize - 1] = true;
    }
    let mut parts = Vec::new();
    let mut run: u32 = 0;
    for i in 0..n {
        run += 1;
        if i + 1 == n || w[i] > w[i + 1] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Composition(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    /// Independent partition-count oracle: p(n, k) = partitions of n with
    /// parts <= k, by the classic two-way recurrence.
    fn partition_count_oracle(n: u32) -> u64 {
        let n = n as usize;
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        table[0] = vec![1; n + 1];
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let got = partitions_of(4);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn partitions_of_eight_has_twenty_two_entries() {
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn partition_counts_match_dp_oracle_up_to_twelve() {
        for n in 0..=12u32 {
            let list = partitions_of(n);
            assert_eq!(list.len() as u64, partition_count_oracle(n), "n = {n}");
            // exactly once each, and emitted in canonical order
            let set: BTreeSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len());
            let mut sorted = list.clone();
            sorted.sort();
            assert_eq!(sorted, list);
            for lam in &list {
                assert_eq!(lam.size(), n);
            }
        }
    }

    #[test]
    fn compositions_of_zero_and_three() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(Composition::empty().to_string(), "()");
        let got = compositions_of(3);
        let want = vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])];
        assert_eq!(got, want);
    }

    #[test]
    fn composition_counts_are_powers_of_two() {
        assert_eq!(compositions_of(6).len(), 32);
        for n in 1..=12u32 {
            assert_eq!(compositions_of(n).len(), 1usize << (n - 1), "n = {n}");
        }
    }

    #[test]
    fn compositions_are_emitted_in_lex_order() {
        for n in 0..=8u32 {
            let list = compositions_of(n);
            let mut sorted = list.clone();
            sorted.sort();
            assert_eq!(sorted, list);
        }
    }

    #[test]
    fn young_covers_examples() {
        assert_eq!(young_covers(&Partition::empty()), vec![p(&[1])]);
        assert_eq!(
            young_covers(&p(&[2, 1])),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(young_covers(&p(&[1, 1])), vec![p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn young_covers_match_containment_oracle() {
        // independent route: mu covers lam iff |mu| = |lam| + 1 and mu
        // contains lam part-wise
        for n in 0..=8u32 {
            for lam in partitions_of(n) {
                let oracle: Vec<Partition> = partitions_of(n + 1)
                    .into_iter()
                    .filter(|mu| mu.contains(&lam))
                    .collect();
                assert_eq!(young_covers(&lam), oracle, "lam = {lam}");
            }
        }
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(descent_composition(&[1, 2, 3]).unwrap(), c(&[3]));
        assert_eq!(descent_composition(&[3, 2, 1]).unwrap(), c(&[1, 1, 1]));
        assert_eq!(descent_composition(&[2, 1, 4, 3]).unwrap(), c(&[1, 2, 1]));
        assert_eq!(descent_composition(&[]).unwrap(), Composition::empty());
    }

    #[test]
    fn descent_composition_rejects_non_permutations() {
        assert!(descent_composition(&[1, 1]).is_err());
        assert!(descent_composition(&[1, 3]).is_err());
        assert!(descent_composition(&[0, 1]).is_err());
    }

    #[test]
    fn descent_classes_partition_the_symmetric_group() {
        fn all_permutations(n: u32) -> Vec<Vec<u32>> {
            fn rec(pool: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if pool.is_empty() {
                    out.push(cur.clone());
                    return;
                }
                for i in 0..pool.len() {
                    let x = pool.remove(i);
                    cur.push(x);
                    rec(pool, cur, out);
                    cur.pop();
                    pool.insert(i, x);
                }
            }
            let mut out = Vec::new();
            rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
            out
        }
        for n in 1..=7u32 {
            let mut by_class = std::collections::BTreeMap::<Composition, u64>::new();
            for w in all_permutations(n) {
                *by_class.entry(descent_composition(&w).unwrap()).or_insert(0) += 1;
            }
            let total: u64 = by_class.values().sum();
            let factorial: u64 = (1..=u64::from(n)).product();
            assert_eq!(total, factorial);
            assert_eq!(by_class.len(), compositions_of(n).len());
        }
    }

    #[test]
    fn partition_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(c(&[2, 1, 1]).to_string(), "(2,1,1)");
    }
}
