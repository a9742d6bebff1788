use std::collections::{BTreeSet, HashMap};

use crate::error::Error;

/// A finite partially ordered set with string labels. The order is stored as its
/// reflexive-transitive closure; the generating relations are kept for serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    relations: Vec<(usize, usize)>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// `relations` lists pairs `(smaller, larger)`.
    pub fn new(labels: Vec<String>, relations: Vec<(usize, usize)>) -> Result<Self, Error> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (k, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), k).is_some() {
                return Err(Error::NotPartialOrder(format!("duplicate element {l:?}")));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &relations {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), dim: n });
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} lie on a cycle",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Poset {
            labels,
            index,
            relations,
            leq,
        })
    }

    /// The chain `labels[0] < labels[1] < ...`.
    pub fn chain(labels: Vec<String>) -> Self {
        let rel = (1..labels.len()).map(|k| (k - 1, k)).collect();
        Poset::new(labels, rel).expect("a chain is a partial order")
    }

    pub fn antichain(labels: Vec<String>) -> Result<Self, Error> {
        Poset::new(labels, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Generating relations as given at construction.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `I^{>i}`.
    pub fn strictly_above(&self, i: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&j| self.lt(i, j)).collect()
    }

    /// `I^{>=i}`.
    pub fn at_or_above(&self, i: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    /// Smallest upper set containing `generators`, and whether closing added anything.
    pub fn upper_closure(&self, generators: &[usize]) -> (BTreeSet<usize>, bool) {
        let given: BTreeSet<usize> = generators.iter().copied().collect();
        let closed: BTreeSet<usize> = (0..self.len())
            .filter(|&j| given.iter().any(|&g| self.leq(g, j)))
            .collect();
        let changed = closed != given;
        (closed, changed)
    }

    pub fn is_upper_set(&self, set: &BTreeSet<usize>) -> bool {
        set.iter()
            .all(|&i| (0..self.len()).all(|j| !self.leq(i, j) || set.contains(&j)))
    }

    /// Length of the longest chain ending at `i`.
    pub fn rank(&self, i: usize) -> usize {
        let mut memo = vec![None; self.len()];
        self.rank_memo(i, &mut memo)
    }

    fn rank_memo(&self, i: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(r) = memo[i] {
            return r;
        }
        let r = (0..self.len())
            .filter(|&j| self.lt(j, i))
            .map(|j| self.rank_memo(j, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[i] = Some(r);
        r
    }

    /// Deterministic linear extension: sorted by rank, then label.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut memo = vec![None; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        let ranks: Vec<usize> = order.iter().map(|&i| self.rank_memo(i, &mut memo)).collect();
        order.sort_by(|&a, &b| (ranks[a], &self.labels[a]).cmp(&(ranks[b], &self.labels[b])));
        order
    }

    /// The opposite order.
    pub fn reversed(&self) -> Poset {
        let rel = self.relations.iter().map(|&(a, b)| (b, a)).collect();
        Poset::new(self.labels.clone(), rel).expect("the opposite of a partial order is one")
    }

    /// Induced order on a subset, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut rel = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.lt(i, j) {
                    rel.push((a, b));
                }
            }
        }
        Poset::new(labels, rel).expect("a restriction of a partial order is one")
    }

    /// Disjoint union with prefixed labels.
    pub fn disjoint_union(&self, other: &Poset, left_prefix: &str, right_prefix: &str) -> Poset {
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{left_prefix}{l}"))
            .chain(other.labels.iter().map(|l| format!("{right_prefix}{l}")))
            .collect();
        let off = self.len();
        let rel = self
            .relations
            .iter()
            .copied()
            .chain(other.relations.iter().map(|&(a, b)| (a + off, b + off)))
            .collect();
        Poset::new(labels, rel).expect("disjoint union of partial orders")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|k| k.to_string()).collect()
    }

    #[test]
    fn chain_queries() {
        let p = Poset::chain(labels(4));
        assert!(p.lt(0, 3));
        assert_eq!(p.strictly_above(1), BTreeSet::from([2, 3]));
        assert_eq!(p.at_or_above(3), BTreeSet::from([3]));
        assert_eq!(p.linear_extension(), vec![0, 1, 2, 3]);
        assert_eq!(p.cover_relations(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycles_rejected() {
        assert!(matches!(
            Poset::new(labels(3), vec![(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotPartialOrder(_))
        ));
    }

    #[test]
    fn closure_flags_change() {
        let p = Poset::chain(labels(3));
        let (s, changed) = p.upper_closure(&[1]);
        assert_eq!(s, BTreeSet::from([1, 2]));
        assert!(changed);
        let (_, changed) = p.upper_closure(&[1, 2]);
        assert!(!changed);
    }

    proptest! {
        #[test]
        fn random_dags_close_consistently(
            n in 1usize..7,
            edges in proptest::collection::vec((0usize..7, 0usize..7), 0..12),
        ) {
            // Edges from smaller to larger index always give a partial order.
            let rel: Vec<(usize, usize)> = edges.into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a < b)
                .collect();
            let p = Poset::new(labels(n), rel).unwrap();
            for i in 0..n {
                prop_assert!(p.leq(i, i));
                for j in 0..n {
                    if i != j { prop_assert!(!(p.leq(i, j) && p.leq(j, i))); }
                    for k in 0..n {
                        if p.leq(i, j) && p.leq(j, k) { prop_assert!(p.leq(i, k)); }
                    }
                }
                prop_assert!(p.is_upper_set(&p.strictly_above(i)));
                prop_assert!(p.is_upper_set(&p.at_or_above(i)));
            }
            let ext = p.linear_extension();
            for (a, &i) in ext.iter().enumerate() {
                for &j in &ext[a + 1..] {
                    prop_assert!(!p.lt(j, i));
                }
            }
        }
    }
}
