//! Linear algebra over GF(2) on edge-indexed bit vectors.

use crate::edgeset::EdgeSet;

/// An incrementally reduced basis. Each stored row remembers which input
/// vectors it is the XOR of, so membership queries can return a witness.
#[derive(Clone, Debug)]
pub struct Basis {
    width: usize,
    inputs: usize,
    // (pivot bit, row, combination over inputs)
    rows: Vec<(usize, EdgeSet, EdgeSet)>,
}

impl Basis {
    pub fn new(width: usize, inputs: usize) -> Self {
        Self {
            width,
            inputs,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors(vectors: &[EdgeSet], width: usize) -> Self {
        let mut b = Self::new(width, vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            b.insert(i, v);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &EdgeSet) -> (EdgeSet, EdgeSet) {
        let mut r = v.clone();
        let mut combo = EdgeSet::empty(self.inputs);
        for (pivot, row, c) in &self.rows {
            if r.contains(*pivot) {
                r.xor_with(row);
                combo.xor_with(c);
            }
        }
        (r, combo)
    }

    /// Adds input vector number `idx`; returns whether the rank grew.
    pub fn insert(&mut self, idx: usize, v: &EdgeSet) -> bool {
        assert_eq!(v.width(), self.width);
        let (r, mut combo) = self.reduce(v);
        let Some(pivot) = r.first() else {
            return false;
        };
        combo.insert(idx);
        // Keep rows fully reduced on each other's pivots.
        for (_, row, c) in &mut self.rows {
            if row.contains(pivot) {
                row.xor_with(&r);
                c.xor_with(&combo);
            }
        }
        self.rows.push((pivot, r, combo));
        true
    }

    /// Some set of inputs whose XOR is `target`, if `target` is in the span.
    pub fn solve(&self, target: &EdgeSet) -> Option<Vec<usize>> {
        let (r, combo) = self.reduce(target);
        r.is_empty().then(|| combo.to_vec())
    }

    pub fn contains(&self, target: &EdgeSet) -> bool {
        self.reduce(target).0.is_empty()
    }
}

pub fn in_span(vectors: &[EdgeSet], target: &EdgeSet) -> bool {
    Basis::from_vectors(vectors, target.width()).contains(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xor_of(vectors: &[EdgeSet], width: usize, mask: u32) -> EdgeSet {
        let mut acc = EdgeSet::empty(width);
        for (i, v) in vectors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.xor_with(v);
            }
        }
        acc
    }

    #[test]
    fn simple_span() {
        let a = EdgeSet::from_indices(4, [0, 1]);
        let b = EdgeSet::from_indices(4, [1, 2]);
        let basis = Basis::from_vectors(&[a.clone(), b.clone(), a.symmetric_difference(&b)], 4);
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&EdgeSet::from_indices(4, [0, 2])));
        assert!(!basis.contains(&EdgeSet::from_indices(4, [3])));
        assert!(basis.contains(&EdgeSet::empty(4)));
    }

    proptest! {
        #[test]
        fn span_membership_matches_subset_enumeration(
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..70, 0..12), 1..9),
            target in proptest::collection::btree_set(0usize..70, 0..12),
        ) {
            let width = 70;
            let vectors: Vec<EdgeSet> = raw.iter().map(|s| EdgeSet::from_indices(width, s.iter().copied())).collect();
            let target = EdgeSet::from_indices(width, target);
            let brute = (0..1u32 << vectors.len()).any(|mask| xor_of(&vectors, width, mask) == target);
            let basis = Basis::from_vectors(&vectors, width);
            prop_assert_eq!(basis.contains(&target), brute);
            if let Some(combo) = basis.solve(&target) {
                let mask = combo.iter().fold(0u32, |m, &i| m | 1 << i);
                prop_assert_eq!(xor_of(&vectors, width, mask), target);
            }
            // Any XOR of inputs is in the span.
            let some = xor_of(&vectors, width, 0b1011);
            prop_assert!(basis.contains(&some));
        }
    }
}
