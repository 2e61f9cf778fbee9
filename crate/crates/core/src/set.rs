//! Dense index sets over the vertices (or edges) of a fixed hypergraph.
//!
//! Every set carries the capacity of the universe it was created for, so the
//! binary operations below must only combine sets drawn from the same
//! hypergraph.

use fixedbitset::FixedBitSet;
use std::cmp::Ordering;
use std::fmt;

/// Set of dense vertex indices of one hypergraph.
pub type VertexSet = BitSet;
/// Set of dense edge indices of one hypergraph.
pub type EdgeSet = BitSet;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet(FixedBitSet);

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        BitSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(universe);
        b.insert_range(..);
        BitSet(b)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, iter: I) -> Self {
        let mut s = Self::empty(universe);
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        Self::from_indices(universe, [i])
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.remove(i);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.ones().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.0.union_with(&other.0);
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.0.union_with(&other.0);
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.0.intersect_with(&other.0);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.0.difference_with(&other.0);
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.0.is_disjoint(&other.0)
    }

    /// All subsets, smallest-first within equal popcount not guaranteed;
    /// order is deterministic (binary counter over the member list).
    pub fn subsets(&self) -> impl Iterator<Item = BitSet> + '_ {
        let members: Vec<usize> = self.iter().collect();
        let universe = self.universe();
        let n = members.len();
        assert!(n < usize::BITS as usize, "subset enumeration too large");
        (0..(1usize << n)).map(move |mask| {
            BitSet::from_indices(
                universe,
                members
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &v)| v),
            )
        })
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.ones().cmp(other.0.ones())
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    /// Capacity is set to one past the maximum element; prefer
    /// `from_indices` when the universe is known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().copied().max().map_or(0, |m| m + 1);
        Self::from_indices(cap, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = BitSet::from_indices(8, [0, 2, 5]);
        let b = BitSet::from_indices(8, [2, 3]);
        assert_eq!(a.union(&b), BitSet::from_indices(8, [0, 2, 3, 5]));
        assert_eq!(a.intersection(&b), BitSet::from_indices(8, [2]));
        assert_eq!(a.difference(&b), BitSet::from_indices(8, [0, 5]));
        assert!(BitSet::from_indices(8, [2]).is_subset(&b));
        assert!(a.intersects(&b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(0));
    }

    #[test]
    fn order_is_lexicographic_on_members() {
        let a = BitSet::from_indices(8, [0, 7]);
        let b = BitSet::from_indices(8, [1]);
        assert!(a < b);
        let c = BitSet::from_indices(8, [0]);
        assert!(c < a);
    }

    #[test]
    fn subsets_enumeration() {
        let a = BitSet::from_indices(5, [1, 3]);
        let subs: Vec<BitSet> = a.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&BitSet::empty(5)));
        assert!(subs.contains(&a));
    }
}
