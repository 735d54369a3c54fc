use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of a universe, stored as a fixed-width bit vector indexed by
/// element position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(FixedBitSet);

impl SubsetMask {
    pub fn empty(width: usize) -> Self {
        SubsetMask(FixedBitSet::with_capacity(width))
    }

    pub fn full(width: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(width);
        bits.insert_range(..);
        SubsetMask(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut mask = Self::empty(width);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    /// Parses a `0`/`1` string where position `i` is element `i`.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut mask = Self::empty(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => mask.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(mask)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.0.set(i, value);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width()
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &SubsetMask) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersects(&self, other: &SubsetMask) -> bool {
        !self.is_disjoint(other)
    }

    pub fn complement(&self) -> SubsetMask {
        let mut bits = self.0.clone();
        bits.toggle_range(..);
        SubsetMask(bits)
    }

    /// `self` for polarity 1, its complement for polarity 0.
    pub fn signed(&self, polarity: bool) -> SubsetMask {
        if polarity {
            self.clone()
        } else {
            self.complement()
        }
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        let mut bits = self.0.clone();
        bits.intersect_with(&other.0);
        SubsetMask(bits)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut bits = self.0.clone();
        bits.union_with(&other.0);
        SubsetMask(bits)
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        let mut bits = self.0.clone();
        bits.difference_with(&other.0);
        SubsetMask(bits)
    }

    pub fn intersect_with(&mut self, other: &SubsetMask) {
        self.0.intersect_with(&other.0);
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        self.0.union_with(&other.0);
    }

    pub fn first(&self) -> Option<usize> {
        self.0.ones().next()
    }

    /// Member element indices in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.width())
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({})", self.to_bitstring())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}
