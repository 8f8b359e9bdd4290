//! Subsets of a ground set `[p]` encoded as bitmasks.
//!
//! Element `i` (1-based, as in `[p] = {1, ..., p}`) occupies bit `i - 1`.

use std::fmt;

/// Largest ground set for which dense `2^p` tables are built.
pub const MAX_GROUND_SET: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    /// The whole ground set `[p]`.
    pub fn full(p: usize) -> Self {
        debug_assert!(p <= 31);
        Subset(((1u64 << p) - 1) as u32)
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(elems: &[usize]) -> Self {
        Subset(elems.iter().fold(0u32, |m, &e| {
            debug_assert!(e >= 1);
            m | 1 << (e - 1)
        }))
    }

    pub fn singleton(elem: usize) -> Self {
        Subset::from_elements(&[elem])
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, elem: usize) -> bool {
        elem >= 1 && self.0 >> (elem - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn complement(self, p: usize) -> Subset {
        Subset(!self.0 & Subset::full(p).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    /// Sum of `values[i - 1]` over elements `i`.
    pub fn sum_of(self, values: &[u32]) -> u64 {
        self.elements().map(|e| values[e - 1] as u64).sum()
    }

    /// All `2^p` subsets of `[p]`, in bitmask order.
    pub fn all(p: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << p).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}
