use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a bitmask can hold.
pub const MAX_GROUND: usize = 63;

/// Default limit on `p` for operations that walk all `2^p` subsets.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;

/// The ground set `{0, .., p-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet(usize);

impl GroundSet {
    pub fn new(p: usize) -> Result<Self> {
        if p == 0 || p > MAX_GROUND {
            return Err(Error::InvalidGroundSet { p });
        }
        Ok(GroundSet(p))
    }

    pub fn len(self) -> usize {
        self.0
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn full(self) -> Subset {
        Subset::full(self.0)
    }

    pub fn contains(self, a: Subset) -> bool {
        a.bits() & !self.full().bits() == 0
    }

    /// All subsets in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        (0..(1u64 << self.0)).map(Subset)
    }
}

/// Refuses enumeration of `2^p` subsets beyond `cap`.
pub fn check_cap(p: usize, cap: usize) -> Result<()> {
    if p > cap {
        Err(Error::CapExceeded { p, cap })
    } else {
        Ok(())
    }
}

/// A subset of the ground set, bit `k` set iff element `k` belongs to it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(p: usize) -> Self {
        debug_assert!(p <= MAX_GROUND);
        Subset((1u64 << p) - 1)
    }

    pub fn singleton(k: usize) -> Self {
        Subset(1u64 << k)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0u64, |m, k| m | (1u64 << k)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn insert(self, k: usize) -> Self {
        Subset(self.0 | (1u64 << k))
    }

    pub fn remove(self, k: usize) -> Self {
        Subset(self.0 & !(1u64 << k))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement within `{0, .., p-1}`.
    pub fn complement(self, p: usize) -> Self {
        Subset(!self.0 & Subset::full(p).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, ascending in bitmask order.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            mask: self.0,
            next: Some(0),
        }
    }

    /// `s(A) = Σ_{k∈A} s_k`.
    pub fn sum(self, s: &[f64]) -> f64 {
        self.iter().map(|k| s[k]).sum()
    }

    /// The 0/1 indicator vector of length `p`.
    pub fn indicator(self, p: usize) -> Vec<f64> {
        (0..p).map(|k| if self.contains(k) { 1.0 } else { 0.0 }).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let k = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(k)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct SubsetsOf {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // next submask in increasing order
        self.next = if cur == self.mask {
            None
        } else {
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}
