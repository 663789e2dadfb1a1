//! Subsets of a vertex universe `{0, .., 63}` packed into one machine word.
//!
//! A `VertexSet` doubles as the support of a squarefree monomial.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_UNIVERSE: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_UNIVERSE);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_UNIVERSE && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        *self = *self | VertexSet::singleton(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Order on the sorted member lists, e.g. `{0,1} < {0,2} < {1}`.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Checks that every member is below `n`.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    /// Renames members through `map` (old index -> new index).
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().map(|v| map[v]).collect()
    }

    pub fn shift(self, offset: usize) -> Self {
        self.iter().map(|v| v + offset).collect()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lex order on member lists, matching [`VertexSet::lex_cmp`].
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(*other)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// Monomial notation: `x0x2x5`, or `1` for the empty support.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for v in self.iter() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_UNIVERSE) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the 64-vertex limit"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}
