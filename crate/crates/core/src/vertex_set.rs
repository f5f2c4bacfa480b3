//! Fixed-universe vertex subsets backed by 64-bit words.
//!
//! Graphs up to 128 vertices stay inline; larger universes spill to the heap.

use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

type Words = SmallVec<[u64; 2]>;

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Words,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: smallvec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    /// Builds a set from vertex ids. Panics if an id is not below `n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Interprets the low `n` bits of `mask` as membership.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask needs n <= 64");
        let mut set = Self::empty(n);
        if n > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    fn trim(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the universe this set lives in.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    /// Adds `v`, returning whether it was newly inserted.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        let bit = 1u64 << (v % 64);
        let word = &mut self.words[v / 64];
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let bit = 1u64 << (v % 64);
        let word = &mut self.words[v / 64];
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
        Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(&a, &b)| a & b == 0)
    }

    /// Number of members of `self` outside `other`.
    #[inline]
    pub fn count_outside(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// The unique member of `self` outside `other`, if exactly one exists.
    #[inline]
    pub fn unique_outside(&self, other: &Self) -> Option<usize> {
        let mut found = None;
        for (i, (&a, &b)) in self.words.iter().zip(other.words.iter()).enumerate() {
            let w = a & !b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w.count_ones() > 1 {
                return None;
            }
            found = Some(i * 64 + w.trailing_zeros() as usize);
        }
        found
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as an ascending array of vertex ids.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(70, [0, 3, 65]);
        let b = VertexSet::from_vertices(70, [3, 4, 69]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 4, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        assert_eq!(a.complement().len(), 67);
        assert!(!a.complement().contains(65));
        assert!(VertexSet::from_vertices(70, [3]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn unique_outside_across_words() {
        let nbrs = VertexSet::from_vertices(130, [1, 100]);
        let blue = VertexSet::from_vertices(130, [1]);
        assert_eq!(nbrs.unique_outside(&blue), Some(100));
        assert_eq!(nbrs.unique_outside(&VertexSet::empty(130)), None);
        assert_eq!(nbrs.unique_outside(&nbrs), None);
        assert_eq!(nbrs.count_outside(&blue), 1);
    }

    #[test]
    fn full_trims_padding() {
        for n in [0, 1, 63, 64, 65, 128] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
        }
    }
}
