//! Dense bit sets over a fixed universe `0..n`.
//!
//! Universes of up to `64 * INLINE_WORDS` elements are stored inline without
//! touching the heap; larger universes spill into a heap buffer. Both layouts
//! share the same API.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;
const INLINE_WORDS: usize = 2;

/// A vertex, identified by its position in the precedence order.
///
/// Vertex `i` precedes vertex `j` exactly when `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; INLINE_WORDS]>,
}

#[inline]
fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, words_for(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet {
            universe,
            words: SmallVec::from_elem(u64::MAX, words_for(universe)),
        };
        s.trim();
        s
    }

    /// Builds a set from element indices. Panics if an index is out of range;
    /// use [`VertexSet::try_from_indices`] for untrusted input.
    pub fn from_indices<I>(universe: usize, indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        Self::try_from_indices(universe, indices).expect("index out of universe")
    }

    pub fn try_from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::OutOfUniverse {
                    element: i,
                    universe,
                });
            }
            s.insert(VertexId(i));
        }
        Ok(s)
    }

    /// Interprets the low `universe` bits of `mask` as a set.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut s = Self::empty(universe);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        let i = v.0;
        i < self.universe && self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    /// Returns `true` if `v` was not already present.
    #[inline]
    pub fn insert(&mut self, v: VertexId) -> bool {
        let i = v.0;
        assert!(
            i < self.universe,
            "vertex {i} outside universe of {}",
            self.universe
        );
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1 << (i % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) -> bool {
        let i = v.0;
        if i >= self.universe {
            return false;
        }
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1 << (i % WORD_BITS);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    #[inline]
    fn check_same(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "universe mismatch");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        s
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Size of `self ∩ other`, without allocating.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The highest-precedence (smallest-index) member.
    pub fn first(&self) -> Option<VertexId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| VertexId(i * WORD_BITS + w.trailing_zeros() as usize))
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Lexicographic comparison: `Less` when the smallest-index element of
    /// the symmetric difference belongs to `self`.
    pub fn lex_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let lowest = diff & diff.wrapping_neg();
                return Ok(if a & lowest != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                });
            }
        }
        Ok(Ordering::Equal)
    }

    /// Maps every member `v` to `map[v]` in a universe of size `universe`.
    /// Members mapped to `None` are dropped.
    pub fn remap(&self, universe: usize, map: &[Option<VertexId>]) -> Self {
        let mut s = Self::empty(universe);
        for v in self.iter() {
            if let Some(w) = map[v.0] {
                s.insert(w);
            }
        }
        s
    }

    /// Copies the set into a larger universe, keeping indices.
    pub fn widen(&self, universe: usize) -> Self {
        assert!(universe >= self.universe);
        let mut s = Self::empty(universe);
        for (dst, src) in s.words.iter_mut().zip(&self.words) {
            *dst = *src;
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(VertexId(self.word * WORD_BITS + bit));
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
