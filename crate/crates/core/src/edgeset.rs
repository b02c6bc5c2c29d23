use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(width: usize) -> usize {
    width.div_ceil(WORD)
}

/// A fixed-width bit vector over the edge indices `0..width` of one graph.
///
/// Matchings, cuts and the edge classes of a matching triple are all
/// represented this way. Two sets only combine when their widths agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    width: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            words: vec![0; words_for(width)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self {
            width,
            words: vec![!0; words_for(width)],
        };
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub(crate) fn from_words(width: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(width));
        let mut s = Self { width, words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i` is outside the set's width.
    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "edge index {i} out of range {}", self.width);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.width)
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(self.width, other.width, "edge sets of different widths");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Self { width: self.width, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Self { width: self.width, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        Self { width: self.width, words }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Self { width: self.width, words }
    }

    pub fn complement(&self) -> Self {
        Self::from_words(self.width, self.words.iter().map(|w| !w).collect())
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn xor_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Whether `self ∩ a ∩ b` is non-empty.
    pub fn meets_both(&self, a: &Self, b: &Self) -> bool {
        self.check_width(a);
        self.check_width(b);
        self.words
            .iter()
            .zip(&a.words)
            .zip(&b.words)
            .any(|((x, y), z)| x & y & z != 0)
    }

    /// Indices `lo..width`.
    pub fn from_range(width: usize, lo: usize) -> Self {
        let mut s = Self::full(width);
        for (k, w) in s.words.iter_mut().enumerate() {
            let base = k * WORD;
            if base + WORD <= lo {
                *w = 0;
            } else if base < lo {
                *w &= !0u64 << (lo - base);
            }
        }
        s
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Sets are ordered by their ascending index lists, compared lexicographically.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
