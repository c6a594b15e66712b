//! Sets of pointer magnitudes with a symmetric-difference calculus.
//!
//! Backed by a growable bitset. The word vector is kept trimmed (no trailing
//! zero words) so that derived equality and hashing are set equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, BitXorAssign};

const WORD: u32 = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PointerSet {
    words: Vec<u64>,
}

impl PointerSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(p: u32) -> Self {
        let mut s = Self::new();
        s.insert(p);
        s
    }

    /// The contiguous range `lo..=hi` (empty when `lo > hi`).
    pub fn range(lo: u32, hi: u32) -> Self {
        (lo..=hi).collect()
    }

    fn locate(p: u32) -> (usize, u64) {
        ((p / WORD) as usize, 1u64 << (p % WORD))
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, p: u32) -> bool {
        let (w, bit) = Self::locate(p);
        self.words.get(w).is_some_and(|x| x & bit != 0)
    }

    /// Returns `true` if `p` was not already present.
    pub fn insert(&mut self, p: u32) -> bool {
        let (w, bit) = Self::locate(p);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn remove(&mut self, p: u32) -> bool {
        let (w, bit) = Self::locate(p);
        let present = self.contains(p);
        if present {
            self.words[w] &= !bit;
            self.trim();
        }
        present
    }

    /// `self ⊕ {p}` in place.
    pub fn toggle(&mut self, p: u32) {
        if !self.remove(p) {
            self.insert(p);
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<u32> {
        let w = self.words.len().checked_sub(1)?;
        let top = self.words[w];
        Some(w as u32 * WORD + (WORD - 1 - top.leading_zeros()))
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(w as u32 * WORD + bit)
            })
        })
    }

    pub fn is_subset(&self, other: &PointerSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn symmetric_difference(&self, other: &PointerSet) -> PointerSet {
        self ^ other
    }

    /// `⊕` over a family of sets.
    pub fn xor_all<'a, I>(sets: I) -> PointerSet
    where
        I: IntoIterator<Item = &'a PointerSet>,
    {
        let mut acc = PointerSet::new();
        for s in sets {
            acc ^= s;
        }
        acc
    }

    fn zip_with(&self, other: &PointerSet, f: impl Fn(u64, u64) -> u64) -> PointerSet {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| {
                f(
                    self.words.get(i).copied().unwrap_or(0),
                    other.words.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        let mut out = PointerSet { words };
        out.trim();
        out
    }
}

impl BitXor for &PointerSet {
    type Output = PointerSet;
    fn bitxor(self, rhs: &PointerSet) -> PointerSet {
        self.zip_with(rhs, |a, b| a ^ b)
    }
}

impl BitXor for PointerSet {
    type Output = PointerSet;
    fn bitxor(self, rhs: PointerSet) -> PointerSet {
        &self ^ &rhs
    }
}

impl BitXorAssign<&PointerSet> for PointerSet {
    fn bitxor_assign(&mut self, rhs: &PointerSet) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl BitAnd for &PointerSet {
    type Output = PointerSet;
    fn bitand(self, rhs: &PointerSet) -> PointerSet {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitOr for &PointerSet {
    type Output = PointerSet;
    fn bitor(self, rhs: &PointerSet) -> PointerSet {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl FromIterator<u32> for PointerSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = PointerSet::new();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl<const N: usize> From<[u32; N]> for PointerSet {
    fn from(items: [u32; N]) -> Self {
        items.into_iter().collect()
    }
}

/// Lexicographic order on the ascending element sequences.
impl Ord for PointerSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointerSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
