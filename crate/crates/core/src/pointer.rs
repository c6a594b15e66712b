//! Pointers, pointer strings and legal strings.
//!
//! Two text formats are understood:
//!
//! * spaced: whitespace separated tokens, each an optional `-` (the bar)
//!   followed by a decimal magnitude, e.g. `3 2 -4 3 -2 4`;
//! * compact: one digit per pointer, optionally preceded by `-`, e.g.
//!   `32-43-24`. Only magnitudes up to 9 fit.
//!
//! Input containing any whitespace is read as spaced, anything else as
//! compact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pointer_set::PointerSet;

/// A pointer `p` or its barred variant `p̄`, with magnitude `p >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pointer {
    magnitude: u32,
    barred: bool,
}

impl Pointer {
    pub fn new(magnitude: u32, barred: bool) -> Result<Self> {
        if magnitude < 2 {
            return Err(Error::MagnitudeTooSmall(magnitude));
        }
        Ok(Pointer { magnitude, barred })
    }

    /// Unbarred pointer. Panics on magnitudes below 2.
    pub fn plain(magnitude: u32) -> Self {
        Self::new(magnitude, false).expect("pointer magnitude must be at least 2")
    }

    /// Barred pointer. Panics on magnitudes below 2.
    pub fn barred(magnitude: u32) -> Self {
        Self::new(magnitude, true).expect("pointer magnitude must be at least 2")
    }

    pub fn magnitude(self) -> u32 {
        self.magnitude
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    pub fn bar(self) -> Self {
        Pointer {
            barred: !self.barred,
            ..self
        }
    }

    pub fn unbarred(self) -> Self {
        Pointer {
            barred: false,
            ..self
        }
    }
}

impl fmt::Display for Pointer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            f.write_str("-")?;
        }
        write!(f, "{}", self.magnitude)
    }
}

impl fmt::Debug for Pointer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An arbitrary sequence of pointers; legality is not required.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointerString(Vec<Pointer>);

impl PointerString {
    pub fn new(seq: Vec<Pointer>) -> Self {
        PointerString(seq)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.chars().any(char::is_whitespace) {
            Self::parse_spaced(text)
        } else {
            Self::parse_compact(text)
        }
    }

    pub fn parse_spaced(text: &str) -> Result<Self> {
        text.split_ascii_whitespace()
            .map(parse_token)
            .collect::<Result<Vec<_>>>()
            .map(PointerString)
    }

    pub fn parse_compact(text: &str) -> Result<Self> {
        let mut seq = Vec::with_capacity(text.len());
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            let (barred, digit) = if c == '-' {
                match chars.next() {
                    Some(d) => (true, d),
                    None => {
                        return Err(Error::MalformedToken {
                            token: "-".into(),
                            reason: "bar without a pointer",
                        })
                    }
                }
            } else {
                (false, c)
            };
            let value = digit.to_digit(10).ok_or_else(|| Error::MalformedToken {
                token: digit.to_string(),
                reason: "expected a digit",
            })?;
            seq.push(Pointer::new(value, barred)?);
        }
        Ok(PointerString(seq))
    }

    pub fn as_slice(&self) -> &[Pointer] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Pointer> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Occurrence count per magnitude.
    fn counts(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for p in &self.0 {
            *counts.entry(p.magnitude()).or_insert(0) += 1;
        }
        counts
    }

    /// Every magnitude present occurs exactly twice, barred or not.
    pub fn is_legal(&self) -> bool {
        self.counts().values().all(|&c| c == 2)
    }

    fn legality_violation(&self) -> Option<String> {
        self.counts()
            .into_iter()
            .find(|&(_, c)| c != 2)
            .map(|(p, c)| format!("pointer {p} occurs {c} time(s)"))
    }

    /// Set of unbarred magnitudes occurring in the string.
    pub fn domain(&self) -> PointerSet {
        self.0.iter().map(|p| p.magnitude()).collect()
    }

    /// Bars every letter.
    pub fn complement(&self) -> Self {
        PointerString(self.0.iter().map(|p| p.bar()).collect())
    }

    pub fn reversal(&self) -> Self {
        PointerString(self.0.iter().rev().copied().collect())
    }

    /// Complement of the reversal.
    pub fn inverse(&self) -> Self {
        PointerString(self.0.iter().rev().map(|p| p.bar()).collect())
    }

    /// All rotations `w2 w1` of `u = w1 w2`, starting with `u` itself.
    /// Rotations may coincide; the empty string has the single conjugate λ.
    pub fn conjugates(&self) -> Vec<Self> {
        let n = self.0.len();
        if n == 0 {
            return vec![self.clone()];
        }
        (0..n)
            .map(|k| {
                let mut v = self.0[k..].to_vec();
                v.extend_from_slice(&self.0[..k]);
                PointerString(v)
            })
            .collect()
    }

    pub fn format_spaced(&self) -> String {
        let tokens: Vec<String> = self.0.iter().map(Pointer::to_string).collect();
        tokens.join(" ")
    }

    pub fn format_compact(&self) -> Result<String> {
        if let Some(p) = self.0.iter().find(|p| p.magnitude() > 9) {
            return Err(Error::NotCompactable(p.magnitude()));
        }
        Ok(self.0.iter().map(Pointer::to_string).collect())
    }
}

fn parse_token(token: &str) -> Result<Pointer> {
    let (barred, digits) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedToken {
            token: token.into(),
            reason: "expected an optional '-' followed by a decimal",
        });
    }
    let value: u32 = digits.parse().map_err(|_| Error::MalformedToken {
        token: token.into(),
        reason: "magnitude does not fit in 32 bits",
    })?;
    Pointer::new(value, barred)
}

impl FromStr for PointerString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PointerString::parse(s)
    }
}

impl From<Vec<Pointer>> for PointerString {
    fn from(seq: Vec<Pointer>) -> Self {
        PointerString(seq)
    }
}

impl Deref for PointerString {
    type Target = [Pointer];
    fn deref(&self) -> &[Pointer] {
        &self.0
    }
}

/// Compact when every magnitude is at most 9, spaced otherwise.
impl fmt::Display for PointerString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.format_compact() {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str(&self.format_spaced()),
        }
    }
}

impl fmt::Debug for PointerString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A legal string: each magnitude in its domain occurs exactly twice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegalString {
    seq: PointerString,
    /// 0-based indices of the two occurrences of each magnitude.
    occurrences: BTreeMap<u32, (usize, usize)>,
}

impl LegalString {
    pub fn new(seq: PointerString) -> Result<Self> {
        if let Some(why) = seq.legality_violation() {
            return Err(Error::NotLegal(why));
        }
        let mut occurrences: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for (i, p) in seq.iter().enumerate() {
            occurrences
                .entry(p.magnitude())
                .and_modify(|o| o.1 = i)
                .or_insert((i, i));
        }
        Ok(LegalString { seq, occurrences })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(PointerString::parse(text)?)
    }

    pub fn empty() -> Self {
        LegalString {
            seq: PointerString::empty(),
            occurrences: BTreeMap::new(),
        }
    }

    pub fn as_pointer_string(&self) -> &PointerString {
        &self.seq
    }

    pub fn into_pointer_string(self) -> PointerString {
        self.seq
    }

    /// 1-based letter access `x_i`.
    pub fn letter(&self, i: usize) -> Pointer {
        self.seq[i - 1]
    }

    pub fn domain(&self) -> PointerSet {
        self.occurrences.keys().copied().collect()
    }

    /// `|dom(u)| + 1`.
    pub fn kappa(&self) -> u32 {
        self.occurrences.len() as u32 + 1
    }

    /// Whether the domain is exactly `{2,...,kappa}`.
    pub fn has_contiguous_domain(&self) -> bool {
        self.occurrences
            .keys()
            .copied()
            .eq(2..=self.occurrences.len() as u32 + 1)
    }

    /// 0-based indices of the two occurrences of `p`.
    pub fn occurrences(&self, p: u32) -> Option<(usize, usize)> {
        self.occurrences.get(&p).copied()
    }

    pub fn is_positive(&self, p: u32) -> Result<bool> {
        let (i, j) = self.occurrences(p).ok_or(Error::NotInDomain(p))?;
        Ok(self.seq[i].is_barred() != self.seq[j].is_barred())
    }

    pub fn positive_set(&self) -> PointerSet {
        self.occurrences
            .iter()
            .filter(|(_, &(i, j))| self.seq[i].is_barred() != self.seq[j].is_barred())
            .map(|(&p, _)| p)
            .collect()
    }

    pub fn negative_set(&self) -> PointerSet {
        &self.domain() ^ &self.positive_set()
    }

    /// Pointers overlapping `p`: exactly one of their occurrences lies
    /// strictly inside the `p`-interval.
    pub fn overlap_set(&self, p: u32) -> Result<PointerSet> {
        let (i, j) = self.occurrences(p).ok_or(Error::NotInDomain(p))?;
        Ok(self.odd_magnitudes(i + 1, j))
    }

    /// Pointers with exactly one occurrence in `x_{i+1} ... x_j`, where
    /// positions are the gaps `0..=n` between letters. Symmetric in `i, j`.
    pub fn positional_overlap(&self, i: usize, j: usize) -> Result<PointerSet> {
        let n = self.len();
        for position in [i, j] {
            if position > n {
                return Err(Error::PositionOutOfRange { position, len: n });
            }
        }
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        Ok(self.odd_magnitudes(lo, hi))
    }

    /// Magnitudes occurring an odd number of times in 0-based `seq[lo..hi]`.
    fn odd_magnitudes(&self, lo: usize, hi: usize) -> PointerSet {
        let mut set = PointerSet::new();
        for p in &self.seq[lo..hi] {
            set.toggle(p.magnitude());
        }
        set
    }

    fn relabel(seq: PointerString) -> Self {
        LegalString::new(seq).expect("legality is preserved by bar, reversal and rotation")
    }

    pub fn complement(&self) -> Self {
        Self::relabel(self.seq.complement())
    }

    pub fn reversal(&self) -> Self {
        Self::relabel(self.seq.reversal())
    }

    pub fn inverse(&self) -> Self {
        Self::relabel(self.seq.inverse())
    }

    pub fn conjugates(&self) -> Vec<Self> {
        self.seq.conjugates().into_iter().map(Self::relabel).collect()
    }
}

impl TryFrom<PointerString> for LegalString {
    type Error = Error;
    fn try_from(seq: PointerString) -> Result<Self> {
        LegalString::new(seq)
    }
}

impl FromStr for LegalString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LegalString::parse(s)
    }
}

impl Deref for LegalString {
    type Target = [Pointer];
    fn deref(&self) -> &[Pointer] {
        &self.seq
    }
}

impl fmt::Display for LegalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.seq, f)
    }
}

impl fmt::Debug for LegalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.seq, f)
    }
}
