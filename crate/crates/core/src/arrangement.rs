//! Micronuclear arrangements and their encoding as realistic strings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pointer::{LegalString, Pointer, PointerString};

/// One segment `M_k` or its inversion `M̄_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub index: u32,
    pub inverted: bool,
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            f.write_str("-")?;
        }
        write!(f, "M{}", self.index)
    }
}

/// A permutation of `M_1 ... M_kappa`, each segment possibly inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MicronuclearArrangement {
    segments: Vec<Segment>,
}

impl MicronuclearArrangement {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        let kappa = segments.len();
        if kappa < 2 {
            return Err(Error::InvalidArrangement(format!(
                "need at least 2 segments, got {kappa}"
            )));
        }
        let mut seen = vec![false; kappa + 1];
        for s in &segments {
            let k = s.index as usize;
            if k == 0 || k > kappa {
                return Err(Error::InvalidArrangement(format!(
                    "segment M{k} outside 1..={kappa}"
                )));
            }
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidArrangement(format!("segment M{k} repeated")));
            }
        }
        Ok(MicronuclearArrangement { segments })
    }

    /// Parses tokens `M<k>` / `-M<k>`, e.g. `M7 M1 M6 M3 M5 -M2 M4`.
    pub fn parse(text: &str) -> Result<Self> {
        let segments = text
            .split_ascii_whitespace()
            .map(|token| {
                let (inverted, rest) = match token.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, token),
                };
                let index = rest
                    .strip_prefix('M')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::MalformedToken {
                        token: token.into(),
                        reason: "expected M<k> or -M<k>",
                    })?;
                Ok(Segment { index, inverted })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(segments)
    }

    pub fn kappa(&self) -> u32 {
        self.segments.len() as u32
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// The pointer block of a single segment.
    pub fn block(kappa: u32, segment: Segment) -> Vec<Pointer> {
        let k = segment.index;
        let forward: Vec<Pointer> = if k == 1 {
            vec![Pointer::plain(2)]
        } else if k == kappa {
            vec![Pointer::plain(kappa)]
        } else {
            vec![Pointer::plain(k), Pointer::plain(k + 1)]
        };
        if segment.inverted {
            forward.into_iter().rev().map(Pointer::bar).collect()
        } else {
            forward
        }
    }

    /// The realistic string `π_κ(δ)`.
    pub fn encode(&self) -> LegalString {
        let kappa = self.kappa();
        let seq: Vec<Pointer> = self
            .segments
            .iter()
            .flat_map(|&s| Self::block(kappa, s))
            .collect();
        LegalString::new(PointerString::new(seq)).expect("encoded arrangements are legal")
    }

    /// Finds an arrangement encoding to `u`, if `u` is realistic.
    ///
    /// Blocks are tried left to right in order of segment index, plain before
    /// inverted, so the lexicographically first arrangement is returned.
    pub fn decode(u: &LegalString) -> Option<Self> {
        if u.is_empty() || !u.has_contiguous_domain() {
            return None;
        }
        let kappa = u.kappa();
        let mut used = vec![false; kappa as usize + 1];
        let mut chosen = Vec::with_capacity(kappa as usize);
        if decode_from(u, kappa, 0, &mut used, &mut chosen) {
            Some(MicronuclearArrangement { segments: chosen })
        } else {
            None
        }
    }
}

fn decode_from(
    u: &[Pointer],
    kappa: u32,
    at: usize,
    used: &mut [bool],
    chosen: &mut Vec<Segment>,
) -> bool {
    if at == u.len() {
        return chosen.len() == kappa as usize;
    }
    for index in 1..=kappa {
        if used[index as usize] {
            continue;
        }
        for inverted in [false, true] {
            let segment = Segment { index, inverted };
            let block = MicronuclearArrangement::block(kappa, segment);
            if u[at..].starts_with(&block) {
                used[index as usize] = true;
                chosen.push(segment);
                if decode_from(u, kappa, at + block.len(), used, chosen) {
                    return true;
                }
                chosen.pop();
                used[index as usize] = false;
            }
        }
    }
    false
}

/// Convenience wrapper for [`MicronuclearArrangement::encode`].
pub fn pi_kappa(arrangement: &MicronuclearArrangement) -> LegalString {
    arrangement.encode()
}

pub fn realistic_decode(u: &LegalString) -> Option<MicronuclearArrangement> {
    MicronuclearArrangement::decode(u)
}

pub fn is_realistic(u: &LegalString) -> bool {
    MicronuclearArrangement::decode(u).is_some()
}

impl FromStr for MicronuclearArrangement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for MicronuclearArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
