//! Reduction graphs of legal strings and their root subgraphs.
//!
//! For `u = p_1 ... p_n` the vertices are `I_i` and `I'_i` (`1 <= i <= n`),
//! both labelled by the magnitude of `p_i`. Reality edge `e_i` joins `I'_i`
//! to `I_{i+1}` (cyclically, `e_n = {I'_n, I_1}`) and sits at position `i`.
//! Desire edges join the two occurrences of each pointer: straight
//! (`I'_i`–`I_j`, `I_i`–`I'_j`) for equal letters, crossed (`I_i`–`I_j`,
//! `I'_i`–`I'_j`) for a letter and its bar.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};
use crate::pointer::LegalString;

/// `Left` is `I_i`, `Right` is `I'_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RgVertex {
    pub index: usize,
    pub side: Side,
}

impl RgVertex {
    pub fn left(index: usize) -> Self {
        RgVertex {
            index,
            side: Side::Left,
        }
    }

    pub fn right(index: usize) -> Self {
        RgVertex {
            index,
            side: Side::Right,
        }
    }

    /// The other vertex with the same index.
    pub fn twin(self) -> Self {
        match self.side {
            Side::Left => Self::right(self.index),
            Side::Right => Self::left(self.index),
        }
    }

    fn slot(self) -> usize {
        2 * (self.index - 1) + usize::from(self.side == Side::Right)
    }
}

/// `I<i>` for `I_i`, `Ip<i>` for `I'_i`.
impl fmt::Display for RgVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "I{}", self.index),
            Side::Right => write!(f, "Ip{}", self.index),
        }
    }
}

impl fmt::Debug for RgVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGraph {
    labels: Vec<u32>,
    desire_mate: Vec<RgVertex>,
}

impl ReductionGraph {
    pub fn of(u: &LegalString) -> Self {
        let n = u.len();
        let labels: Vec<u32> = u.iter().map(|p| p.magnitude()).collect();
        let mut desire_mate = vec![RgVertex::left(1); 2 * n];
        let mut link = |a: RgVertex, b: RgVertex| {
            desire_mate[a.slot()] = b;
            desire_mate[b.slot()] = a;
        };
        for p in u.domain().iter() {
            let (i, j) = u.occurrences(p).expect("domain member");
            let (i, j) = (i + 1, j + 1);
            if u.letter(i) == u.letter(j) {
                link(RgVertex::right(i), RgVertex::left(j));
                link(RgVertex::left(i), RgVertex::right(j));
            } else {
                link(RgVertex::left(i), RgVertex::left(j));
                link(RgVertex::right(i), RgVertex::right(j));
            }
        }
        ReductionGraph {
            labels,
            desire_mate,
        }
    }

    /// Length `n` of the source string.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = RgVertex> {
        (1..=self.len()).flat_map(|i| [RgVertex::left(i), RgVertex::right(i)])
    }

    pub fn label(&self, v: RgVertex) -> u32 {
        self.labels[v.index - 1]
    }

    pub fn desire_mate(&self, v: RgVertex) -> RgVertex {
        self.desire_mate[v.slot()]
    }

    pub fn reality_mate(&self, v: RgVertex) -> RgVertex {
        let n = self.len();
        match v.side {
            Side::Right => RgVertex::left(v.index % n + 1),
            Side::Left if v.index == 1 => RgVertex::right(n),
            Side::Left => RgVertex::right(v.index - 1),
        }
    }

    /// `posn(v)`: the position of the reality edge containing `v`.
    pub fn position(&self, v: RgVertex) -> usize {
        match v.side {
            Side::Right => v.index,
            Side::Left if v.index == 1 => self.len(),
            Side::Left => v.index - 1,
        }
    }

    /// The reality edge `e_i = {I'_i, I_{i+1}}`.
    pub fn reality_edge(&self, position: usize) -> Result<(RgVertex, RgVertex)> {
        let n = self.len();
        if position == 0 || position > n {
            return Err(Error::PositionOutOfRange { position, len: n });
        }
        Ok((RgVertex::right(position), RgVertex::left(position % n + 1)))
    }

    /// `(position, I'_i, I_{i+1})` for every reality edge, by position.
    pub fn reality_edges(&self) -> Vec<(usize, RgVertex, RgVertex)> {
        (1..=self.len())
            .map(|i| {
                let (a, b) = self.reality_edge(i).expect("in range");
                (i, a, b)
            })
            .collect()
    }

    /// Desire edges with the smaller endpoint first, sorted.
    pub fn desire_edges(&self) -> Vec<(RgVertex, RgVertex)> {
        self.vertices()
            .map(|v| (v, self.desire_mate(v)))
            .filter(|(a, b)| a < b)
            .collect()
    }

    /// Connected components (alternating cycles) ordered by smallest vertex;
    /// each component is sorted.
    pub fn components(&self) -> Vec<Vec<RgVertex>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start.slot()] {
                continue;
            }
            let mut comp = Vec::new();
            let mut v = start;
            // every component is a cycle alternating reality and desire edges
            loop {
                for w in [v, self.reality_mate(v)] {
                    seen[w.slot()] = true;
                    comp.push(w);
                }
                v = self.desire_mate(self.reality_mate(v));
                if v == start {
                    break;
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn to_coloured(&self) -> ColouredGraph<RgVertex> {
        let mut g = ColouredGraph::new();
        for v in self.vertices() {
            g.add_vertex(v, self.label(v));
        }
        for (_, a, b) in self.reality_edges() {
            g.add_edge(Colour::Reality, a, b).expect("valid endpoints");
        }
        for (a, b) in self.desire_edges() {
            g.add_edge(Colour::Desire, a, b).expect("valid endpoints");
        }
        g
    }

    /// All root subgraphs: chains `d_2, ..., d_kappa` of desire edges, `d_p`
    /// labelled `p`, with consecutive ones joined by a reality edge.
    ///
    /// Requires the label set to be `{2, ..., kappa}`; otherwise, and for the
    /// empty graph, the result is empty.
    pub fn root_subgraphs(&self) -> Vec<RootSubgraph> {
        let Some(kappa) = self.contiguous_kappa() else {
            return Vec::new();
        };
        let starts: Vec<(RgVertex, RgVertex)> = self
            .desire_edges()
            .into_iter()
            .filter(|&(a, _)| self.label(a) == 2)
            .collect();
        let mut found = Vec::new();
        if kappa == 2 {
            for (a, b) in starts {
                let (entry, exit) = if self.position(a) <= self.position(b) {
                    (a, b)
                } else {
                    (b, a)
                };
                found.push(RootSubgraph {
                    chain: vec![(entry, exit)],
                    rspos: vec![self.position(entry), self.position(exit)],
                });
            }
            return found;
        }
        for (a, b) in starts {
            for (entry, exit) in [(a, b), (b, a)] {
                if let Some(chain) = self.follow_chain(entry, exit, kappa) {
                    let mut rspos = vec![self.position(entry)];
                    rspos.extend(chain.iter().map(|&(_, x)| self.position(x)));
                    found.push(RootSubgraph { chain, rspos });
                }
            }
        }
        found.sort_by(|x, y| x.chain.cmp(&y.chain));
        found
    }

    fn follow_chain(
        &self,
        entry: RgVertex,
        exit: RgVertex,
        kappa: u32,
    ) -> Option<Vec<(RgVertex, RgVertex)>> {
        let mut chain = vec![(entry, exit)];
        let mut last = exit;
        for p in 3..=kappa {
            let next_entry = self.reality_mate(last);
            if self.label(next_entry) != p {
                return None;
            }
            last = self.desire_mate(next_entry);
            chain.push((next_entry, last));
        }
        Some(chain)
    }

    fn contiguous_kappa(&self) -> Option<u32> {
        let mut labels = self.labels.clone();
        labels.sort_unstable();
        labels.dedup();
        let kappa = labels.len() as u32 + 1;
        (!labels.is_empty() && labels.iter().copied().eq(2..=kappa)).then_some(kappa)
    }

    pub fn is_rooted(&self) -> bool {
        !self.root_subgraphs().is_empty()
    }
}

pub fn reduction_graph(u: &LegalString) -> ReductionGraph {
    ReductionGraph::of(u)
}

/// A root subgraph `L`, stored as its desire edges `d_2 ... d_kappa`, each
/// oriented as `(entry, exit)` along the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubgraph {
    chain: Vec<(RgVertex, RgVertex)>,
    rspos: Vec<usize>,
}

impl RootSubgraph {
    pub fn kappa(&self) -> usize {
        self.chain.len() + 1
    }

    /// The oriented desire edge labelled `p`.
    pub fn desire_edge(&self, p: u32) -> Option<(RgVertex, RgVertex)> {
        self.chain.get((p as usize).checked_sub(2)?).copied()
    }

    pub fn desire_edges(&self) -> &[(RgVertex, RgVertex)] {
        &self.chain
    }

    pub fn contains_vertex(&self, v: RgVertex) -> bool {
        self.chain.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Positions of the reality edges belonging to `L` (`rspos_2` to
    /// `rspos_{kappa-1}`).
    pub fn internal_positions(&self) -> &[usize] {
        &self.rspos[1..self.rspos.len() - 1]
    }

    /// `rspos_k` for `1 <= k <= kappa`. For `kappa = 2` the two external
    /// positions are reported in ascending order.
    pub fn rspos(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.kappa() {
            return Err(Error::RsposOutOfRange {
                k,
                kappa: self.kappa(),
            });
        }
        Ok(self.rspos[k - 1])
    }
}
