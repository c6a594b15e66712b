//! Independent reference implementations used to check the library. They
//! work on plain `(magnitude, barred)` sequences and never call into the
//! code under test beyond parsing.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use geneasm::{LegalString, MicronuclearArrangement, Segment};
use itertools::Itertools;

pub type Letters = Vec<(u32, bool)>;

pub fn letters(u: &LegalString) -> Letters {
    u.iter().map(|p| (p.magnitude(), p.is_barred())).collect()
}

/// `O_u(i, j)` by counting occurrences in `p_{i+1} ... p_j`.
pub fn positional(u: &Letters, i: usize, j: usize) -> BTreeSet<u32> {
    let (i, j) = (i.min(j), i.max(j));
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &(m, _) in &u[i..j] {
        *counts.entry(m).or_default() += 1;
    }
    counts.into_iter().filter(|&(_, c)| c % 2 == 1).map(|(m, _)| m).collect()
}

pub fn occurrences(u: &Letters, p: u32) -> (usize, usize) {
    let idx: Vec<usize> = (0..u.len()).filter(|&k| u[k].0 == p).collect();
    (idx[0], idx[1])
}

pub fn is_positive(u: &Letters, p: u32) -> bool {
    let (i, j) = occurrences(u, p);
    u[i].1 != u[j].1
}

pub fn domain(u: &Letters) -> BTreeSet<u32> {
    u.iter().map(|&(m, _)| m).collect()
}

/// Signed overlap graph: `p` and `q` overlap when exactly one occurrence of
/// `q` lies strictly between the occurrences of `p`.
pub fn overlap(u: &Letters) -> (BTreeMap<u32, bool>, BTreeSet<(u32, u32)>) {
    let dom = domain(u);
    let signs = dom.iter().map(|&p| (p, is_positive(u, p))).collect();
    let mut edges = BTreeSet::new();
    for (&p, &q) in dom.iter().tuple_combinations() {
        let (pi, pj) = occurrences(u, p);
        let (qi, qj) = occurrences(u, q);
        let inside = |k: usize| pi < k && k < pj;
        if inside(qi) != inside(qj) {
            edges.insert((p, q));
        }
    }
    (signs, edges)
}

/// Reduction graph from the definition, as vertex ids `2(i-1)` for `I_i`
/// and `2(i-1)+1` for `I'_i` (1-based `i`), with edge lists.
pub struct RawReductionGraph {
    pub n: usize,
    pub labels: Vec<u32>,
    pub reality: Vec<(usize, usize)>,
    pub desire: Vec<(usize, usize)>,
}

pub fn left(i: usize) -> usize {
    2 * (i - 1)
}

pub fn right(i: usize) -> usize {
    2 * (i - 1) + 1
}

pub fn raw_reduction_graph(u: &Letters) -> RawReductionGraph {
    let n = u.len();
    let labels = (0..2 * n).map(|v| u[v / 2].0).collect();
    let reality = (1..=n).map(|i| (right(i), left(i % n + 1))).collect();
    let mut desire = Vec::new();
    for p in domain(u) {
        let (i, j) = occurrences(u, p);
        let (i, j) = (i + 1, j + 1);
        if u[i - 1] == u[j - 1] {
            desire.push((right(i), left(j)));
            desire.push((left(i), right(j)));
        } else {
            desire.push((left(i), left(j)));
            desire.push((right(i), right(j)));
        }
    }
    RawReductionGraph {
        n,
        labels,
        reality,
        desire,
    }
}

fn find(parent: &mut Vec<usize>, x: usize) -> usize {
    if parent[x] != x {
        let root = find(parent, parent[x]);
        parent[x] = root;
    }
    parent[x]
}

impl RawReductionGraph {
    /// Sorted component sizes, by union-find.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..2 * self.n).collect();
        for &(a, b) in self.reality.iter().chain(&self.desire) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..2 * self.n {
            *sizes.entry(find(&mut parent, v)).or_default() += 1;
        }
        let mut out: Vec<usize> = sizes.into_values().collect();
        out.sort();
        out
    }

    /// `posn` of a vertex id.
    pub fn position(&self, v: usize) -> usize {
        let i = v / 2 + 1;
        if v % 2 == 1 {
            i
        } else if i == 1 {
            self.n
        } else {
            i - 1
        }
    }
}

/// Every arrangement with `kappa` segments.
pub fn all_arrangements(kappa: u32) -> Vec<MicronuclearArrangement> {
    let mut out = Vec::new();
    for perm in (1..=kappa).permutations(kappa as usize) {
        for mask in 0..(1u32 << kappa) {
            let segments = perm
                .iter()
                .enumerate()
                .map(|(k, &index)| Segment {
                    index,
                    inverted: mask >> k & 1 == 1,
                })
                .collect();
            out.push(MicronuclearArrangement::new(segments).unwrap());
        }
    }
    out
}

/// The encoding `π_κ` written out independently.
pub fn encode(delta: &MicronuclearArrangement) -> Letters {
    let kappa = delta.kappa();
    let mut out = Vec::new();
    for s in delta.segments() {
        let block: Letters = match s.index {
            1 => vec![(2, false)],
            k if k == kappa => vec![(kappa, false)],
            k => vec![(k, false), (k + 1, false)],
        };
        if s.inverted {
            out.extend(block.into_iter().rev().map(|(m, b)| (m, !b)));
        } else {
            out.extend(block);
        }
    }
    out
}
