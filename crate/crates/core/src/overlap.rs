//! Signed overlap graphs of legal strings.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::arrangement::{MicronuclearArrangement, Segment};
use crate::error::{Error, Result};
use crate::pointer::LegalString;
use crate::pointer_set::PointerSet;

/// Default upper bound on kappa for the exhaustive realism search.
pub const DEFAULT_REALISM_KAPPA_CAP: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A vertex-signed simple graph on a set of pointer magnitudes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OverlapGraph {
    signs: BTreeMap<u32, Sign>,
    adjacency: BTreeMap<u32, PointerSet>,
}

impl OverlapGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// The overlap graph `γ_u`.
    pub fn of(u: &LegalString) -> Self {
        let positive = u.positive_set();
        let mut g = OverlapGraph::new();
        for p in u.domain().iter() {
            let sign = if positive.contains(p) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            g.signs.insert(p, sign);
            let overlaps = u.overlap_set(p).expect("p is in the domain");
            g.adjacency.insert(p, overlaps);
        }
        g
    }

    pub fn add_vertex(&mut self, p: u32, sign: Sign) -> Result<()> {
        if p < 2 {
            return Err(Error::MagnitudeTooSmall(p));
        }
        if self.signs.insert(p, sign).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate vertex {p}")));
        }
        self.adjacency.insert(p, PointerSet::new());
        Ok(())
    }

    pub fn add_edge(&mut self, p: u32, q: u32) -> Result<()> {
        if p == q {
            return Err(Error::InvalidGraph(format!("self-loop on {p}")));
        }
        for v in [p, q] {
            if !self.signs.contains_key(&v) {
                return Err(Error::InvalidGraph(format!("edge endpoint {v} is not a vertex")));
            }
        }
        self.adjacency.get_mut(&p).unwrap().insert(q);
        self.adjacency.get_mut(&q).unwrap().insert(p);
        Ok(())
    }

    /// Adds the edge if absent, removes it otherwise.
    pub fn toggle_edge(&mut self, p: u32, q: u32) -> Result<()> {
        if self.has_edge(p, q) {
            self.adjacency.get_mut(&p).unwrap().remove(q);
            self.adjacency.get_mut(&q).unwrap().remove(p);
            Ok(())
        } else {
            self.add_edge(p, q)
        }
    }

    pub fn remove_vertex(&mut self, p: u32) -> Result<()> {
        self.signs.remove(&p).ok_or(Error::NotInDomain(p))?;
        let neighbours = self.adjacency.remove(&p).unwrap_or_default();
        for q in neighbours.iter() {
            self.adjacency.get_mut(&q).unwrap().remove(p);
        }
        Ok(())
    }

    pub fn set_sign(&mut self, p: u32, sign: Sign) -> Result<()> {
        let slot = self.signs.get_mut(&p).ok_or(Error::NotInDomain(p))?;
        *slot = sign;
        Ok(())
    }

    pub fn sign(&self, p: u32) -> Result<Sign> {
        self.signs.get(&p).copied().ok_or(Error::NotInDomain(p))
    }

    pub fn has_edge(&self, p: u32, q: u32) -> bool {
        self.adjacency.get(&p).is_some_and(|n| n.contains(q))
    }

    pub fn domain(&self) -> PointerSet {
        self.signs.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn positive_set(&self) -> PointerSet {
        self.signs
            .iter()
            .filter(|(_, &s)| s == Sign::Positive)
            .map(|(&p, _)| p)
            .collect()
    }

    pub fn negative_set(&self) -> PointerSet {
        self.signs
            .iter()
            .filter(|(_, &s)| s == Sign::Negative)
            .map(|(&p, _)| p)
            .collect()
    }

    /// `O_γ(q)`, the neighbourhood of `q`.
    pub fn neighbours(&self, q: u32) -> Result<&PointerSet> {
        self.adjacency.get(&q).ok_or(Error::NotInDomain(q))
    }

    pub fn vertices(&self) -> impl Iterator<Item = (u32, Sign)> + '_ {
        self.signs.iter().map(|(&p, &s)| (p, s))
    }

    /// Edges `(p, q)` with `p < q`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.adjacency
            .iter()
            .flat_map(|(&p, n)| n.iter().filter(move |&q| q > p).map(move |q| (p, q)))
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.adjacency.values().all(PointerSet::is_empty)
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<PointerSet> {
        let mut seen = PointerSet::new();
        let mut out = Vec::new();
        for &start in self.signs.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointerSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adjacency[&v].iter() {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen = &seen | &comp;
            out.push(comp);
        }
        out
    }

    /// `|dom(γ)| + 1`.
    pub fn kappa(&self) -> u32 {
        self.signs.len() as u32 + 1
    }

    pub fn has_contiguous_domain(&self) -> bool {
        self.signs.keys().copied().eq(2..=self.kappa())
    }

    pub fn to_json(&self) -> String {
        let doc = JsonGraph {
            vertices: self
                .vertices()
                .map(|(p, sign)| JsonVertex { p, sign })
                .collect(),
            edges: self.edges().into_iter().map(|(p, q)| [p, q]).collect(),
        };
        serde_json::to_string(&doc).expect("overlap graph serialisation cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut g = OverlapGraph::new();
        for v in doc.vertices {
            g.add_vertex(v.p, v.sign)?;
        }
        for [p, q] in doc.edges {
            g.add_edge(p, q)?;
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonVertex {
    p: u32,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<[u32; 2]>,
}

pub fn overlap_graph(u: &LegalString) -> OverlapGraph {
    OverlapGraph::of(u)
}

/// Searches every micronuclear arrangement with `kappa = |dom(γ)| + 1` for
/// one whose encoding has overlap graph `γ`.
///
/// The sign of pointer `p` in `π_κ(δ)` is positive exactly when one of
/// `M_{p-1}`, `M_p` is inverted, so the signs of `γ` fix every inversion once
/// that of `M_1` is chosen; the search runs over all permutations and both
/// choices for `M_1`. Gapped domains are never realistic. Graphs with kappa
/// above `kappa_cap` are refused.
pub fn find_realistic_arrangement(
    g: &OverlapGraph,
    kappa_cap: u32,
) -> Result<Option<MicronuclearArrangement>> {
    if g.is_empty() || !g.has_contiguous_domain() {
        return Ok(None);
    }
    let kappa = g.kappa();
    if kappa > kappa_cap {
        return Err(Error::CapExceeded {
            size: kappa as usize,
            cap: kappa_cap as usize,
        });
    }
    let target = CompactOverlap::of_graph(g);
    let mut inversions = vec![false; kappa as usize + 1];
    for perm in (1..=kappa).permutations(kappa as usize) {
        for first_inverted in [false, true] {
            inversions[1] = first_inverted;
            for p in 2..=kappa {
                let positive = g.sign(p).expect("contiguous domain") == Sign::Positive;
                inversions[p as usize] = inversions[p as usize - 1] ^ positive;
            }
            let segments: Vec<Segment> = perm
                .iter()
                .map(|&index| Segment {
                    index,
                    inverted: inversions[index as usize],
                })
                .collect();
            let delta = MicronuclearArrangement::new(segments).expect("permutation");
            if CompactOverlap::of_string(&delta.encode(), kappa) == target {
                return Ok(Some(delta));
            }
        }
    }
    Ok(None)
}

/// [`find_realistic_arrangement`] with the default cap.
pub fn is_realistic_overlap(g: &OverlapGraph) -> Result<Option<MicronuclearArrangement>> {
    find_realistic_arrangement(g, DEFAULT_REALISM_KAPPA_CAP)
}

/// Bitmask form of an overlap graph on `{2..kappa}` for the realism search.
#[derive(PartialEq, Eq)]
struct CompactOverlap {
    positive: u64,
    adjacency: Vec<u64>,
}

impl CompactOverlap {
    fn of_graph(g: &OverlapGraph) -> Self {
        let kappa = g.kappa() as usize;
        let mut adjacency = vec![0u64; kappa + 1];
        for (p, q) in g.edges() {
            adjacency[p as usize] |= 1 << q;
            adjacency[q as usize] |= 1 << p;
        }
        let positive = g.positive_set().iter().fold(0, |m, p| m | 1 << p);
        CompactOverlap { positive, adjacency }
    }

    fn of_string(u: &LegalString, kappa: u32) -> Self {
        let mut adjacency = vec![0u64; kappa as usize + 1];
        let mut positive = 0u64;
        let spans: Vec<(u32, usize, usize)> = (2..=kappa)
            .map(|p| {
                let (i, j) = u.occurrences(p).expect("contiguous domain");
                (p, i, j)
            })
            .collect();
        for &(p, i, j) in &spans {
            if u[i].is_barred() != u[j].is_barred() {
                positive |= 1 << p;
            }
        }
        for (a, &(p, i1, j1)) in spans.iter().enumerate() {
            for &(q, i2, j2) in &spans[a + 1..] {
                if (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1) {
                    adjacency[p as usize] |= 1 << q;
                    adjacency[q as usize] |= 1 << p;
                }
            }
        }
        CompactOverlap { positive, adjacency }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_of(text: &str) -> OverlapGraph {
        OverlapGraph::of(&LegalString::parse(text).unwrap())
    }

    #[test]
    fn overlap_graph_of_non_realistic_string() {
        let g = graph_of("24535423");
        assert_eq!(g.domain(), PointerSet::from([2, 3, 4, 5]));
        assert_eq!(g.edges(), vec![(2, 3), (3, 4), (3, 5)]);
        assert!(g.positive_set().is_empty());
        assert_eq!(g.neighbours(3).unwrap(), &PointerSet::from([2, 4, 5]));
    }

    #[test]
    fn overlap_graph_with_positive_pointers() {
        let g = graph_of("72673456-3-245");
        assert_eq!(g.positive_set(), PointerSet::from([2, 3]));
        let expected = [
            (2, vec![4, 5, 7]),
            (3, vec![4, 5, 6]),
            (4, vec![2, 3, 5, 6]),
            (5, vec![2, 3, 4, 6]),
            (6, vec![3, 4, 5, 7]),
            (7, vec![2, 6]),
        ];
        for (p, n) in expected {
            assert_eq!(g.neighbours(p).unwrap(), &n.into_iter().collect::<PointerSet>());
        }
    }

    #[test]
    fn single_vertex_graph() {
        let g = graph_of("22");
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![(2, Sign::Negative)]);
        assert!(g.edges().is_empty());
        assert!(g.neighbours(2).unwrap().is_empty());
        assert_eq!(g.neighbours(4), Err(Error::NotInDomain(4)));
    }

    #[test]
    fn json_golden_and_round_trip() {
        let g = graph_of("24535423");
        let text = g.to_json();
        assert_eq!(
            text,
            r#"{"vertices":[{"p":2,"sign":"-"},{"p":3,"sign":"-"},{"p":4,"sign":"-"},{"p":5,"sign":"-"}],"edges":[[2,3],[3,4],[3,5]]}"#
        );
        assert_eq!(OverlapGraph::from_json(&text).unwrap(), g);
        assert_eq!(OverlapGraph::new().to_json(), r#"{"vertices":[],"edges":[]}"#);
        let text = graph_of("72673456-3-245").to_json();
        assert_eq!(OverlapGraph::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(OverlapGraph::from_json("{"), Err(Error::Json(_))));
        let dup = r#"{"vertices":[{"p":2,"sign":"-"},{"p":2,"sign":"+"}],"edges":[]}"#;
        assert!(matches!(OverlapGraph::from_json(dup), Err(Error::InvalidGraph(_))));
        let dangling = r#"{"vertices":[{"p":2,"sign":"-"}],"edges":[[2,3]]}"#;
        assert!(matches!(OverlapGraph::from_json(dangling), Err(Error::InvalidGraph(_))));
        let bad_sign = r#"{"vertices":[{"p":2,"sign":"x"}],"edges":[]}"#;
        assert!(matches!(OverlapGraph::from_json(bad_sign), Err(Error::Json(_))));
    }

    #[test]
    fn realism_oracle() {
        assert_eq!(is_realistic_overlap(&graph_of("24535423")).unwrap(), None);
        let g = graph_of("72673456-3-245");
        let delta = is_realistic_overlap(&g).unwrap().expect("realistic");
        assert_eq!(OverlapGraph::of(&delta.encode()), g);
        let single = graph_of("22");
        let delta = is_realistic_overlap(&single).unwrap().unwrap();
        assert_eq!(delta.encode().to_string(), "22");
        assert_eq!(is_realistic_overlap(&graph_of("2244")).unwrap(), None);
        assert!(matches!(
            find_realistic_arrangement(&g, 5),
            Err(Error::CapExceeded { size: 7, cap: 5 })
        ));
    }

    #[test]
    fn components_of_overlap_graph() {
        let g = graph_of("223344");
        assert!(g.is_discrete());
        assert_eq!(g.components().len(), 3);
        assert_eq!(graph_of("24535423").components().len(), 1);
    }
}
