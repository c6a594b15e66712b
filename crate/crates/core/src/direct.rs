//! The reduction graph of a realistic overlap graph, computed from the graph
//! alone.
//!
//! Vertices are `J_p` and `J'_p` for `2 <= p <= kappa`, both labelled `p`.
//! The `J'_p` form the root chain; the remaining edges are decided by
//! symmetric-difference equations over the neighbourhoods `O_γ(t)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;
use crate::overlap::OverlapGraph;
use crate::pointer_set::PointerSet;

/// `J_p` (`root == false`) or `J'_p` (`root == true`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JVertex {
    pub label: u32,
    pub root: bool,
}

impl JVertex {
    pub fn plain(label: u32) -> Self {
        JVertex { label, root: false }
    }

    pub fn root(label: u32) -> Self {
        JVertex { label, root: true }
    }
}

/// `J<p>` / `Jp<p>`.
impl fmt::Display for JVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root {
            write!(f, "Jp{}", self.label)
        } else {
            write!(f, "J{}", self.label)
        }
    }
}

impl fmt::Debug for JVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for JVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (root, digits) = match s.strip_prefix("Jp") {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('J').unwrap_or("")),
        };
        match digits.parse::<u32>() {
            Ok(label) if label >= 2 && digits.bytes().all(|b| b.is_ascii_digit()) => {
                Ok(JVertex { label, root })
            }
            _ => Err(Error::MalformedToken {
                token: s.into(),
                reason: "expected J<p> or Jp<p> with p >= 2",
            }),
        }
    }
}

/// Which clause of the construction an edge falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// `J'_p – J'_{p+1}`.
    RootChain,
    /// `J_p – J_q`.
    NonRoot,
    /// `J'_2 – J_p`.
    RootStart,
    /// `J'_kappa – J_p`.
    RootEnd,
    /// `J'_2 – J'_kappa`, only for `kappa > 3`.
    RootClosing,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::RootChain => "root-chain",
            Condition::NonRoot => "non-root",
            Condition::RootStart => "root-start",
            Condition::RootEnd => "root-end",
            Condition::RootClosing => "root-closing",
        })
    }
}

/// One satisfied instance of an edge equation: the set `P`, the terms of the
/// left-hand side (`{t}` for positive `t` followed by `O(t)`, in increasing
/// `t`), their sum and the required value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub condition: Condition,
    pub set: PointerSet,
    pub terms: Vec<PointerSet>,
    pub result: PointerSet,
    pub target: PointerSet,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] P = {}: ", self.condition, self.set)?;
        if self.terms.is_empty() {
            f.write_str("{}")?;
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, " = {}", self.result)
    }
}

fn evaluate(
    g: &OverlapGraph,
    condition: Condition,
    set: PointerSet,
    target: PointerSet,
) -> Option<Witness> {
    let mut terms = Vec::new();
    for t in set.iter() {
        if g.sign(t).ok()? == crate::overlap::Sign::Positive {
            terms.push(PointerSet::singleton(t));
        }
        terms.push(g.neighbours(t).ok()?.clone());
    }
    let result = PointerSet::xor_all(&terms);
    (result == target).then_some(Witness {
        condition,
        set,
        terms,
        result,
        target,
    })
}

/// Every choice of `P' ⊆ extra` (in the order `∅`, then singletons, then both)
/// whose equation holds.
fn witnesses_over(
    g: &OverlapGraph,
    condition: Condition,
    base: PointerSet,
    extra: &[u32],
    target: &PointerSet,
) -> Vec<Witness> {
    let mut choices: Vec<Vec<u32>> = vec![vec![]];
    choices.extend(extra.iter().map(|&x| vec![x]));
    if extra.len() == 2 {
        choices.push(extra.to_vec());
    }
    choices
        .into_iter()
        .filter_map(|chosen| {
            let mut set = base.clone();
            for x in chosen {
                set.insert(x);
            }
            evaluate(g, condition, set, target.clone())
        })
        .collect()
}

fn kappa_of(g: &OverlapGraph) -> Result<u32> {
    if !g.has_contiguous_domain() {
        return Err(Error::GappedDomain);
    }
    Ok(g.kappa())
}

/// All satisfied equations that put `{a, b}` into `R_γ`; empty when the pair
/// is not an edge. Pairs outside the vertex set are errors.
pub fn condition_witnesses(g: &OverlapGraph, a: JVertex, b: JVertex) -> Result<Vec<Witness>> {
    let kappa = kappa_of(g)?;
    for v in [a, b] {
        if v.label < 2 || v.label > kappa {
            return Err(Error::NotInDomain(v.label));
        }
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if a == b {
        return Ok(Vec::new());
    }
    let (p, q) = (a.label, b.label);
    let mut out = Vec::new();
    match (a.root, b.root) {
        (true, true) => {
            if q == p + 1 {
                out.push(Witness {
                    condition: Condition::RootChain,
                    set: PointerSet::new(),
                    terms: Vec::new(),
                    result: PointerSet::new(),
                    target: PointerSet::new(),
                });
            } else if kappa > 3 && p == 2 && q == kappa {
                let all = PointerSet::range(2, kappa);
                out.extend(evaluate(g, Condition::RootClosing, all, PointerSet::new()));
            }
        }
        (false, false) => {
            let target = PointerSet::from([p, q]);
            let base = PointerSet::range(p + 1, q - 1);
            out.extend(witnesses_over(g, Condition::NonRoot, base, &[p, q], &target));
        }
        _ => {
            let (root, plain) = if a.root { (p, q) } else { (q, p) };
            if root == 2 {
                out.extend(one_sided(g, Condition::RootStart, PointerSet::range(2, plain - 1), plain));
            }
            if root == kappa {
                out.extend(one_sided(
                    g,
                    Condition::RootEnd,
                    PointerSet::range(plain + 1, kappa),
                    plain,
                ));
            }
        }
    }
    Ok(out)
}

fn one_sided(g: &OverlapGraph, condition: Condition, base: PointerSet, p: u32) -> Vec<Witness> {
    let target = PointerSet::singleton(p);
    witnesses_over(g, condition, base, &[p], &target)
}

/// `R_γ` together with its `kappa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectReductionGraph {
    kappa: u32,
    graph: LabelledGraph<JVertex>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DirectJson {
    kappa: u32,
    edges: Vec<[String; 2]>,
}

impl DirectReductionGraph {
    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn graph(&self) -> &LabelledGraph<JVertex> {
        &self.graph
    }

    pub fn into_graph(self) -> LabelledGraph<JVertex> {
        self.graph
    }

    pub fn edges(&self) -> Vec<(JVertex, JVertex)> {
        self.graph.edges().copied().collect()
    }

    /// Edges beyond the root chain.
    pub fn extra_edges(&self) -> Vec<(JVertex, JVertex)> {
        self.graph
            .edges()
            .filter(|(a, b)| !(a.root && b.root && b.label == a.label + 1))
            .copied()
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.graph.components().len()
    }

    /// `{"kappa":7,"edges":[["J2","J6"],...]}`, edges sorted.
    pub fn to_json(&self) -> String {
        let doc = DirectJson {
            kappa: self.kappa,
            edges: self
                .graph
                .edges()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        };
        serde_json::to_string(&doc).expect("serialisation cannot fail")
    }

    /// Reads the format written by [`to_json`](Self::to_json). Every `J_p`
    /// and `J'_p` with `2 <= p <= kappa` is a vertex, whether or not an edge
    /// mentions it.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DirectJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let kappa = doc.kappa;
        let mut graph = LabelledGraph::new();
        for p in 2..=kappa {
            graph.add_vertex(JVertex::plain(p), p);
            graph.add_vertex(JVertex::root(p), p);
        }
        for [a, b] in doc.edges {
            let (a, b): (JVertex, JVertex) = (a.parse()?, b.parse()?);
            if let Some(v) = [a, b].into_iter().find(|v| v.label > kappa) {
                return Err(Error::InvalidGraph(format!("{v} is outside kappa {kappa}")));
            }
            if !graph.add_edge(a, b)? {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
        }
        Ok(DirectReductionGraph { kappa, graph })
    }
}

/// Builds `R_γ`. The domain of `γ` must be `{2, ..., kappa}`; realism is not
/// checked, and for non-realistic input the edges are computed mechanically.
pub fn direct_reduction_graph(g: &OverlapGraph) -> Result<DirectReductionGraph> {
    let kappa = kappa_of(g)?;
    let mut graph = LabelledGraph::new();
    let vertices: Vec<JVertex> = (2..=kappa)
        .flat_map(|p| [JVertex::plain(p), JVertex::root(p)])
        .collect();
    for &v in &vertices {
        graph.add_vertex(v, v.label);
    }
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if !condition_witnesses(g, a, b)?.is_empty() {
                graph.add_edge(a, b)?;
            }
        }
    }
    Ok(DirectReductionGraph { kappa, graph })
}

/// Edges of `R_γ`, each paired with its witnesses.
pub type Explanation = Vec<((JVertex, JVertex), Vec<Witness>)>;

/// Every edge of `R_γ` with its witnesses, in edge order.
pub fn explain(g: &OverlapGraph) -> Result<Explanation> {
    let r = direct_reduction_graph(g)?;
    r.edges()
        .into_iter()
        .map(|(a, b)| Ok(((a, b), condition_witnesses(g, a, b)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::overlap::Sign;
    use crate::pointer::LegalString;

    fn gamma(text: &str) -> OverlapGraph {
        OverlapGraph::of(&LegalString::parse(text).unwrap())
    }

    fn j(s: &str) -> JVertex {
        s.parse().unwrap()
    }

    fn edge_set(pairs: &[(&str, &str)]) -> Vec<(JVertex, JVertex)> {
        let mut v: Vec<_> = pairs
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (j(a), j(b));
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn vertex_names_round_trip() {
        assert_eq!(j("J3"), JVertex::plain(3));
        assert_eq!(j("Jp7"), JVertex::root(7));
        assert_eq!(JVertex::root(7).to_string(), "Jp7");
        assert!("J".parse::<JVertex>().is_err());
        assert!("Jp1".parse::<JVertex>().is_err());
        assert!("K2".parse::<JVertex>().is_err());
        assert!(JVertex::plain(9) < JVertex::root(9));
    }

    #[test]
    fn all_negative_example() {
        let r = direct_reduction_graph(&gamma("453475623267")).unwrap();
        assert_eq!(r.graph().vertex_count(), 12);
        assert_eq!(
            r.extra_edges(),
            edge_set(&[
                ("J2", "J6"),
                ("J4", "J7"),
                ("J3", "J5"),
                ("J5", "Jp7"),
                ("Jp2", "J3"),
            ])
        );
        assert_eq!(r.component_count(), 3);
    }

    #[test]
    fn mixed_sign_example() {
        let r = direct_reduction_graph(&gamma("72673456-3-245")).unwrap();
        assert_eq!(
            r.extra_edges(),
            edge_set(&[
                ("J3", "J7"),
                ("J3", "J6"),
                ("J2", "J6"),
                ("J2", "J4"),
                ("J4", "J5"),
                ("J5", "J7"),
                ("Jp2", "Jp7"),
            ])
        );
        assert_eq!(r.component_count(), 2);
    }

    #[test]
    fn witnesses_match_published_rows() {
        let g = gamma("453475623267");
        let w = condition_witnesses(&g, j("J2"), j("J6")).unwrap();
        let sets: Vec<PointerSet> = w.iter().map(|w| w.set.clone()).collect();
        assert_eq!(sets, vec![PointerSet::from([3, 4, 5]), PointerSet::range(2, 6)]);
        assert_eq!(w[0].terms, vec![
            PointerSet::from([2, 4, 5, 6, 7]),
            PointerSet::from([3, 5]),
            PointerSet::from([3, 4, 7]),
        ]);
        assert_eq!(w[0].result, PointerSet::from([2, 6]));

        let w = condition_witnesses(&g, j("J5"), j("J3")).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].set, PointerSet::from([4]));
        assert_eq!(w[0].result, PointerSet::from([3, 5]));

        let w = condition_witnesses(&gamma("72673456-3-245"), j("Jp2"), j("Jp7")).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].condition, Condition::RootClosing);
        assert_eq!(w[0].set, PointerSet::range(2, 7));
        assert!(w[0].result.is_empty());
        // {2} + O(2) + {3} + O(3) + ...: positive pointers contribute a singleton first
        assert_eq!(w[0].terms[0], PointerSet::from([2]));
        assert_eq!(w[0].terms[1], PointerSet::from([4, 5, 7]));
    }

    #[test]
    fn kappa_two_cases() {
        let mut neg = OverlapGraph::new();
        neg.add_vertex(2, Sign::Negative).unwrap();
        let r = direct_reduction_graph(&neg).unwrap();
        assert_eq!(r.graph().vertex_count(), 2);
        assert_eq!(r.edges(), vec![]);

        let mut pos = OverlapGraph::new();
        pos.add_vertex(2, Sign::Positive).unwrap();
        let r = direct_reduction_graph(&pos).unwrap();
        assert_eq!(r.edges(), edge_set(&[("J2", "Jp2")]));
    }

    #[test]
    fn empty_and_gapped_inputs() {
        let r = direct_reduction_graph(&OverlapGraph::new()).unwrap();
        assert_eq!(r.graph().vertex_count(), 0);
        let mut gapped = OverlapGraph::new();
        gapped.add_vertex(3, Sign::Negative).unwrap();
        assert_eq!(direct_reduction_graph(&gapped), Err(Error::GappedDomain));
    }

    #[test]
    fn json_is_sorted_and_named() {
        let r = direct_reduction_graph(&gamma("2-2")).unwrap();
        assert_eq!(r.to_json(), r#"{"kappa":2,"edges":[["J2","Jp2"]]}"#);
        assert_eq!(DirectReductionGraph::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn witness_display() {
        let g = gamma("453475623267");
        let w = condition_witnesses(&g, j("Jp2"), j("J3")).unwrap();
        assert_eq!(w[0].to_string(), "[root-start] P = {2}: {3} = {3}");
    }
}
