//! Compression of 2-edge-coloured graphs: every desire edge becomes a single
//! vertex, and two such vertices are adjacent when a reality edge joins them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph, LabelledGraph};
use crate::reduction::{ReductionGraph, RgVertex};

/// A desire edge of a reduction graph, smaller endpoint first.
pub type DesireEdge = (RgVertex, RgVertex);

/// `cps(g)`. Vertices of the result are the desire edges of `g` (smaller
/// endpoint first). Fails if a desire edge joins differently labelled
/// vertices or a vertex lies on more than one desire edge.
pub fn cps<V: Ord + Clone>(g: &ColouredGraph<V>) -> Result<LabelledGraph<(V, V)>> {
    let mut owner: BTreeMap<V, (V, V)> = BTreeMap::new();
    let mut out = LabelledGraph::new();
    for (a, b) in g.edges(Colour::Desire) {
        let la = g.label(a).expect("endpoint is a vertex");
        if g.label(b) != Some(la) {
            return Err(Error::InvalidGraph(
                "desire edge joins vertices with different labels".into(),
            ));
        }
        for v in [a, b] {
            if owner.insert(v.clone(), (a.clone(), b.clone())).is_some() {
                return Err(Error::InvalidGraph(
                    "vertex lies on more than one desire edge".into(),
                ));
            }
        }
        out.add_vertex((a.clone(), b.clone()), la);
    }
    for (a, b) in g.edges(Colour::Reality) {
        if let (Some(x), Some(y)) = (owner.get(a), owner.get(b)) {
            if x != y {
                out.add_edge(x.clone(), y.clone())?;
            }
        }
    }
    Ok(out)
}

pub fn cps_reduction(rg: &ReductionGraph) -> LabelledGraph<DesireEdge> {
    cps(&rg.to_coloured()).expect("reduction graphs are in the domain of cps")
}

/// Rebuilds a union of alternating cycles from its compression: vertex `x`
/// becomes a desire edge `(x, false)`–`(x, true)`, and reality edges close the
/// cycles (an isolated vertex gives a 2-cycle, an edge gives a 4-cycle).
///
/// Components of the input must be isolated vertices, single edges or cycles.
pub fn inflate<W: Ord + Clone>(g: &LabelledGraph<W>) -> Result<ColouredGraph<(W, bool)>> {
    if g.max_degree() > 2 {
        return Err(Error::UnsupportedGraph("vertex of degree above 2".into()));
    }
    let neighbours = g.neighbour_map();
    let mut out = ColouredGraph::new();
    for (v, label) in g.vertices() {
        out.add_vertex((v.clone(), false), label);
        out.add_vertex((v.clone(), true), label);
        out.add_edge(Colour::Desire, (v.clone(), false), (v.clone(), true))?;
    }
    for comp in g.components() {
        match comp.len() {
            1 => {
                let v = &comp[0];
                out.add_edge(Colour::Reality, (v.clone(), false), (v.clone(), true))?;
            }
            2 => {
                let (x, y) = (&comp[0], &comp[1]);
                out.add_edge(Colour::Reality, (x.clone(), false), (y.clone(), false))?;
                out.add_edge(Colour::Reality, (x.clone(), true), (y.clone(), true))?;
            }
            m => {
                if comp.iter().any(|v| neighbours[v].len() != 2) {
                    return Err(Error::UnsupportedGraph(
                        "path with more than two vertices has no alternating preimage".into(),
                    ));
                }
                // walk the cycle, joining the exit of each vertex to the entry of the next
                let start = comp[0].clone();
                let mut prev = start.clone();
                let mut cur = neighbours[&start][0].clone();
                out.add_edge(Colour::Reality, (start.clone(), true), (cur.clone(), false))?;
                for _ in 1..m {
                    let next = neighbours[&cur]
                        .iter()
                        .find(|w| **w != prev)
                        .expect("cycle vertex has two neighbours")
                        .clone();
                    out.add_edge(Colour::Reality, (cur.clone(), true), (next.clone(), false))?;
                    prev = std::mem::replace(&mut cur, next);
                }
            }
        }
    }
    Ok(out)
}
