//! Graphviz DOT output. Vertex labels are pointer magnitudes; reality edges
//! are drawn bold (`penwidth=2`) and desire edges dashed.

use std::fmt::{Display, Write};

use crate::graph::{Colour, ColouredGraph, LabelledGraph};
use crate::overlap::OverlapGraph;
use crate::reduction::ReductionGraph;

fn open(name: &str) -> String {
    format!("graph {name} {{\n")
}

fn node(out: &mut String, id: &str, label: impl Display) {
    writeln!(out, "  {id} [label=\"{label}\"];").unwrap();
}

fn edge(out: &mut String, a: &str, b: &str, style: &str) {
    if style.is_empty() {
        writeln!(out, "  {a} -- {b};").unwrap();
    } else {
        writeln!(out, "  {a} -- {b} [{style}];").unwrap();
    }
}

/// Reduction graph with vertex ids `I<i>` / `Ip<i>`. Reality edges are
/// listed by position, then desire edges.
pub fn reduction_dot(rg: &ReductionGraph) -> String {
    let mut out = open("reduction");
    for v in rg.vertices() {
        node(&mut out, &v.to_string(), rg.label(v));
    }
    for (_, a, b) in rg.reality_edges() {
        edge(&mut out, &a.to_string(), &b.to_string(), "penwidth=2");
    }
    for (a, b) in rg.desire_edges() {
        edge(&mut out, &a.to_string(), &b.to_string(), "style=dashed");
    }
    out.push_str("}\n");
    out
}

/// Any 2-edge-coloured graph, with ids produced by `id`.
pub fn coloured_dot<V: Ord + Clone>(
    name: &str,
    g: &ColouredGraph<V>,
    id: impl Fn(&V) -> String,
) -> String {
    let mut out = open(name);
    for (v, label) in g.vertices() {
        node(&mut out, &id(v), label);
    }
    for (colour, style) in [(Colour::Reality, "penwidth=2"), (Colour::Desire, "style=dashed")] {
        for (a, b) in g.edges(colour) {
            edge(&mut out, &id(a), &id(b), style);
        }
    }
    out.push_str("}\n");
    out
}

/// A labelled graph drawn with plain single edges.
pub fn labelled_dot<V: Ord + Clone>(
    name: &str,
    g: &LabelledGraph<V>,
    id: impl Fn(&V) -> String,
) -> String {
    let mut out = open(name);
    for (v, label) in g.vertices() {
        node(&mut out, &id(v), label);
    }
    for (a, b) in g.edges() {
        edge(&mut out, &id(a), &id(b), "");
    }
    out.push_str("}\n");
    out
}

/// Overlap graph with ids `p<p>` and labels such as `3+`.
pub fn overlap_dot(g: &OverlapGraph) -> String {
    let mut out = open("overlap");
    for (p, sign) in g.vertices() {
        node(&mut out, &format!("p{p}"), format!("{p}{sign}"));
    }
    for (p, q) in g.edges() {
        edge(&mut out, &format!("p{p}"), &format!("p{q}"), "");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointer::LegalString;

    #[test]
    fn reduction_graph_dot_counts() {
        let rg = ReductionGraph::of(&LegalString::parse("32-43-24").unwrap());
        let dot = reduction_dot(&rg);
        assert!(dot.starts_with("graph reduction {\n"));
        assert_eq!(dot.matches("[label=").count(), 12);
        assert_eq!(dot.matches("penwidth=2").count(), 6);
        assert_eq!(dot.matches("style=dashed").count(), 6);
        assert!(dot.contains("  Ip1 -- I2 [penwidth=2];\n"));
        assert!(dot.contains("  I1 [label=\"3\"];\n"));
    }

    #[test]
    fn empty_graph_has_empty_body() {
        let rg = ReductionGraph::of(&LegalString::empty());
        assert_eq!(reduction_dot(&rg), "graph reduction {\n}\n");
        assert_eq!(overlap_dot(&OverlapGraph::new()), "graph overlap {\n}\n");
    }

    #[test]
    fn overlap_dot_lists_signed_vertices() {
        let g = OverlapGraph::of(&LegalString::parse("2-323").unwrap());
        let dot = overlap_dot(&g);
        assert!(dot.contains("p2 [label=\"2-\"]"));
        assert!(dot.contains("p3 [label=\"3+\"]"));
        assert!(dot.contains("p2 -- p3;"));
    }
}
