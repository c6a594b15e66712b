//! Text and JSON renderings of library values. DOT comes from
//! `geneasm::dot`.

use std::fmt::Write;

use geneasm::{
    DesireEdge, DirectReductionGraph, LabelledGraph, OverlapGraph, ReductionGraph, RgVertex,
};
use serde_json::{json, Value};

pub fn overlap_text(g: &OverlapGraph) -> String {
    let mut out = String::new();
    for (p, sign) in g.vertices() {
        let nbrs: Vec<String> = g.neighbours(p).unwrap().iter().map(|q| q.to_string()).collect();
        writeln!(out, "{p}{sign}: {}", nbrs.join(" ")).unwrap();
    }
    out
}

fn pair(a: impl ToString, b: impl ToString) -> Value {
    json!([a.to_string(), b.to_string()])
}

pub fn reduction_json(rg: &ReductionGraph) -> String {
    let vertices: Vec<Value> = rg
        .vertices()
        .map(|v| json!({"id": v.to_string(), "label": rg.label(v), "posn": rg.position(v)}))
        .collect();
    let reality: Vec<Value> = rg.reality_edges().into_iter().map(|(_, a, b)| pair(a, b)).collect();
    let desire: Vec<Value> = rg.desire_edges().into_iter().map(|(a, b)| pair(a, b)).collect();
    json!({"vertices": vertices, "reality": reality, "desire": desire}).to_string()
}

fn vertex_list(vs: &[RgVertex]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// One line per component, then one per root subgraph.
pub fn reduction_text(rg: &ReductionGraph) -> String {
    let mut out = String::new();
    for (k, comp) in rg.components().iter().enumerate() {
        writeln!(out, "component {}: {}", k + 1, vertex_list(comp)).unwrap();
    }
    for (k, root) in rg.root_subgraphs().iter().enumerate() {
        let chain: Vec<String> = root
            .desire_edges()
            .iter()
            .map(|(a, b)| format!("{a}~{b}"))
            .collect();
        writeln!(out, "root subgraph {}: {}", k + 1, chain.join(" ")).unwrap();
    }
    out
}

pub fn desire_id(e: &DesireEdge) -> String {
    format!("{}_{}", e.0, e.1)
}

pub fn cps_json(g: &LabelledGraph<DesireEdge>) -> String {
    let vertices: Vec<Value> = g
        .vertices()
        .map(|(v, label)| json!({"id": desire_id(v), "label": label}))
        .collect();
    let edges: Vec<Value> = g.edges().map(|(a, b)| pair(desire_id(a), desire_id(b))).collect();
    json!({"vertices": vertices, "edges": edges}).to_string()
}

pub fn direct_text(r: &DirectReductionGraph) -> String {
    let mut out = String::new();
    for (a, b) in r.edges() {
        writeln!(out, "{a} -- {b}").unwrap();
    }
    out
}

pub fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
