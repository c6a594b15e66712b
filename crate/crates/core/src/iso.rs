//! Isomorphism of labelled graphs whose components are paths and cycles.
//!
//! Each component is read as a sequence of tokens (vertex labels interleaved
//! with edge markers) and normalised to the least sequence over all the ways
//! of reading it: both directions for paths, every rotation and both
//! directions for cycles. A graph's canonical form is the sorted list of its
//! component codes, so two graphs are isomorphic exactly when their forms
//! are equal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph, LabelledGraph};
use crate::reduction::ReductionGraph;

/// Largest graph [`brute_force_isomorphic`] accepts.
pub const BRUTE_FORCE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Label(u32),
    /// An uncoloured edge.
    Edge,
    Reality,
    Desire,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Label(l) => write!(f, "{l}"),
            Token::Edge => f.write_str("-"),
            Token::Reality => f.write_str("="),
            Token::Desire => f.write_str("~"),
        }
    }
}

impl From<Colour> for Token {
    fn from(c: Colour) -> Self {
        match c {
            Colour::Reality => Token::Reality,
            Colour::Desire => Token::Desire,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Isolated,
    Path,
    Cycle,
}

/// A normalised component. For cycles the closing edge is the last token.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentCode {
    pub shape: Shape,
    pub tokens: Vec<Token>,
}

impl fmt::Display for ComponentCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.shape {
            Shape::Isolated => "I:",
            Shape::Path => "P:",
            Shape::Cycle => "C:",
        })?;
        for t in &self.tokens {
            write!(f, "{t}")?;
            if matches!(t, Token::Label(_)) {
                f.write_str(" ")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<ComponentCode>);

/// Components separated by `|`, e.g. `C:2 -3 -4 -|I:2 `.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn least_reading(tokens: &[Token], cyclic: bool) -> Vec<Token> {
    let reversed: Vec<Token> = tokens.iter().rev().copied().collect();
    if !cyclic {
        return tokens.to_vec().min(reversed);
    }
    let n = tokens.len();
    let mut best: Option<Vec<Token>> = None;
    for seq in [tokens, &reversed[..]] {
        for shift in 0..n {
            if !matches!(seq[shift], Token::Label(_)) {
                continue;
            }
            let rotated: Vec<Token> = seq[shift..].iter().chain(&seq[..shift]).copied().collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// Walks every component of a graph given by, for each vertex, its incident
/// edges as `(edge token, neighbour)`. Each vertex must have at most two
/// incident edges, and the edges of one vertex must be distinguishable by
/// token or neighbour.
fn form_from_incidence<V: Ord + Clone>(
    labels: &BTreeMap<V, u32>,
    incident: &BTreeMap<V, Vec<(Token, V)>>,
) -> Result<CanonicalForm> {
    if incident.values().any(|e| e.len() > 2) {
        return Err(Error::UnsupportedGraph("vertex of degree above 2".into()));
    }
    let mut seen: BTreeMap<&V, bool> = labels.keys().map(|v| (v, false)).collect();
    let mut codes = Vec::new();
    // start paths at an endpoint so the walk covers them in one direction
    let starts = labels
        .keys()
        .filter(|v| incident[*v].len() < 2)
        .chain(labels.keys().filter(|v| incident[*v].len() == 2));
    for start in starts {
        if seen[start] {
            continue;
        }
        let mut tokens = vec![Token::Label(labels[start])];
        *seen.get_mut(start).unwrap() = true;
        let mut cur = start.clone();
        let mut arrived: Option<(Token, V)> = None;
        let mut cyclic = false;
        loop {
            let next = incident[&cur]
                .iter()
                .find(|(t, w)| match &arrived {
                    Some((at, from)) => !(t == at && *w == *from),
                    None => true,
                })
                .cloned();
            let Some((token, w)) = next else { break };
            tokens.push(token);
            if w == *start {
                cyclic = true;
                break;
            }
            tokens.push(Token::Label(labels[&w]));
            *seen.get_mut(&w).unwrap() = true;
            arrived = Some((token, cur.clone()));
            cur = w;
        }
        let shape = if cyclic {
            Shape::Cycle
        } else if tokens.len() == 1 {
            Shape::Isolated
        } else {
            Shape::Path
        };
        codes.push(ComponentCode {
            shape,
            tokens: least_reading(&tokens, cyclic),
        });
    }
    codes.sort();
    Ok(CanonicalForm(codes))
}

/// Canonical form of a labelled graph of maximum degree 2.
pub fn canonical_labelled<V: Ord + Clone>(g: &LabelledGraph<V>) -> Result<CanonicalForm> {
    let labels: BTreeMap<V, u32> = g.vertices().map(|(v, l)| (v.clone(), l)).collect();
    let incident = g
        .neighbour_map()
        .into_iter()
        .map(|(v, ns)| (v, ns.into_iter().map(|w| (Token::Edge, w)).collect()))
        .collect();
    form_from_incidence(&labels, &incident)
}

/// Canonical form of a 2-edge-coloured graph in which every vertex meets at
/// most one edge of each colour (so components alternate colours).
pub fn canonical_coloured<V: Ord + Clone>(g: &ColouredGraph<V>) -> Result<CanonicalForm> {
    let labels: BTreeMap<V, u32> = g.vertices().map(|(v, l)| (v.clone(), l)).collect();
    let incident: BTreeMap<V, Vec<(Token, V)>> = g
        .coloured_neighbours()
        .into_iter()
        .map(|(v, ns)| (v, ns.into_iter().map(|(c, w)| (c.into(), w)).collect()))
        .collect();
    for edges in incident.values() {
        if edges.len() == 2 && edges[0].0 == edges[1].0 {
            return Err(Error::UnsupportedGraph(
                "vertex meets two edges of the same colour".into(),
            ));
        }
    }
    form_from_incidence(&labels, &incident)
}

pub fn canonical_2edge(rg: &ReductionGraph) -> CanonicalForm {
    canonical_coloured(&rg.to_coloured()).expect("reduction graphs alternate colours")
}

pub fn isomorphic_labelled<V: Ord + Clone, W: Ord + Clone>(
    a: &LabelledGraph<V>,
    b: &LabelledGraph<W>,
) -> Result<bool> {
    Ok(canonical_labelled(a)? == canonical_labelled(b)?)
}

/// Exhaustive search for a label- and colour-preserving bijection. Both
/// graphs must have at most [`BRUTE_FORCE_CAP`] vertices.
pub fn brute_force_isomorphic<V: Ord + Clone, W: Ord + Clone>(
    a: &ColouredGraph<V>,
    b: &ColouredGraph<W>,
) -> Result<bool> {
    for size in [a.vertex_count(), b.vertex_count()] {
        if size > BRUTE_FORCE_CAP {
            return Err(Error::CapExceeded {
                size,
                cap: BRUTE_FORCE_CAP,
            });
        }
    }
    let ma = Matrix::of(a);
    let mb = Matrix::of(b);
    if ma.labels.len() != mb.labels.len() {
        return Ok(false);
    }
    let mut la = ma.labels.clone();
    let mut lb = mb.labels.clone();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb || ma.edge_counts() != mb.edge_counts() {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; ma.labels.len()];
    let mut used = vec![false; mb.labels.len()];
    Ok(extend(&ma, &mb, 0, &mut image, &mut used))
}

/// Brute-force check for uncoloured graphs.
pub fn brute_force_isomorphic_labelled<V: Ord + Clone, W: Ord + Clone>(
    a: &LabelledGraph<V>,
    b: &LabelledGraph<W>,
) -> Result<bool> {
    brute_force_isomorphic(&a.to_coloured(), &b.to_coloured())
}

struct Matrix {
    labels: Vec<u32>,
    /// bit 0: reality edge, bit 1: desire edge
    adj: Vec<Vec<u8>>,
}

impl Matrix {
    fn of<V: Ord + Clone>(g: &ColouredGraph<V>) -> Self {
        let index: BTreeMap<&V, usize> = g.vertices().enumerate().map(|(i, (v, _))| (v, i)).collect();
        let labels = g.vertices().map(|(_, l)| l).collect::<Vec<_>>();
        let mut adj = vec![vec![0u8; labels.len()]; labels.len()];
        for (colour, bit) in [(Colour::Reality, 1u8), (Colour::Desire, 2u8)] {
            for (x, y) in g.edges(colour) {
                let (i, j) = (index[x], index[y]);
                adj[i][j] |= bit;
                adj[j][i] |= bit;
            }
        }
        Matrix { labels, adj }
    }

    fn edge_counts(&self) -> [usize; 2] {
        let mut counts = [0; 2];
        for (i, row) in self.adj.iter().enumerate() {
            for &cell in &row[i + 1..] {
                counts[0] += usize::from(cell & 1);
                counts[1] += usize::from(cell >> 1);
            }
        }
        counts
    }
}

fn extend(a: &Matrix, b: &Matrix, i: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if i == a.labels.len() {
        return true;
    }
    for j in 0..b.labels.len() {
        if used[j] || b.labels[j] != a.labels[i] {
            continue;
        }
        if (0..i).any(|k| a.adj[i][k] != b.adj[j][image[k]]) {
            continue;
        }
        image[i] = j;
        used[j] = true;
        if extend(a, b, i + 1, image, used) {
            return true;
        }
        used[j] = false;
    }
    false
}
