//! Random instances for tests and validation runs. Callers supply the RNG,
//! so a seeded generator gives reproducible output.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::{MicronuclearArrangement, Segment};
use crate::graph::LabelledGraph;
use crate::pointer::{LegalString, Pointer, PointerString};

/// A uniformly random arrangement of `M_1 ... M_kappa`; each segment is
/// inverted with probability 1/2. `kappa` must be at least 2.
pub fn random_arrangement<R: Rng + ?Sized>(kappa: u32, rng: &mut R) -> MicronuclearArrangement {
    let mut order: Vec<u32> = (1..=kappa).collect();
    order.shuffle(rng);
    let segments = order
        .into_iter()
        .map(|index| Segment {
            index,
            inverted: rng.gen_bool(0.5),
        })
        .collect();
    MicronuclearArrangement::new(segments).expect("a permutation of 1..=kappa")
}

/// A random legal string with domain `{2, ..., domain_size + 1}`: the two
/// occurrences of each pointer are placed uniformly and each is barred with
/// probability 1/2.
pub fn random_legal_string<R: Rng + ?Sized>(domain_size: u32, rng: &mut R) -> LegalString {
    let mut letters: Vec<Pointer> = (2..domain_size + 2)
        .flat_map(|p| [p, p])
        .map(|p| Pointer::new(p, rng.gen_bool(0.5)).expect("magnitude >= 2"))
        .collect();
    letters.shuffle(rng);
    LegalString::new(PointerString::new(letters)).expect("each magnitude occurs twice")
}

/// A random labelled graph on vertices `0..n` whose components are paths and
/// cycles, with labels drawn from `2..=max_label`.
pub fn random_degree_two_graph<R: Rng + ?Sized>(
    n: usize,
    max_label: u32,
    rng: &mut R,
) -> LabelledGraph<usize> {
    let mut g = LabelledGraph::new();
    for v in 0..n {
        g.add_vertex(v, rng.gen_range(2..=max_label));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rest = &order[..];
    while !rest.is_empty() {
        let len = rng.gen_range(1..=rest.len());
        let (part, tail) = rest.split_at(len);
        for w in part.windows(2) {
            g.add_edge(w[0], w[1]).expect("distinct vertices");
        }
        if len >= 3 && rng.gen_bool(0.5) {
            g.add_edge(part[len - 1], part[0]).expect("distinct vertices");
        }
        rest = tail;
    }
    g
}

/// The same graph with vertex ids permuted at random.
pub fn shuffled_copy<R: Rng + ?Sized>(g: &LabelledGraph<usize>, rng: &mut R) -> LabelledGraph<usize> {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut h = LabelledGraph::new();
    for (&v, label) in g.vertices() {
        h.add_vertex(perm[v], label);
    }
    for &(a, b) in g.edges() {
        h.add_edge(perm[a], perm[b]).expect("distinct vertices");
    }
    h
}
