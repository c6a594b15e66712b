//! Vertex-labelled graphs with one or two edge colours.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Which of the two edge sets of a 2-edge-coloured graph an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Reality,
    Desire,
}

fn ordered<V: Ord>(a: V, b: V) -> (V, V) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A simple labelled graph; labels are pointer magnitudes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph<V: Ord> {
    labels: BTreeMap<V, u32>,
    edges: BTreeSet<(V, V)>,
}

impl<V: Ord> Default for LabelledGraph<V> {
    fn default() -> Self {
        LabelledGraph {
            labels: BTreeMap::new(),
            edges: BTreeSet::new(),
        }
    }
}

impl<V: Ord + Clone> LabelledGraph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: V, label: u32) {
        self.labels.insert(v, label);
    }

    /// Inserts `{a, b}`; returns whether it was new.
    pub fn add_edge(&mut self, a: V, b: V) -> Result<bool> {
        if a == b {
            return Err(Error::InvalidGraph("self-loop".into()));
        }
        if !self.labels.contains_key(&a) || !self.labels.contains_key(&b) {
            return Err(Error::InvalidGraph("edge endpoint is not a vertex".into()));
        }
        Ok(self.edges.insert(ordered(a, b)))
    }

    pub fn has_edge(&self, a: &V, b: &V) -> bool {
        let key = ordered(a.clone(), b.clone());
        self.edges.contains(&key)
    }

    pub fn label(&self, v: &V) -> Option<u32> {
        self.labels.get(v).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&V, u32)> {
        self.labels.iter().map(|(v, &l)| (v, l))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Edges with the smaller endpoint first, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &(V, V)> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbour_map(&self) -> BTreeMap<V, Vec<V>> {
        let mut map: BTreeMap<V, Vec<V>> =
            self.labels.keys().map(|v| (v.clone(), Vec::new())).collect();
        for (a, b) in &self.edges {
            map.get_mut(a).unwrap().push(b.clone());
            map.get_mut(b).unwrap().push(a.clone());
        }
        map
    }

    pub fn max_degree(&self) -> usize {
        self.neighbour_map().values().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<V>> {
        components_of(&self.neighbour_map())
    }

    /// The same graph viewed as a 2-edge-coloured graph whose edges are all
    /// reality edges.
    pub fn to_coloured(&self) -> ColouredGraph<V> {
        ColouredGraph {
            labels: self.labels.clone(),
            reality: self.edges.clone(),
            desire: BTreeSet::new(),
        }
    }
}

/// A labelled graph with a reality edge set and a desire edge set.
/// The two sets may share vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph<V: Ord> {
    labels: BTreeMap<V, u32>,
    reality: BTreeSet<(V, V)>,
    desire: BTreeSet<(V, V)>,
}

impl<V: Ord> Default for ColouredGraph<V> {
    fn default() -> Self {
        ColouredGraph {
            labels: BTreeMap::new(),
            reality: BTreeSet::new(),
            desire: BTreeSet::new(),
        }
    }
}

impl<V: Ord + Clone> ColouredGraph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: V, label: u32) {
        self.labels.insert(v, label);
    }

    pub fn add_edge(&mut self, colour: Colour, a: V, b: V) -> Result<bool> {
        if a == b {
            return Err(Error::InvalidGraph("self-loop".into()));
        }
        if !self.labels.contains_key(&a) || !self.labels.contains_key(&b) {
            return Err(Error::InvalidGraph("edge endpoint is not a vertex".into()));
        }
        let set = match colour {
            Colour::Reality => &mut self.reality,
            Colour::Desire => &mut self.desire,
        };
        Ok(set.insert(ordered(a, b)))
    }

    pub fn label(&self, v: &V) -> Option<u32> {
        self.labels.get(v).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&V, u32)> {
        self.labels.iter().map(|(v, &l)| (v, l))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self, colour: Colour) -> impl Iterator<Item = &(V, V)> {
        match colour {
            Colour::Reality => self.reality.iter(),
            Colour::Desire => self.desire.iter(),
        }
    }

    /// Exchanges the roles of the two edge sets.
    pub fn swap_colours(&self) -> Self {
        ColouredGraph {
            labels: self.labels.clone(),
            reality: self.desire.clone(),
            desire: self.reality.clone(),
        }
    }

    /// Neighbours along each colour.
    pub fn coloured_neighbours(&self) -> BTreeMap<V, Vec<(Colour, V)>> {
        let mut map: BTreeMap<V, Vec<(Colour, V)>> =
            self.labels.keys().map(|v| (v.clone(), Vec::new())).collect();
        for (colour, set) in [(Colour::Reality, &self.reality), (Colour::Desire, &self.desire)] {
            for (a, b) in set {
                map.get_mut(a).unwrap().push((colour, b.clone()));
                map.get_mut(b).unwrap().push((colour, a.clone()));
            }
        }
        map
    }

    pub fn components(&self) -> Vec<Vec<V>> {
        let plain: BTreeMap<V, Vec<V>> = self
            .coloured_neighbours()
            .into_iter()
            .map(|(v, n)| (v, n.into_iter().map(|(_, w)| w).collect()))
            .collect();
        components_of(&plain)
    }
}

fn components_of<V: Ord + Clone>(neighbours: &BTreeMap<V, Vec<V>>) -> Vec<Vec<V>> {
    let mut seen: BTreeSet<V> = BTreeSet::new();
    let mut out = Vec::new();
    for start in neighbours.keys() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = vec![start.clone()];
        seen.insert(start.clone());
        let mut stack = vec![start.clone()];
        while let Some(v) = stack.pop() {
            for w in &neighbours[&v] {
                if seen.insert(w.clone()) {
                    comp.push(w.clone());
                    stack.push(w.clone());
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}
