//! m-uniform hypergraphs on the vertex set `1..=n`.
//!
//! Edges are kept as sorted vertex lists, canonically ordered, together with
//! a parallel list of `u64` bitmasks (bit `v - 1` for vertex `v`). The bitmask
//! view is what every search in the crate runs on, which caps `n` at 64.

mod balance;
mod families;
mod graph;
mod vertex_set;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use balance::UnbalancedWitness;
pub use families::{
    complete, connected_family, construct_t2, lift_to_m, pad_connected_3, pad_to_n,
    third_power_gap_example,
};
pub use vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    m: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    m: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(raw: HypergraphJson) -> Result<Self> {
        Hypergraph::new(raw.n, raw.m, raw.edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            n: h.n,
            m: h.m,
            edges: h.edges,
        }
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, m={}, edges=[", self.n, self.m)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "])")
    }
}

impl Hypergraph {
    /// Validates and canonicalizes an m-uniform hypergraph.
    ///
    /// Each edge must list exactly `m` distinct vertices from `1..=n`, no edge
    /// may repeat, the edge set must be non-empty and `n >= m >= 2`. Input edge
    /// order and vertex order within an edge are irrelevant.
    pub fn new(n: usize, m: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidHypergraph(format!(
                "uniformity must be at least 2, got {m}"
            )));
        }
        if n < m {
            return Err(Error::InvalidHypergraph(format!(
                "need n >= m, got n = {n}, m = {m}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        if edges.is_empty() {
            return Err(Error::InvalidHypergraph("edge set is empty".into()));
        }
        let mut canonical = BTreeSet::new();
        for mut edge in edges {
            if edge.len() != m {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {edge:?} has {} vertices, expected {m}",
                    edge.len()
                )));
            }
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {v} in edge {edge:?} is outside 1..={n}"
                )));
            }
            edge.sort_unstable();
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {edge:?} repeats a vertex"
                )));
            }
            if !canonical.insert(edge.clone()) {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {edge:?}")));
            }
        }
        let edges: Vec<Vec<usize>> = canonical.into_iter().collect();
        let masks = edges
            .iter()
            .map(|e| VertexSet::from_iter(e.iter().copied()).mask())
            .collect();
        Ok(Hypergraph { n, m, edges, masks })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidHypergraph(e.to_string()))
    }

    /// Canonical JSON form `{"n":..,"m":..,"edges":[..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serialization cannot fail")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edge bitmasks, in the same order as [`Hypergraph::edges`].
    pub fn edge_masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, set: VertexSet) -> bool {
        self.masks.contains(&set.mask())
    }

    pub(crate) fn check_vertex_set(&self, set: VertexSet) -> Result<()> {
        if !set.is_subset(self.vertices()) {
            return Err(Error::InvalidArgument(format!(
                "vertex set {set:?} is not contained in 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix {
            rows: self.n,
            columns: self.masks.clone(),
        }
    }

    /// Restricts to the vertices in `subset`, keeping only the edges that lie
    /// entirely inside it. The result is reindexed to `1..=|subset|`.
    pub fn induced(&self, subset: VertexSet) -> Result<InducedSubhypergraph> {
        self.check_vertex_set(subset)?;
        if subset.len() < self.m {
            return Err(Error::InvalidArgument(format!(
                "induced subhypergraph needs at least m = {} vertices, got {}",
                self.m,
                subset.len()
            )));
        }
        let vertices = subset.to_vec();
        let mut new_index = [0usize; MAX_VERTICES + 1];
        for (i, &v) in vertices.iter().enumerate() {
            new_index[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .zip(&self.masks)
            .filter(|(_, &mask)| mask & !subset.mask() == 0)
            .map(|(e, _)| e.iter().map(|&v| new_index[v]).collect())
            .collect();
        Ok(InducedSubhypergraph {
            m: self.m,
            vertices,
            edges,
        })
    }

    /// Connectivity through overlapping edges. Vertices lying in no edge make
    /// the hypergraph disconnected unless `n == 1`.
    pub fn is_connected(&self) -> bool {
        let all = self.vertices().mask();
        let mut reached: u64 = 1;
        loop {
            let next = self
                .masks
                .iter()
                .filter(|&&e| e & reached != 0)
                .fold(reached, |acc, &e| acc | e);
            if next == reached {
                break;
            }
            reached = next;
        }
        reached == all
    }

    /// True when no edge lies entirely inside `set`.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        self.masks.iter().all(|&e| e & !set.mask() != 0)
    }

    /// Lazily enumerates every independent set, starting with the empty set.
    ///
    /// Sets come out in depth-first order: each set is followed by its
    /// extensions with larger vertices, smallest extension first.
    pub fn independent_sets(&self) -> IndependentSets<'_> {
        IndependentSets {
            graph: self,
            stack: vec![(VertexSet::empty(), 1)],
        }
    }

    /// Vertices outside `set` that complete an edge whose other `m - 1`
    /// vertices all lie in `set`.
    pub fn neighborhood(&self, set: VertexSet) -> Result<VertexSet> {
        self.check_vertex_set(set)?;
        if !self.is_independent(set) {
            return Err(Error::NotIndependent(set.to_vec()));
        }
        let mut out = 0u64;
        for &e in &self.masks {
            let outside = e & !set.mask();
            if outside.count_ones() == 1 {
                out |= outside;
            }
        }
        Ok(VertexSet::from_mask(out))
    }

    pub fn is_bipartite(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        graph::bipartition(self)
    }

    pub fn induced_odd_cycles(&self) -> Result<Vec<VertexSet>> {
        graph::induced_odd_cycles(self)
    }

    /// Exhaustive balancedness test; see [`UnbalancedWitness`].
    pub fn is_balanced(&self) -> Result<(bool, Option<UnbalancedWitness>)> {
        balance::is_balanced(self)
    }
}

/// Depth-first stream over the independent sets of a hypergraph.
pub struct IndependentSets<'a> {
    graph: &'a Hypergraph,
    stack: Vec<(VertexSet, usize)>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let (set, next_vertex) = self.stack.pop()?;
        // Push in reverse so the smallest extension is visited first.
        for v in (next_vertex..=self.graph.n).rev() {
            let grown = set.with(v);
            if self.graph.is_independent(grown) {
                self.stack.push((grown, v + 1));
            }
        }
        Some(set)
    }
}

/// The result of restricting a hypergraph to a vertex subset.
///
/// Vertex `i` of the restriction is vertex `vertices[i - 1]` of the parent.
/// The edge list may be empty, in which case it does not form a valid
/// [`Hypergraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubhypergraph {
    pub m: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

impl InducedSubhypergraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Parent vertex of a local (1-indexed) vertex.
    pub fn parent_vertex(&self, local: usize) -> usize {
        self.vertices[local - 1]
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.vertices.len(), self.m, self.edges.clone())
    }
}

/// 0/1 vertex-by-edge incidence matrix, stored column-wise as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    columns: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Entry for vertex `row` (1-indexed) and edge `col` (0-indexed).
    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.columns[col] >> (row - 1) & 1 == 1
    }

    pub fn column_sum(&self, col: usize) -> usize {
        self.columns[col].count_ones() as usize
    }
}
