//! Immutable simple graphs with a fixed vertex order and a configurable total
//! order on the edges.
//!
//! Vertices are dense indices `0..n`. Edges are stored sorted by the edge
//! order, so an edge's id is its rank: edge `i` precedes edge `j` iff `i < j`.
//! Vertex and edge subsets are `u64` bitsets, which caps graphs at 64 vertices
//! and 64 edges; the enumeration routines enforce much smaller limits through
//! [`Limits`].

mod bitset;
pub mod catalog;
pub(crate) mod circuits;
pub(crate) mod enumerate;
pub mod io;
pub(crate) mod tree;

use std::fmt;

pub use bitset::{EdgeSet, VertexSet};
pub use circuits::{broken_circuits, is_broken_circuit_free, simple_circuits, Circuit};
pub use enumerate::{
    component_count, connected_spanning_subgraphs, enumerate_connected_subsets,
    enumerate_forests, enumerate_spanning_trees, for_each_forest, for_each_spanning_subgraph,
    matrix_tree_count, ConnectedSubset,
};
pub use tree::{tree_path, Forest, Tree};

use crate::error::{Error, Result};

pub const MAX_BITSET: usize = 64;

/// Hard limits for the exponential enumerations. Exceeding one is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex-count limit for vertex-subset enumerations.
    pub max_vertices: usize,
    /// Edge-count limit for edge-subset enumerations (`2^m` work).
    pub max_edges: usize,
    /// Budget on `q^n` for brute-force coloring and spin sums.
    pub coloring_budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 20, max_edges: 30, coloring_budget: 100_000_000 }
    }
}

impl Limits {
    pub fn check_vertices(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::GraphTooLarge {
                what: "vertices",
                got: g.vertex_count(),
                limit: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_edges(&self, m: usize) -> Result<()> {
        if m > self.max_edges {
            return Err(Error::GraphTooLarge { what: "edges", got: m, limit: self.max_edges });
        }
        Ok(())
    }

    pub fn check_colorings(&self, q: u64, n: usize) -> Result<()> {
        let mut total: u128 = 1;
        for _ in 0..n {
            total = total.saturating_mul(q as u128);
        }
        if total > self.coloring_budget {
            return Err(Error::BudgetExceeded {
                what: "q^n",
                got: total,
                budget: self.coloring_budget,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalized so that `u < v`.
    pub fn new(a: usize, b: usize) -> Self {
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted by the edge order; the index is the edge id.
    edges: Vec<Edge>,
    adj: Vec<VertexSet>,
    /// Edges incident to each vertex.
    incident: Vec<EdgeSet>,
    /// `n * n` lookup from endpoint pair to edge id.
    lookup: Vec<Option<u8>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a simple graph with the default edge order: lexicographic on
    /// `(min endpoint, max endpoint)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Self::checked_edges(n, edges)?;
        es.sort();
        Self::from_sorted(n, es)
    }

    /// Builds a simple graph whose edge order is the order of `edges`.
    pub fn with_ordered_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let es = Self::checked_edges(n, edges)?;
        Self::from_sorted(n, es)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    fn checked_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Edge>> {
        if n > MAX_BITSET {
            return Err(Error::Capacity { what: "vertices", got: n, max: MAX_BITSET });
        }
        if edges.len() > MAX_BITSET {
            return Err(Error::Capacity { what: "edges", got: edges.len(), max: MAX_BITSET });
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(Error::ParallelEdge(e.u, e.v));
            }
            out.push(e);
        }
        Ok(out)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut incident = vec![EdgeSet::EMPTY; n];
        let mut lookup = vec![None; n * n];
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
            incident[e.u].insert(id);
            incident[e.v].insert(id);
            lookup[e.u * n + e.v] = Some(id as u8);
            lookup[e.v * n + e.u] = Some(id as u8);
        }
        Ok(Graph { n, edges, adj, incident, lookup })
    }

    /// Same graph, edges reordered: `order[k]` is the current id of the edge
    /// that becomes the k-th smallest.
    pub fn with_edge_order(&self, order: &[usize]) -> Result<Self> {
        let m = self.edges.len();
        let mut seen = vec![false; m];
        if order.len() != m {
            return Err(Error::BadEdgeOrder(m));
        }
        for &i in order {
            if i >= m || seen[i] {
                return Err(Error::BadEdgeOrder(m));
            }
            seen[i] = true;
        }
        let edges = order.iter().map(|&i| self.edges[i]).collect();
        Self::from_sorted(self.n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Edges in ascending edge order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        self.lookup[a * self.n + b].map(usize::from)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn incident_edges(&self, v: usize) -> EdgeSet {
        self.incident[v]
    }

    /// Edges with both endpoints in `r` (the edge set of the restriction).
    pub fn induced_edges(&self, r: VertexSet) -> EdgeSet {
        let mut out = EdgeSet::EMPTY;
        for (id, e) in self.edges.iter().enumerate() {
            if r.contains(e.u) && r.contains(e.v) {
                out.insert(id);
            }
        }
        out
    }

    /// Vertices touched by the edges of `es`.
    pub fn span(&self, es: EdgeSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for id in es {
            out.insert(self.edges[id].u);
            out.insert(self.edges[id].v);
        }
        out
    }

    /// The restriction to `r`, vertices relabeled densely in increasing
    /// order, induced edge order kept. Returns the graph and the map from new
    /// vertex index to old.
    pub fn restrict(&self, r: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = r.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_of[e.u] != usize::MAX && new_of[e.v] != usize::MAX)
            .map(|e| Edge::new(new_of[e.u], new_of[e.v]))
            .collect();
        let g = Self::from_sorted(old.len(), edges).expect("restriction of a simple graph");
        (g, old)
    }

    /// Is the restriction to `r` connected? The empty set counts as not
    /// connected, a single vertex as connected.
    pub fn is_connected_on(&self, r: VertexSet) -> bool {
        let Some(start) = r.first() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v].intersection(r));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == r
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_on(self.vertices())
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adj[v]);
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Does the spanning subgraph `(V, es)` connect all of `r`?
    pub fn edges_connect(&self, es: EdgeSet, r: VertexSet) -> bool {
        let Some(start) = r.first() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for id in self.incident[v].intersection(es) {
                let w = self.edges[id].other(v);
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen == r
    }
}
