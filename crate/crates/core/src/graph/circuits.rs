use std::collections::BTreeSet;

use super::{EdgeSet, Graph, Limits, VertexSet};
use crate::error::Result;

/// A simple circuit, stored as its cyclic vertex sequence and the edge ids
/// joining consecutive vertices (the last edge closes the cycle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Circuit {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_sequence(&self) -> &[usize] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// The circuit minus its largest edge.
    pub fn broken(&self) -> EdgeSet {
        let mut s = self.edge_set();
        s.remove(s.last().expect("circuit has edges"));
        s
    }
}

/// All simple circuits, each reported once: the walk starts at the circuit's
/// smallest vertex and takes the smaller of its two neighbours on the circuit
/// first, which removes rotations and reflections.
pub fn simple_circuits(g: &Graph, limits: &Limits) -> Result<Vec<Circuit>> {
    limits.check_vertices(g)?;
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        let mut on_path = VertexSet::singleton(s);
        extend(g, s, &mut path, &mut on_path, &mut out);
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    out: &mut Vec<Circuit>,
) {
    let v = *path.last().unwrap();
    for w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            let mut vertices = path.clone();
            let mut edges: Vec<usize> =
                vertices.windows(2).map(|p| g.edge_id(p[0], p[1]).unwrap()).collect();
            edges.push(g.edge_id(v, s).unwrap());
            vertices.shrink_to_fit();
            out.push(Circuit { vertices, edges });
        } else if w > s && !on_path.contains(w) {
            path.push(w);
            on_path.insert(w);
            extend(g, s, path, on_path, out);
            on_path.remove(w);
            path.pop();
        }
    }
}

/// Every broken circuit of `g` under its edge order, deduplicated as edge
/// sets and sorted.
pub fn broken_circuits(g: &Graph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let set: BTreeSet<EdgeSet> = simple_circuits(g, limits)?.iter().map(Circuit::broken).collect();
    Ok(set.into_iter().collect())
}

/// True iff no broken circuit in `bc` is contained in `edges`.
pub fn is_broken_circuit_free(edges: EdgeSet, bc: &[EdgeSet]) -> bool {
    bc.iter().all(|b| !b.is_subset(edges))
}

/// Drops every broken circuit that contains another one; containment tests
/// against the result are equivalent.
pub(crate) fn minimal_sets(mut sets: Vec<EdgeSet>) -> Vec<EdgeSet> {
    sets.sort_by_key(|s| s.len());
    let mut keep: Vec<EdgeSet> = Vec::new();
    for s in sets {
        if !keep.iter().any(|k| k.is_subset(s)) {
            keep.push(s);
        }
    }
    keep
}
