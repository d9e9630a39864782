use super::PartitionScheme;
use crate::error::{Error, Result};
use crate::graph::{broken_circuits, is_broken_circuit_free, EdgeSet, Graph, Limits, Tree};
use crate::graph::tree::path_unchecked;

/// Adds to `τ` every non-tree edge of the restriction that is larger, in the
/// edge order, than every edge on its tree path.
pub struct MinimalTree;

impl PartitionScheme for MinimalTree {
    fn name(&self) -> &str {
        "minimal-tree"
    }

    fn image(&self, g: &Graph, tree: &Tree) -> EdgeSet {
        let mut out = tree.edges();
        for id in g.induced_edges(tree.vertex_set()).difference(tree.edges()) {
            let e = g.edge(id);
            let path = path_unchecked(g, tree.edges(), e.u, e.v);
            // edge ids are ranks in the edge order
            if path.iter().all(|&p| id > p) {
                out.insert(id);
            }
        }
        out
    }
}

/// Minimal-tree image of a spanning tree of `g_restricted`.
pub fn minimal_tree_map(g_restricted: &Graph, tree: &Tree) -> Result<EdgeSet> {
    if !tree.spans(g_restricted) {
        return Err(Error::TreeDoesNotSpan);
    }
    Ok(MinimalTree.image(g_restricted, tree))
}

/// Does `tree` avoid every broken circuit of `g` restricted to the tree's
/// vertices, under the induced edge order?
pub fn tree_avoids_induced_broken_circuits(g: &Graph, tree: &Tree, limits: &Limits) -> Result<bool> {
    let (sub, old) = g.restrict(tree.vertex_set());
    let mut local = EdgeSet::EMPTY;
    for (id, e) in sub.edges().iter().enumerate() {
        if tree.edges().contains(g.edge_id(old[e.u], old[e.v]).unwrap()) {
            local.insert(id);
        }
    }
    Ok(is_broken_circuit_free(local, &broken_circuits(&sub, limits)?))
}
