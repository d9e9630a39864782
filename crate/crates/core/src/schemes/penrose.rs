use super::PartitionScheme;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Tree};

/// Penrose's scheme. Root the tree at its smallest vertex and let `d` be the
/// tree distance to the root. A non-tree edge `{x, y}` of the restriction is
/// added when `d(x) = d(y)`, or when `d(x) = d(y) + 1` and the parent of `x`
/// precedes `y` in the vertex order.
pub struct Penrose;

impl PartitionScheme for Penrose {
    fn name(&self) -> &str {
        "penrose"
    }

    fn image(&self, g: &Graph, tree: &Tree) -> EdgeSet {
        let n = g.vertex_count();
        let root = tree.vertex_set().first().expect("nontrivial tree");
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for id in g.incident_edges(v).intersection(tree.edges()) {
                let w = g.edge(id).other(v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut out = tree.edges();
        for id in g.induced_edges(tree.vertex_set()).difference(tree.edges()) {
            let e = g.edge(id);
            let (dx, dy) = (depth[e.u], depth[e.v]);
            let add = if dx == dy {
                true
            } else if dx == dy + 1 {
                parent[e.u] < e.v
            } else if dy == dx + 1 {
                parent[e.v] < e.u
            } else {
                false
            };
            if add {
                out.insert(id);
            }
        }
        out
    }
}

/// Penrose image of a spanning tree of `g_restricted`.
pub fn penrose_map(g_restricted: &Graph, tree: &Tree) -> Result<EdgeSet> {
    if !tree.spans(g_restricted) {
        return Err(Error::TreeDoesNotSpan);
    }
    Ok(Penrose.image(g_restricted, tree))
}
