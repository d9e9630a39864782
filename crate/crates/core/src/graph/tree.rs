use super::{EdgeSet, Graph, VertexSet};
use crate::error::{Error, Result};

/// A nontrivial tree of a graph: at least one edge, connected, acyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tree {
    vertices: VertexSet,
    edges: EdgeSet,
}

impl Tree {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let vertices = g.span(edges);
        if edges.is_empty()
            || edges.last().is_some_and(|i| i >= g.edge_count())
            || edges.len() + 1 != vertices.len()
            || !g.edges_connect(edges, vertices)
        {
            return Err(Error::NotATree(edges));
        }
        Ok(Tree { vertices, edges })
    }

    pub(crate) fn new_unchecked(vertices: VertexSet, edges: EdgeSet) -> Self {
        Tree { vertices, edges }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    /// Does the tree span all of `g`'s vertices?
    pub fn spans(&self, g: &Graph) -> bool {
        self.vertices == g.vertices()
    }
}

/// An acyclic edge subset together with its nontrivial trees, ordered by
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    edges: EdgeSet,
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let mut trees = Vec::new();
        let mut left = edges;
        while let Some(id) = left.first() {
            let (vs, es) = component_of(g, edges, g.edge(id).u);
            if es.len() + 1 != vs.len() {
                return Err(Error::NotATree(es));
            }
            trees.push(Tree::new_unchecked(vs, es));
            left = left.difference(es);
        }
        trees.sort_by_key(|t| t.vertices.first());
        Ok(Forest { edges, trees })
    }

    pub fn empty() -> Self {
        Forest { edges: EdgeSet::EMPTY, trees: Vec::new() }
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Vertices and edges of the component of `(V, es)` containing `start`.
pub(crate) fn component_of(g: &Graph, es: EdgeSet, start: usize) -> (VertexSet, EdgeSet) {
    let mut vs = VertexSet::singleton(start);
    let mut used = EdgeSet::EMPTY;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for id in g.incident_edges(v).intersection(es) {
            used.insert(id);
            let w = g.edge(id).other(v);
            if !vs.contains(w) {
                vs.insert(w);
                stack.push(w);
            }
        }
    }
    (vs, used)
}

/// Edge ids of the unique path from `x` to `y` in the tree, in walking order.
pub fn tree_path(g: &Graph, t: &Tree, x: usize, y: usize) -> Result<Vec<usize>> {
    for v in [x, y] {
        if !t.vertices.contains(v) {
            return Err(Error::VertexNotInTree(v));
        }
    }
    Ok(path_unchecked(g, t.edges, x, y))
}

/// Path between two vertices of the same tree component of `es`.
pub(crate) fn path_unchecked(g: &Graph, es: EdgeSet, x: usize, y: usize) -> Vec<usize> {
    // parent edge of every vertex reached from x
    let mut via = vec![usize::MAX; g.vertex_count()];
    let mut seen = VertexSet::singleton(x);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        if v == y {
            break;
        }
        for id in g.incident_edges(v).intersection(es) {
            let w = g.edge(id).other(v);
            if !seen.contains(w) {
                seen.insert(w);
                via[w] = id;
                stack.push(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = y;
    while v != x {
        let id = via[v];
        path.push(id);
        v = g.edge(id).other(v);
    }
    path.reverse();
    path
}
