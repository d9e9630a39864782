//! Exhaustive enumeration primitives. Everything here is exponential and
//! guarded by [`Limits`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::tree::Tree;
use super::{EdgeSet, Forest, Graph, Limits, VertexSet};
use crate::error::{Error, Result};

/// Union-find without path compression so unions can be undone in LIFO order.
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackDsu {
    pub(crate) fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges and returns true, or returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    pub(crate) fn undo(&mut self) {
        let b = self.history.pop().expect("undo without union");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

/// `k(E)`: number of connected components of `(V, es)`, isolated vertices
/// included.
pub fn component_count(g: &Graph, es: EdgeSet) -> usize {
    let mut dsu = RollbackDsu::new(g.vertex_count());
    let mut k = g.vertex_count();
    for id in es {
        let e = g.edge(id);
        if dsu.union(e.u, e.v) {
            k -= 1;
        }
    }
    k
}

/// A vertex subset `R` with `|R| >= 2` whose restriction is connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectedSubset(VertexSet);

impl ConnectedSubset {
    pub fn new(g: &Graph, r: VertexSet) -> Result<Self> {
        if r.len() < 2 || !r.is_subset(g.vertices()) || !g.is_connected_on(r) {
            return Err(Error::NotConnected);
        }
        Ok(ConnectedSubset(r))
    }

    pub fn vertices(self) -> VertexSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

/// All connected subsets of size at least two, ordered by their bitmask.
pub fn enumerate_connected_subsets(g: &Graph, limits: &Limits) -> Result<Vec<ConnectedSubset>> {
    limits.check_vertices(g)?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for bits in 0..(1u64 << n) {
        let r = VertexSet(bits);
        if r.len() >= 2 && g.is_connected_on(r) {
            out.push(ConnectedSubset(r));
        }
    }
    Ok(out)
}

/// Visits every subset of `universe` with the number of components it
/// leaves among the vertices of `g`.
pub fn for_each_spanning_subgraph(
    g: &Graph,
    universe: EdgeSet,
    limits: &Limits,
    mut visit: impl FnMut(EdgeSet, usize),
) -> Result<()> {
    limits.check_edges(universe.len())?;
    let ids: Vec<usize> = universe.iter().collect();
    let mut dsu = RollbackDsu::new(g.vertex_count());
    fn rec(
        g: &Graph,
        ids: &[usize],
        dsu: &mut RollbackDsu,
        cur: EdgeSet,
        k: usize,
        visit: &mut dyn FnMut(EdgeSet, usize),
    ) {
        let Some((&id, rest)) = ids.split_first() else {
            visit(cur, k);
            return;
        };
        rec(g, rest, dsu, cur, k, visit);
        let e = g.edge(id);
        if dsu.union(e.u, e.v) {
            rec(g, rest, dsu, cur.with(id), k - 1, visit);
            dsu.undo();
        } else {
            rec(g, rest, dsu, cur.with(id), k, visit);
        }
    }
    rec(g, &ids, &mut dsu, EdgeSet::EMPTY, g.vertex_count(), &mut visit);
    Ok(())
}

/// The connected spanning subgraphs of `g`, as edge sets.
pub fn connected_spanning_subgraphs(g: &Graph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut out = Vec::new();
    for_each_spanning_subgraph(g, g.all_edges(), limits, |es, k| {
        if k == 1 {
            out.push(es);
        }
    })?;
    out.sort();
    Ok(out)
}

/// Visits every forest contained in `universe`. `admit(current, edge)` may veto
/// adding `edge` to the acyclic set `current`; a vetoed branch is pruned.
pub(crate) fn walk_forests(
    g: &Graph,
    universe: EdgeSet,
    mut admit: impl FnMut(EdgeSet, usize) -> bool,
    mut visit: impl FnMut(EdgeSet),
) {
    let ids: Vec<usize> = universe.iter().collect();
    let mut dsu = RollbackDsu::new(g.vertex_count());
    fn rec(
        g: &Graph,
        ids: &[usize],
        dsu: &mut RollbackDsu,
        cur: EdgeSet,
        admit: &mut dyn FnMut(EdgeSet, usize) -> bool,
        visit: &mut dyn FnMut(EdgeSet),
    ) {
        let Some((&id, rest)) = ids.split_first() else {
            visit(cur);
            return;
        };
        rec(g, rest, dsu, cur, admit, visit);
        let e = g.edge(id);
        if dsu.find(e.u) != dsu.find(e.v) && admit(cur, id) {
            dsu.union(e.u, e.v);
            rec(g, rest, dsu, cur.with(id), admit, visit);
            dsu.undo();
        }
    }
    rec(g, &ids, &mut dsu, EdgeSet::EMPTY, &mut admit, &mut visit);
}

/// Visits every forest of `g` (acyclic edge subset, the empty set included).
pub fn for_each_forest(g: &Graph, limits: &Limits, visit: impl FnMut(EdgeSet)) -> Result<()> {
    limits.check_vertices(g)?;
    limits.check_edges(g.edge_count())?;
    walk_forests(g, g.all_edges(), |_, _| true, visit);
    Ok(())
}

pub fn enumerate_forests(g: &Graph, limits: &Limits) -> Result<Vec<Forest>> {
    let mut sets = Vec::new();
    for_each_forest(g, limits, |f| sets.push(f))?;
    sets.sort();
    sets.into_iter().map(|f| Forest::new(g, f)).collect()
}

/// All spanning trees of a connected graph.
pub fn enumerate_spanning_trees(g: &Graph, limits: &Limits) -> Result<Vec<Tree>> {
    if !g.is_connected() || g.vertex_count() < 2 {
        return Err(Error::NotConnected);
    }
    limits.check_edges(g.edge_count())?;
    let need = g.vertex_count() - 1;
    let mut out = Vec::new();
    walk_forests(
        g,
        g.all_edges(),
        |cur, _| cur.len() < need,
        |f| {
            if f.len() == need {
                out.push(Tree::new_unchecked(g.vertices(), f));
            }
        },
    );
    debug_assert_eq!(BigInt::from(out.len()), matrix_tree_count(g));
    Ok(out)
}

/// Number of spanning trees by the Matrix-Tree theorem: any cofactor of the
/// Laplacian, evaluated with fraction-free (Bareiss) elimination.
pub fn matrix_tree_count(g: &Graph) -> BigInt {
    let n = g.vertex_count();
    if n == 0 {
        return BigInt::zero();
    }
    let k = n - 1;
    // Laplacian with row/column 0 removed.
    let mut a: Vec<Vec<BigInt>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(g.degree(i))
                    } else if g.edge_id(i, j).is_some() {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for p in 0..k {
        if a[p][p].is_zero() {
            let Some(r) = (p + 1..k).find(|&r| !a[r][p].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[p][p].clone();
    }
    if k == 0 {
        return BigInt::one();
    }
    (sign * &a[k - 1][k - 1]).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn component_counts() {
        let g = k3();
        assert_eq!(component_count(&g, EdgeSet::EMPTY), 3);
        assert_eq!(component_count(&g, g.all_edges()), 1);
        let id = g.edge_id(0, 1).unwrap();
        assert_eq!(component_count(&g, EdgeSet::singleton(id)), 2);
    }

    #[test]
    fn connected_subsets_small_cases() {
        let l = Limits::default();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_connected_subsets(&k2, &l).unwrap().len(), 1);
        assert_eq!(enumerate_connected_subsets(&k3(), &l).unwrap().len(), 4);
        let e2 = Graph::edgeless(2).unwrap();
        assert!(enumerate_connected_subsets(&e2, &l).unwrap().is_empty());
    }

    #[test]
    fn connected_subsets_respects_limit() {
        let l = Limits { max_vertices: 2, ..Limits::default() };
        assert!(matches!(
            enumerate_connected_subsets(&k3(), &l),
            Err(Error::GraphTooLarge { .. })
        ));
    }

    #[test]
    fn connected_spanning_subgraph_counts() {
        let l = Limits::default();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(connected_spanning_subgraphs(&k2, &l).unwrap().len(), 1);
        assert_eq!(connected_spanning_subgraphs(&k3(), &l).unwrap().len(), 4);
        assert_eq!(connected_spanning_subgraphs(&c4(), &l).unwrap().len(), 5);
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(connected_spanning_subgraphs(&g, &l), Err(Error::NotConnected));
    }

    #[test]
    fn spanning_tree_counts() {
        let l = Limits::default();
        assert_eq!(enumerate_spanning_trees(&k3(), &l).unwrap().len(), 3);
        assert_eq!(enumerate_spanning_trees(&c4(), &l).unwrap().len(), 4);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&k2, &l).unwrap().len(), 1);
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&g, &l), Err(Error::NotConnected));
    }

    #[test]
    fn matrix_tree_known_values() {
        // Cayley: n^(n-2)
        let edges: Vec<_> =
            (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
        let k6 = Graph::new(6, &edges).unwrap();
        assert_eq!(matrix_tree_count(&k6), BigInt::from(1296));
        assert_eq!(matrix_tree_count(&c4()), BigInt::from(4));
        assert_eq!(matrix_tree_count(&Graph::new(3, &[(0, 1)]).unwrap()), BigInt::zero());
    }

    #[test]
    fn forest_counts() {
        let l = Limits::default();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_forests(&k2, &l).unwrap().len(), 2);
        assert_eq!(enumerate_forests(&k3(), &l).unwrap().len(), 7);
        assert_eq!(enumerate_forests(&c4(), &l).unwrap().len(), 15);
        assert_eq!(enumerate_forests(&Graph::edgeless(3).unwrap(), &l).unwrap().len(), 1);
    }
}
