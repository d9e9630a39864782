//! Standard graph families, small connected graphs up to isomorphism, and
//! seeded random graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::new(n, &edges).expect("complete graph")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path")
}

/// Vertex 0 joined to `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges).expect("star")
}

/// `K<n>`, `C<n>`, `P<n>`, `S<n>` or `E<n>` (edgeless).
pub fn demo(name: &str) -> Result<Graph> {
    let bad = || Error::Parse { line: 0, msg: format!("unknown demo graph `{name}`") };
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    if n > super::MAX_BITSET || (kind.eq_ignore_ascii_case(&'K') && n > 11) {
        return Err(bad());
    }
    match kind.to_ascii_uppercase() {
        'K' => Ok(complete(n)),
        'C' if n >= 3 => Ok(cycle(n)),
        'P' => Ok(path(n)),
        'S' if n >= 1 => Ok(star(n)),
        'E' => Graph::edgeless(n),
        _ => Err(bad()),
    }
}

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = (i.min(j), i.max(j));
    // pairs ordered (0,1), (0,2), (1,2), (0,3), ...
    1 << (b * (b - 1) / 2 + a)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(code: u32, n: usize, perms: &[Vec<usize>]) -> u32 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| code & pair_bit(i, j) != 0)
        .collect();
    perms
        .iter()
        .map(|p| pairs.iter().fold(0, |acc, &(i, j)| acc | pair_bit(p[i], p[j])))
        .min()
        .unwrap_or(0)
}

fn from_code(code: u32, n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| code & pair_bit(i, j) != 0)
        .collect();
    Graph::new(n, &edges).expect("catalog graph")
}

/// One representative per isomorphism class of connected graphs on exactly
/// `n` vertices (`n <= 7`): 1, 1, 2, 6, 21, 112, 853 for n = 1..=7.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "catalog covers 1..=7 vertices");
    // Every connected graph has a non-cut vertex, so each class on n vertices
    // extends some class on n - 1 vertices by one vertex.
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    for k in 2..=n {
        let perms = permutations(k);
        let mut next = BTreeSet::new();
        for &code in &level {
            for nbrs in 1u32..(1 << (k - 1)) {
                let mut c = code;
                for i in 0..k - 1 {
                    if nbrs >> i & 1 == 1 {
                        c |= pair_bit(i, k - 1);
                    }
                }
                next.insert(canonical(c, k, &perms));
            }
        }
        level = next;
    }
    level.into_iter().map(|c| from_code(c, n)).collect()
}

/// Connected graphs on 1..=max_n vertices, grouped by size.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges).expect("random graph")
}

/// The same graph under a uniformly random edge order.
pub fn shuffle_edge_order<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    g.with_edge_order(&order).expect("permutation")
}
