#![allow(dead_code)]

use chromatic_core::{Graph, IntPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices; each of the possible edges is present
/// with probability one half, and the edge order is shuffled.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), any::<u64>())
        })
        .prop_map(|(n, mask, seed)| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let mut edges: Vec<(usize, usize)> =
                all.into_iter().zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e).collect();
            // Fisher-Yates driven by the seed, so shrinking stays deterministic
            let mut s = seed;
            for i in (1..edges.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                edges.swap(i, (s >> 33) as usize % (i + 1));
            }
            Graph::with_ordered_edges(n, &edges).unwrap()
        })
}

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

/// All labeled simple graphs on exactly `n` vertices.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}
