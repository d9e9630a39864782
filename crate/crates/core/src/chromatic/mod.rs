//! The chromatic polynomial by every route: the subgraph expansion, Whitney's
//! broken-circuit forests, forests of scheme-closed trees, and two
//! independent oracles (deletion-contraction and coloring counts).

mod deletion_contraction;

use std::collections::HashMap;

use num_bigint::BigInt;

pub use deletion_contraction::deletion_contraction;

use crate::error::Result;
use crate::graph::tree::component_of;
use crate::graph::{
    broken_circuits, for_each_forest, for_each_spanning_subgraph, EdgeSet,
    Forest, Graph, Limits, Tree,
};
use crate::graph::circuits::minimal_sets;
use crate::graph::enumerate::walk_forests;
use crate::schemes::SchemeMap;
use crate::IntPolynomial;

/// `sum_k (-1)^k N_k q^(n-k)`.
fn from_level_counts(n: usize, counts: &[u64]) -> IntPolynomial {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, &c) in counts.iter().enumerate() {
        let c = BigInt::from(c);
        coeffs[n - k] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// `sum_{E ⊆ edges} (-1)^|E| q^k(E)`.
pub fn chromatic_classical(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    let mut acc = vec![0i128; g.vertex_count() + 1];
    for_each_spanning_subgraph(g, g.all_edges(), limits, |es, k| {
        acc[k] += if es.len() % 2 == 0 { 1 } else { -1 };
    })?;
    Ok(IntPolynomial::new(acc.into_iter().map(BigInt::from).collect()))
}

/// Visits the forests of `g` containing no broken circuit of `g`. Broken
/// circuits are checked when their largest edge is added, which prunes every
/// extension of an offending forest.
fn walk_bcf_forests(g: &Graph, limits: &Limits, visit: impl FnMut(EdgeSet)) -> Result<()> {
    limits.check_edges(g.edge_count())?;
    let mut by_top: Vec<Vec<EdgeSet>> = vec![Vec::new(); g.edge_count()];
    for bc in minimal_sets(broken_circuits(g, limits)?) {
        by_top[bc.last().expect("broken circuits are nonempty")].push(bc);
    }
    walk_forests(
        g,
        g.all_edges(),
        |cur, id| {
            let next = cur.with(id);
            by_top[id].iter().all(|bc| !bc.is_subset(next))
        },
        visit,
    );
    Ok(())
}

/// The broken-circuit-free forests of `g` under its edge order, sorted.
pub fn broken_circuit_free_forests(g: &Graph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let mut out = Vec::new();
    walk_bcf_forests(g, limits, |f| out.push(f))?;
    out.sort();
    Ok(out)
}

/// Whitney: `q^n sum_{F broken-circuit free} (-1/q)^|F|`.
pub fn chromatic_whitney(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    limits.check_vertices(g)?;
    let mut counts = vec![0u64; g.vertex_count().max(1)];
    walk_bcf_forests(g, limits, |f| counts[f.len()] += 1)?;
    Ok(from_level_counts(g.vertex_count(), &counts))
}

/// Visits every forest whose nontrivial trees are all fixed by `m`.
fn walk_scheme_forests(
    g: &Graph,
    m: &SchemeMap,
    limits: &Limits,
    mut visit: impl FnMut(EdgeSet),
) -> Result<()> {
    m.ensure_valid_for(g, limits)?;
    let mut closed: HashMap<EdgeSet, bool> = HashMap::new();
    for_each_forest(g, limits, |f| {
        let mut left = f;
        while let Some(id) = left.first() {
            let (vs, es) = component_of(g, f, g.edge(id).u);
            let ok = *closed
                .entry(es)
                .or_insert_with(|| m.image(g, &Tree::new_unchecked(vs, es)) == es);
            if !ok {
                return;
            }
            left = left.difference(es);
        }
        visit(f);
    })
}

/// Forests of `m`-closed trees (the empty forest included), sorted by edge set.
pub fn enumerate_scheme_forests(g: &Graph, m: &SchemeMap, limits: &Limits) -> Result<Vec<Forest>> {
    let mut sets = Vec::new();
    walk_scheme_forests(g, m, limits, |f| sets.push(f))?;
    sets.sort();
    sets.into_iter().map(|f| Forest::new(g, f)).collect()
}

/// Edge sets of [`enumerate_scheme_forests`], without building trees.
pub fn scheme_forest_sets(g: &Graph, m: &SchemeMap, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let mut sets = Vec::new();
    walk_scheme_forests(g, m, limits, |f| sets.push(f))?;
    sets.sort();
    Ok(sets)
}

/// `N_k`: the number of `m`-closed forests with `k` edges, `k = 0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestLevelCounts {
    pub counts: Vec<u64>,
}

pub fn forest_level_counts(g: &Graph, m: &SchemeMap, limits: &Limits) -> Result<ForestLevelCounts> {
    let mut counts = vec![0u64; g.vertex_count().max(1)];
    walk_scheme_forests(g, m, limits, |f| counts[f.len()] += 1)?;
    Ok(ForestLevelCounts { counts })
}

/// `q^n sum_{F in F^m} (-1/q)^|F|`.
pub fn chromatic_scheme(g: &Graph, m: &SchemeMap, limits: &Limits) -> Result<IntPolynomial> {
    let counts = forest_level_counts(g, m, limits)?;
    Ok(from_level_counts(g.vertex_count(), &counts.counts))
}

/// Number of proper colorings with `q` colors.
///
/// Colorings are enumerated up to renaming of the colors (each vertex takes
/// an already used color or the next fresh one), and each class is weighted
/// by its exact size `q (q-1) .. (q-j+1)` for `j` colors used.
pub fn count_proper_colorings(g: &Graph, q: u64, limits: &Limits) -> Result<u128> {
    limits.check_colorings(q, g.vertex_count())?;
    fn rec(g: &Graph, v: usize, used: u64, q: u64, color: &mut [u64]) -> u128 {
        if v == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for c in 0..used {
            if g.neighbors(v).iter().all(|u| u > v || color[u] != c) {
                color[v] = c;
                total += rec(g, v + 1, used, q, color);
            }
        }
        if used < q {
            color[v] = used;
            total += (q - used) as u128 * rec(g, v + 1, used + 1, q, color);
        }
        total
    }
    let mut color = vec![0; g.vertex_count()];
    Ok(rec(g, 0, 0, q, &mut color))
}

/// `P` recovered from the coloring counts at `q = 0..n`.
///
/// Forward differences at 0 give the coefficients in the falling-factorial
/// basis, `P(q) = sum_k (Δ^k P(0) / k!) q(q-1)..(q-k+1)`, which are integers
/// for every chromatic polynomial.
pub fn chromatic_brute(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    let mut diffs: Vec<BigInt> = (0..=n as u64)
        .map(|q| count_proper_colorings(g, q, limits).map(BigInt::from))
        .collect::<Result<_>>()?;
    let mut result = IntPolynomial::zero();
    let mut falling = IntPolynomial::constant(BigInt::from(1));
    let mut factorial = BigInt::from(1);
    for k in 0..=n {
        let c = &diffs[0] / &factorial;
        debug_assert_eq!(&c * &factorial, diffs[0]);
        result = &result + &falling.scale(&c);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
        falling = &falling * &IntPolynomial::new(vec![BigInt::from(-(k as i64)), BigInt::from(1)]);
        factorial *= k + 1;
    }
    Ok(result)
}
