use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::SchemeMap;
use crate::error::{Error, Result};
use crate::graph::{enumerate_spanning_trees, for_each_spanning_subgraph, EdgeSet, Graph, Limits};
use crate::scalar::Scalar;

/// One weight per edge of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment<W> {
    weights: Vec<W>,
}

impl<W: Scalar> WeightAssignment<W> {
    pub fn new(weights: Vec<W>) -> Self {
        WeightAssignment { weights }
    }

    pub fn constant(g: &Graph, w: W) -> Self {
        WeightAssignment { weights: vec![w; g.edge_count()] }
    }

    pub fn get(&self, edge: usize) -> &W {
        &self.weights[edge]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn product(&self, es: EdgeSet, shift: bool) -> W {
        es.iter().fold(W::one(), |acc, id| {
            let w = self.weights[id].clone();
            acc * if shift { W::one() + w } else { w }
        })
    }
}

impl WeightAssignment<BigRational> {
    /// Independent uniform rationals `a/b` in `[-2, 2]` with `1 <= b <= 6`.
    pub fn random_rational<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Self {
        let weights = (0..g.edge_count())
            .map(|_| {
                let b: i64 = rng.gen_range(1..=6);
                let a: i64 = rng.gen_range(-2 * b..=2 * b);
                BigRational::new(BigInt::from(a), BigInt::from(b))
            })
            .collect();
        WeightAssignment { weights }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PenroseCheck<W> {
    /// Sum over connected spanning subgraphs of the product of weights.
    pub lhs: W,
    /// Sum over spanning trees of `prod_τ w * prod_{m(τ) \ τ} (1 + w)`.
    pub rhs: W,
    pub equal: bool,
}

/// Evaluates both sides of the Penrose identity on a connected graph. Exact
/// for exact scalar types; the float types compare with a relative tolerance.
pub fn check_penrose_identity<W: Scalar>(
    g_restricted: &Graph,
    w: &WeightAssignment<W>,
    m: &SchemeMap,
    limits: &Limits,
) -> Result<PenroseCheck<W>> {
    let g = g_restricted;
    if w.len() != g.edge_count() {
        return Err(Error::WeightMismatch { got: w.len(), expected: g.edge_count() });
    }
    if !g.is_connected() || g.vertex_count() < 2 {
        return Err(Error::NotConnected);
    }
    m.ensure_valid_for(g, limits)?;

    let mut lhs = W::zero();
    for_each_spanning_subgraph(g, g.all_edges(), limits, |es, k| {
        if k == 1 {
            lhs = lhs.clone() + w.product(es, false);
        }
    })?;

    let mut rhs = W::zero();
    for t in enumerate_spanning_trees(g, limits)? {
        let extra = m.image(g, &t).difference(t.edges());
        rhs = rhs + w.product(t.edges(), false) * w.product(extra, true);
    }
    let equal = lhs.approx_eq(&rhs);
    Ok(PenroseCheck { lhs, rhs, equal })
}
