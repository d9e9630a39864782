//! The hard-core polymer gas whose grand partition function, times `q^n`,
//! is the chromatic polynomial.
//!
//! Polymers are connected vertex subsets `R` with `|R| >= 2`. The activity of
//! `R` is `z(R, q) = a_R / q^(|R|-1)` with
//! `a_R = sum over connected spanning subgraphs g of G|R of (-1)^|E(g)|`, and
//! `Xi = 1 + sum over nonempty families of pairwise disjoint polymers of the
//! product of their activities`. Everything is exact; `1/q` is a formal
//! variable.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::{
    enumerate_connected_subsets, enumerate_spanning_trees, for_each_spanning_subgraph,
    ConnectedSubset, Graph, Limits, VertexSet,
};
use crate::schemes::SchemeMap;
use crate::{IntPolynomial, XiPolynomial};

/// `z(R, q) = numerator / q^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Activity {
    pub numerator: BigInt,
    pub exponent: usize,
}

impl Activity {
    pub fn to_json(&self) -> Value {
        json!({ "numerator": self.numerator.to_string(), "exponent": self.exponent })
    }
}

impl std::fmt::Display for Activity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exponent {
            1 => write!(f, "{}/q", self.numerator),
            e => write!(f, "{}/q^{e}", self.numerator),
        }
    }
}

/// `a_R` by enumerating the connected spanning subgraphs of `G|R`.
pub fn activity(g: &Graph, r: ConnectedSubset, limits: &Limits) -> Result<Activity> {
    let (sub, _) = g.restrict(r.vertices());
    let mut a = 0i128;
    for_each_spanning_subgraph(&sub, sub.all_edges(), limits, |es, k| {
        if k == 1 {
            a += if es.len() % 2 == 0 { 1 } else { -1 };
        }
    })?;
    Ok(Activity { numerator: BigInt::from(a), exponent: r.len() - 1 })
}

/// `a_R = (-1)^(|R|-1) * #{τ spanning tree of G|R : m(τ) = τ}`.
pub fn activity_via_scheme(
    g: &Graph,
    r: ConnectedSubset,
    m: &SchemeMap,
    limits: &Limits,
) -> Result<Activity> {
    let (sub, _) = g.restrict(r.vertices());
    m.ensure_valid_for(&sub, limits)?;
    let closed = enumerate_spanning_trees(&sub, limits)?
        .iter()
        .filter(|t| m.image(&sub, t) == t.edges())
        .count();
    let exponent = r.len() - 1;
    let numerator = if exponent.is_multiple_of(2) { BigInt::from(closed) } else { -BigInt::from(closed) };
    Ok(Activity { numerator, exponent })
}

/// Every polymer of `g` with its activity, ordered by vertex bitmask.
pub fn activity_table(g: &Graph, limits: &Limits) -> Result<Vec<(ConnectedSubset, Activity)>> {
    enumerate_connected_subsets(g, limits)?
        .into_iter()
        .map(|r| Ok((r, activity(g, r, limits)?)))
        .collect()
}

fn add_shifted(acc: &mut Vec<BigInt>, src: &[BigInt], factor: &BigInt, shift: usize) {
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, BigInt::zero());
    }
    for (k, c) in src.iter().enumerate() {
        acc[k + shift] += c * factor;
    }
}

/// Grand partition function of the polymer gas, as a polynomial in `1/q`.
///
/// Families are generated by deciding the smallest undecided vertex `v`:
/// either `v` is covered by no polymer, or by exactly one polymer whose
/// smallest vertex is `v`. This produces each unordered family once; the sum
/// over the remaining free vertices is memoized.
pub fn xi(g: &Graph, limits: &Limits) -> Result<XiPolynomial> {
    let table = activity_table(g, limits)?;
    let mut by_min: Vec<Vec<(VertexSet, BigInt, usize)>> = vec![Vec::new(); g.vertex_count()];
    for (r, a) in table {
        let v = r.vertices().first().unwrap();
        by_min[v].push((r.vertices(), a.numerator, a.exponent));
    }
    fn rec(
        free: VertexSet,
        by_min: &[Vec<(VertexSet, BigInt, usize)>],
        memo: &mut HashMap<VertexSet, Vec<BigInt>>,
    ) -> Vec<BigInt> {
        let Some(v) = free.first() else {
            return vec![BigInt::one()];
        };
        if let Some(hit) = memo.get(&free) {
            return hit.clone();
        }
        let mut rest = free;
        rest.remove(v);
        let mut acc = rec(rest, by_min, memo);
        for (r, a, e) in &by_min[v] {
            if r.is_subset(free) {
                let inner = rec(free.difference(*r), by_min, memo);
                add_shifted(&mut acc, &inner, a, *e);
            }
        }
        memo.insert(free, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    Ok(XiPolynomial::new(rec(g.vertices(), &by_min, &mut memo)))
}

/// `q^n * Xi(q)`, expanded.
pub fn chromatic_via_polymer(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    Ok(xi(g, limits)?.times_q_pow(g.vertex_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{complete, cycle};

    fn l() -> Limits {
        Limits::default()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn subset(g: &Graph, vs: &[usize]) -> ConnectedSubset {
        ConnectedSubset::new(g, vs.iter().copied().collect()).unwrap()
    }

    #[test]
    fn activities_of_small_polymers() {
        let k3 = complete(3);
        let edge = activity(&k3, subset(&k3, &[0, 1]), &l()).unwrap();
        assert_eq!((edge.numerator, edge.exponent), (BigInt::from(-1), 1));
        let tri = activity(&k3, subset(&k3, &[0, 1, 2]), &l()).unwrap();
        assert_eq!((tri.numerator.clone(), tri.exponent), (BigInt::from(2), 2));
        assert_eq!(tri.to_string(), "2/q^2");
        let c4 = cycle(4);
        let sq = activity(&c4, subset(&c4, &[0, 1, 2, 3]), &l()).unwrap();
        assert_eq!((sq.numerator, sq.exponent), (BigInt::from(-3), 3));
    }

    #[test]
    fn scheme_activities_count_closed_trees() {
        let m = SchemeMap::minimal_tree();
        let k3 = complete(3);
        let tri = activity_via_scheme(&k3, subset(&k3, &[0, 1, 2]), &m, &l()).unwrap();
        assert_eq!(tri.numerator, BigInt::from(2));
        let edge = activity_via_scheme(&k3, subset(&k3, &[1, 2]), &m, &l()).unwrap();
        assert_eq!(edge.numerator, BigInt::from(-1));
        let c4 = cycle(4);
        let sq = activity_via_scheme(&c4, subset(&c4, &[0, 1, 2, 3]), &m, &l()).unwrap();
        assert_eq!(sq.numerator, BigInt::from(-3));
    }

    #[test]
    fn xi_small() {
        assert_eq!(xi(&complete(2), &l()).unwrap().coefficients(), big(&[1, -1]).as_slice());
        assert_eq!(xi(&complete(3), &l()).unwrap().coefficients(), big(&[1, -3, 2]).as_slice());
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(xi(&two_k2, &l()).unwrap().coefficients(), big(&[1, -2, 1]).as_slice());
        assert_eq!(xi(&Graph::edgeless(5).unwrap(), &l()).unwrap().coefficients(), big(&[1]).as_slice());
    }

    #[test]
    fn chromatic_from_polymers() {
        let p = chromatic_via_polymer(&cycle(4), &l()).unwrap();
        assert_eq!(p.coefficients(), big(&[0, -3, 6, -4, 1]).as_slice());
        let e = chromatic_via_polymer(&Graph::edgeless(3).unwrap(), &l()).unwrap();
        assert_eq!(e.coefficients(), big(&[0, 0, 0, 1]).as_slice());
    }

    #[test]
    fn xi_json() {
        let v = xi(&complete(3), &l()).unwrap().to_json();
        assert_eq!(v.to_string(), r#"{"inv_q_coefficients":["1","-3","2"]}"#);
        assert_eq!(XiPolynomial::from_json(&v).unwrap(), xi(&complete(3), &l()).unwrap());
    }
}
