//! The q-state Potts model on a graph and the Mayer expansion that turns its
//! zero-temperature antiferromagnet into the polymer gas.
//!
//! Spins take values `0..q`. The energy is `H(σ) = -J * #{edges with equal
//! spins}`. All spin sums here are literal sweeps over `q^n` configurations
//! and are guarded by [`Limits::coloring_budget`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::graph::{for_each_spanning_subgraph, ConnectedSubset, Graph, Limits, VertexSet};
use crate::polymer;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinConfiguration {
    q: u32,
    spins: Vec<u32>,
}

impl SpinConfiguration {
    pub fn new(q: u32, spins: Vec<u32>) -> Result<Self> {
        if let Some(pos) = spins.iter().position(|&s| s >= q) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("spin {} at position {pos} is outside 0..{q}", spins[pos]),
            });
        }
        Ok(SpinConfiguration { q, spins })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn spins(&self) -> &[u32] {
        &self.spins
    }

    pub fn len(&self) -> usize {
        self.spins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InverseTemperature<F> {
    Finite(F),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PottsParameters<F> {
    pub q: u32,
    pub beta: InverseTemperature<F>,
    /// Coupling `J`; negative is antiferromagnetic.
    pub coupling: F,
}

/// Edges of `g` whose endpoints carry the same spin.
pub fn monochromatic_edges(g: &Graph, spins: &[u32]) -> usize {
    g.edges().iter().filter(|e| spins[e.u] == spins[e.v]).count()
}

pub fn hamiltonian<T: Scalar + std::ops::Neg<Output = T>>(
    g: &Graph,
    sigma: &SpinConfiguration,
    coupling: &T,
) -> T {
    assert_eq!(sigma.len(), g.vertex_count(), "one spin per vertex");
    -(coupling.clone() * T::from_count(monochromatic_edges(g, sigma.spins()) as u64))
}

/// Calls `f` on every configuration in `[q]^n`, last position fastest.
fn for_each_configuration(n: usize, q: u32, mut f: impl FnMut(&[u32])) {
    if q == 0 && n > 0 {
        return;
    }
    let mut spins = vec![0u32; n];
    loop {
        f(&spins);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            spins[i] += 1;
            if spins[i] < q {
                break;
            }
            spins[i] = 0;
        }
    }
}

/// Number of configurations with exactly `k` monochromatic edges, by `k`.
fn energy_histogram(g: &Graph, q: u32, limits: &Limits) -> Result<Vec<u128>> {
    limits.check_colorings(q as u64, g.vertex_count())?;
    let mut hist = vec![0u128; g.edge_count() + 1];
    for_each_configuration(g.vertex_count(), q, |s| hist[monochromatic_edges(g, s)] += 1);
    Ok(hist)
}

/// `Z = sum_σ exp(-β H(σ))`.
pub fn partition_function<F: Float + Scalar>(
    g: &Graph,
    params: &PottsParameters<F>,
    limits: &Limits,
) -> Result<F> {
    let InverseTemperature::Finite(beta) = params.beta else {
        return Err(Error::InfiniteBeta);
    };
    let hist = energy_histogram(g, params.q, limits)?;
    let mut z = F::zero();
    for (k, &count) in hist.iter().enumerate() {
        if count > 0 {
            let energy = -params.coupling * F::from_count(k as u64);
            z = z + F::from_u128(count).unwrap() * (-beta * energy).exp();
        }
    }
    Ok(z)
}

/// Boltzmann probability of `sigma`.
pub fn probability<F: Float + Scalar>(
    g: &Graph,
    params: &PottsParameters<F>,
    sigma: &SpinConfiguration,
    limits: &Limits,
) -> Result<F> {
    let z = partition_function(g, params, limits)?;
    let InverseTemperature::Finite(beta) = params.beta else {
        unreachable!("partition_function rejects infinite beta");
    };
    Ok((-beta * hamiltonian(g, sigma, &params.coupling)).exp() / z)
}

/// Boltzmann factor of one configuration at `β = ∞` with `J < 0`: every
/// monochromatic edge costs `exp(-∞) = 0`, and a configuration with none
/// has energy 0, whose factor is 1 (`0 · ∞ = 0` in the exponent).
fn zero_temperature_weight(monochromatic: usize) -> u128 {
    u128::from(monochromatic == 0)
}

/// `lim_{β→∞} Z` for `J = -1`: the literal sum of zero-temperature
/// Boltzmann factors over all `q^n` configurations.
pub fn zero_temperature_antiferromagnetic(g: &Graph, q: u32, limits: &Limits) -> Result<u128> {
    limits.check_colorings(q as u64, g.vertex_count())?;
    let mut total = 0u128;
    for_each_configuration(g.vertex_count(), q, |s| {
        total += zero_temperature_weight(monochromatic_edges(g, s));
    });
    Ok(total)
}

/// `ρ(R, σ_R)`: the signed sum over connected spanning subgraphs of `G|R`
/// whose edges are all monochromatic under `sigma_r`. `sigma_r` lists the
/// spins of `R` in increasing vertex order.
pub fn rho(g: &Graph, r: VertexSet, sigma_r: &[u32], limits: &Limits) -> Result<i64> {
    if r.len() < 2 {
        return Err(Error::SubsetTooSmall);
    }
    assert_eq!(sigma_r.len(), r.len(), "one spin per vertex of R");
    let (sub, _) = g.restrict(r);
    let mono = sub
        .all_edges()
        .iter()
        .filter(|&id| {
            let e = sub.edge(id);
            sigma_r[e.u] == sigma_r[e.v]
        })
        .collect();
    let mut total = 0i64;
    for_each_spanning_subgraph(&sub, mono, limits, |es, k| {
        if k == 1 {
            total += if es.len() % 2 == 0 { 1 } else { -1 };
        }
    })?;
    Ok(total)
}

/// `sum over σ_R in [q]^R of ρ(R, σ_R)`, literally.
pub fn rho_total(g: &Graph, r: VertexSet, q: u32, limits: &Limits) -> Result<BigInt> {
    limits.check_colorings(q as u64, r.len())?;
    let mut total = BigInt::zero();
    let mut err = None;
    for_each_configuration(r.len(), q, |s| match rho(g, r, s, limits) {
        Ok(v) => total += v,
        Err(e) => err = Some(e),
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayerCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

/// Checks `sum_σ ρ(R, σ) = q · a_R` when `G|R` is connected, and `= 0`
/// otherwise.
pub fn check_mayer_identity(g: &Graph, r: VertexSet, q: u32, limits: &Limits) -> Result<MayerCheck> {
    let lhs = rho_total(g, r, q, limits)?;
    let rhs = match ConnectedSubset::new(g, r) {
        Ok(cs) => BigInt::from(q) * polymer::activity(g, cs, limits)?.numerator,
        Err(_) => BigInt::zero(),
    };
    let equal = lhs == rhs;
    Ok(MayerCheck { lhs, rhs, equal })
}

/// `P(q)` assembled from the Mayer expansion before the reduction to
/// connected subsets: families of disjoint subsets `R` with `|R| >= 2`
/// (connected or not), each weighted by its literal spin sum, and a factor
/// `q` per uncovered vertex.
pub fn mayer_assembly(g: &Graph, q: u32, limits: &Limits) -> Result<BigInt> {
    limits.check_vertices(g)?;
    let mut weight: HashMap<VertexSet, BigInt> = HashMap::new();
    for r in g.vertices().subsets() {
        if r.len() >= 2 {
            weight.insert(r, rho_total(g, r, q, limits)?);
        }
    }
    fn rec(
        free: VertexSet,
        q: u32,
        weight: &HashMap<VertexSet, BigInt>,
        memo: &mut HashMap<VertexSet, BigInt>,
    ) -> BigInt {
        let Some(v) = free.first() else {
            return BigInt::from(1);
        };
        if let Some(hit) = memo.get(&free) {
            return hit.clone();
        }
        let mut rest = free;
        rest.remove(v);
        let mut acc = BigInt::from(q) * rec(rest, q, weight, memo);
        for r in rest.subsets() {
            if r.is_empty() {
                continue;
            }
            let block = r.with(v);
            let w = &weight[&block];
            if !w.is_zero() {
                acc += w * rec(free.difference(block), q, weight, memo);
            }
        }
        memo.insert(free, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    Ok(rec(g.vertices(), q, &weight, &mut memo))
}
