use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::graph::{Graph, Limits};
use crate::IntPolynomial;

/// Working form: adjacency rows as bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Adj(Vec<u64>);

impl Adj {
    fn n(&self) -> usize {
        self.0.len()
    }

    fn edge_count(&self) -> u32 {
        self.0.iter().map(|r| r.count_ones()).sum::<u32>() / 2
    }

    fn remove_vertex(&self, v: usize) -> Adj {
        let squeeze = |row: u64| {
            let low = row & ((1u64 << v) - 1);
            let high = row.checked_shr(v as u32 + 1).unwrap_or(0) << v;
            low | high
        };
        Adj(self.0.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &r)| squeeze(r)).collect())
    }

    fn delete_edge(&self, u: usize, v: usize) -> Adj {
        let mut rows = self.0.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Adj(rows)
    }

    /// Merges `v` into `u`; parallel edges collapse, the loop disappears.
    fn contract(&self, u: usize, v: usize) -> Adj {
        let mut rows = self.0.clone();
        let merged = (rows[u] | rows[v]) & !(1 << u) & !(1 << v);
        rows[u] = merged;
        for (w, row) in rows.iter_mut().enumerate() {
            if merged >> w & 1 == 1 {
                *row |= 1 << u;
            }
        }
        Adj(rows).remove_vertex(v)
    }

    /// Relabels vertices sorted by (degree, sorted neighbour degrees). The key
    /// identifies the labeled graph exactly, so memo hits are always sound;
    /// the relabeling only makes isomorphic graphs collide more often.
    fn normalized(&self) -> Adj {
        let n = self.n();
        let deg: Vec<u32> = self.0.iter().map(|r| r.count_ones()).collect();
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..n).filter(|&w| self.0[v] >> w & 1 == 1).map(|w| deg[w]).collect();
                nd.sort_unstable();
                (deg[v], nd, v)
            })
            .collect();
        sig.sort();
        let mut new_of = vec![0; n];
        for (i, s) in sig.iter().enumerate() {
            new_of[s.2] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            for w in 0..n {
                if self.0[v] >> w & 1 == 1 {
                    rows[new_of[v]] |= 1 << new_of[w];
                }
            }
        }
        Adj(rows)
    }
}

fn q_poly() -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::from(0), BigInt::from(1)])
}

fn solve(g: &Adj, memo: &mut HashMap<Adj, IntPolynomial>) -> IntPolynomial {
    let n = g.n();
    if g.edge_count() == 0 {
        return IntPolynomial::monomial(BigInt::from(1), n);
    }
    // isolated vertex: factor q
    if let Some(v) = (0..n).find(|&v| g.0[v] == 0) {
        return &q_poly() * &solve(&g.remove_vertex(v), memo);
    }
    let key = g.normalized();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let g = &key;
    // leaf: factor (q - 1)
    let p = if let Some(v) = (0..n).find(|&v| g.0[v].count_ones() == 1) {
        let qm1 = IntPolynomial::new(vec![BigInt::from(-1), BigInt::from(1)]);
        &qm1 * &solve(&g.remove_vertex(v), memo)
    } else {
        let u = (0..n).max_by_key(|&v| g.0[v].count_ones()).unwrap();
        let v = g.0[u].trailing_zeros() as usize;
        let del = solve(&g.delete_edge(u, v), memo);
        let con = solve(&g.contract(u, v), memo);
        &del - &con
    };
    memo.insert(key, p.clone());
    p
}

/// `P(G) = P(G - e) - P(G / e)`, memoized within the call.
pub fn deletion_contraction(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    limits.check_vertices(g)?;
    let mut rows = vec![0u64; g.vertex_count()];
    for e in g.edges() {
        rows[e.u] |= 1 << e.v;
        rows[e.v] |= 1 << e.u;
    }
    let mut memo = HashMap::new();
    Ok(solve(&Adj(rows), &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{complete, cycle};

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn textbook_values() {
        let l = Limits::default();
        assert_eq!(deletion_contraction(&complete(2), &l).unwrap(), poly(&[0, -1, 1]));
        assert_eq!(deletion_contraction(&complete(3), &l).unwrap(), poly(&[0, 2, -3, 1]));
        assert_eq!(deletion_contraction(&cycle(4), &l).unwrap(), poly(&[0, -3, 6, -4, 1]));
    }

    #[test]
    fn complete_graph_is_falling_factorial() {
        let l = Limits::default();
        let mut expected = poly(&[1]);
        for k in 0..7 {
            expected = &expected * &poly(&[-k, 1]);
        }
        assert_eq!(deletion_contraction(&complete(7), &l).unwrap(), expected);
    }

    #[test]
    fn contraction_merges_neighbourhoods() {
        // path 0-1-2 plus edge 0-2 (triangle); contract 0,1
        let a = Adj(vec![0b110, 0b101, 0b011]);
        let c = a.contract(0, 1);
        assert_eq!(c.0, vec![0b10, 0b01]);
    }
}
