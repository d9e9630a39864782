//! Small worked examples, each pinned to a literal value that was first
//! produced by an independent oracle (brute-force colorings, literal spin
//! sums or deletion-contraction) and then frozen here.

mod common;

use chromatic_core::chromatic::{
    broken_circuit_free_forests, chromatic_brute, chromatic_classical, chromatic_scheme, chromatic_whitney,
    count_proper_colorings, deletion_contraction, enumerate_scheme_forests, forest_level_counts,
};
use chromatic_core::graph::catalog::{complete, path, star};
use chromatic_core::graph::{
    broken_circuits, component_count, connected_spanning_subgraphs, enumerate_connected_subsets,
    enumerate_forests, enumerate_spanning_trees, is_broken_circuit_free, tree_path,
};
use chromatic_core::polymer::{activity, activity_via_scheme, chromatic_via_polymer, xi};
use chromatic_core::potts::{
    check_mayer_identity, hamiltonian, partition_function, rho, zero_temperature_antiferromagnetic,
    InverseTemperature, PottsParameters, SpinConfiguration,
};
use chromatic_core::schemes::{
    check_penrose_identity, is_scheme_closed, minimal_tree_map, penrose_map, validate_scheme, Violation,
    WeightAssignment,
};
use chromatic_core::{ConnectedSubset, EdgeSet, Graph, Limits, SchemeMap, Tree, VertexSet};
use common::poly;
use num_bigint::BigInt;
use num_rational::BigRational;

fn l() -> Limits {
    Limits::default()
}

fn es(ids: &[usize]) -> EdgeSet {
    ids.iter().copied().collect()
}

fn vs(ids: &[usize]) -> VertexSet {
    ids.iter().copied().collect()
}

/// K3 with e1 = 0-1 < e2 = 1-2 < e3 = 0-2.
fn k3() -> Graph {
    Graph::with_ordered_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

/// C4 with e1 = 0-1 < e2 = 1-2 < e3 = 2-3 < e4 = 3-0.
fn c4() -> Graph {
    Graph::with_ordered_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

fn tree(g: &Graph, ids: &[usize]) -> Tree {
    Tree::new(g, es(ids)).unwrap()
}

#[test]
fn component_counts() {
    assert_eq!(component_count(&k3(), EdgeSet::EMPTY), 3);
    assert_eq!(component_count(&k3(), k3().all_edges()), 1);
    let g = Graph::new(3, &[(0, 1)]).unwrap();
    assert_eq!(component_count(&g, g.all_edges()), 2);
}

#[test]
fn restrictions() {
    let (r, _) = k3().restrict(vs(&[0, 2]));
    assert_eq!(r, complete(2));
    assert_eq!(c4().restrict(c4().vertices()).0, c4());
    let (r, old) = c4().restrict(vs(&[0, 2]));
    assert_eq!((r.vertex_count(), r.edge_count(), old), (2, 0, vec![0, 2]));
}

#[test]
fn enumeration_sizes() {
    assert_eq!(enumerate_connected_subsets(&complete(2), &l()).unwrap().len(), 1);
    assert_eq!(enumerate_connected_subsets(&k3(), &l()).unwrap().len(), 4);
    assert_eq!(enumerate_connected_subsets(&Graph::edgeless(2).unwrap(), &l()).unwrap().len(), 0);
    assert_eq!(connected_spanning_subgraphs(&complete(2), &l()).unwrap().len(), 1);
    assert_eq!(connected_spanning_subgraphs(&k3(), &l()).unwrap().len(), 4);
    assert_eq!(connected_spanning_subgraphs(&c4(), &l()).unwrap().len(), 5);
    assert_eq!(enumerate_spanning_trees(&k3(), &l()).unwrap().len(), 3);
    assert_eq!(enumerate_spanning_trees(&complete(2), &l()).unwrap().len(), 1);
    assert_eq!(enumerate_spanning_trees(&c4(), &l()).unwrap().len(), 4);
    assert_eq!(enumerate_forests(&complete(2), &l()).unwrap().len(), 2);
    assert_eq!(enumerate_forests(&k3(), &l()).unwrap().len(), 7);
    assert_eq!(enumerate_forests(&c4(), &l()).unwrap().len(), 15);
}

#[test]
fn tree_paths() {
    let p = path(3);
    let t = tree(&p, &[0, 1]);
    assert_eq!(tree_path(&p, &t, 0, 2).unwrap(), vec![0, 1]);
    let s = star(3);
    let t = tree(&s, &[0, 1]);
    let ab: Vec<(usize, usize)> =
        tree_path(&s, &t, 1, 2).unwrap().iter().map(|&id| (s.edge(id).u, s.edge(id).v)).collect();
    assert_eq!(ab, vec![(0, 1), (0, 2)]);
    assert_eq!(tree_path(&p, &t, 1, 0).unwrap().len(), 1);
}

#[test]
fn broken_circuit_examples() {
    assert_eq!(broken_circuits(&k3(), &l()).unwrap(), vec![es(&[0, 1])]);
    assert!(broken_circuits(&star(5), &l()).unwrap().is_empty());
    assert_eq!(broken_circuits(&c4(), &l()).unwrap(), vec![es(&[0, 1, 2])]);
    let bc = broken_circuits(&k3(), &l()).unwrap();
    assert!(!is_broken_circuit_free(es(&[0, 1]), &bc));
    assert!(is_broken_circuit_free(es(&[0, 2]), &bc));
    assert!(is_broken_circuit_free(EdgeSet::EMPTY, &bc));
}

#[test]
fn scheme_maps() {
    let g = k3();
    assert_eq!(minimal_tree_map(&g, &tree(&g, &[0, 1])).unwrap(), es(&[0, 1, 2]));
    assert_eq!(minimal_tree_map(&g, &tree(&g, &[0, 2])).unwrap(), es(&[0, 2]));
    let p = path(4);
    assert_eq!(minimal_tree_map(&p, &tree(&p, &[0, 1, 2])).unwrap(), es(&[0, 1, 2]));

    let k2 = complete(2);
    assert_eq!(penrose_map(&k2, &tree(&k2, &[0])).unwrap(), es(&[0]));
    // root 0, both leaves at depth 1: the edge between them is added
    assert_eq!(penrose_map(&g, &tree(&g, &[0, 2])).unwrap(), es(&[0, 1, 2]));
    assert_eq!(penrose_map(&p, &tree(&p, &[0, 1, 2])).unwrap(), es(&[0, 1, 2]));
}

#[test]
fn validation_examples() {
    let report = validate_scheme(&k3(), SchemeMap::minimal_tree().as_map(), &l()).unwrap();
    assert!(report.is_valid());
    assert_eq!((report.subgraphs, report.trees), (4, 3));
    for name in ["minimal-tree", "penrose", "identity"] {
        let m = SchemeMap::by_name(name).unwrap();
        assert!(validate_scheme(&complete(2), m.as_map(), &l()).unwrap().is_valid());
    }
    let broken = validate_scheme(&k3(), SchemeMap::by_name("identity").unwrap().as_map(), &l()).unwrap();
    assert_eq!(broken.violation, Some(Violation::Coverage { subgraph: es(&[0, 1, 2]), times: 0 }));
}

#[test]
fn closed_trees() {
    let m = SchemeMap::minimal_tree();
    let g = k3();
    assert!(!is_scheme_closed(&tree(&g, &[0, 1]), &g, &m));
    assert!(is_scheme_closed(&tree(&g, &[0, 2]), &g, &m));
    assert!(is_scheme_closed(&tree(&c4(), &[3]), &c4(), &m));
}

#[test]
fn penrose_identity_examples() {
    let m = SchemeMap::minimal_tree();
    let minus_one = WeightAssignment::constant(&k3(), BigRational::from_integer(BigInt::from(-1)));
    let c = check_penrose_identity(&k3(), &minus_one, &m, &l()).unwrap();
    assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigRational::from_integer(2.into()), BigRational::from_integer(2.into())));
    let five = WeightAssignment::constant(&complete(2), BigRational::from_integer(BigInt::from(5)));
    let c = check_penrose_identity(&complete(2), &five, &m, &l()).unwrap();
    assert!(c.equal);
    assert_eq!(c.lhs, BigRational::from_integer(5.into()));
}

#[test]
fn chromatic_examples() {
    let k3p = poly(&[0, 2, -3, 1]);
    let c4p = poly(&[0, -3, 6, -4, 1]);
    for (g, want) in [(complete(2), poly(&[0, -1, 1])), (k3(), k3p.clone()), (c4(), c4p.clone())] {
        assert_eq!(chromatic_brute(&g, &l()).unwrap(), want);
        assert_eq!(deletion_contraction(&g, &l()).unwrap(), want);
        assert_eq!(chromatic_classical(&g, &l()).unwrap(), want);
        assert_eq!(chromatic_whitney(&g, &l()).unwrap(), want);
        assert_eq!(chromatic_via_polymer(&g, &l()).unwrap(), want);
        for m in [SchemeMap::minimal_tree(), SchemeMap::penrose().unwrap()] {
            assert_eq!(chromatic_scheme(&g, &m, &l()).unwrap(), want);
        }
    }
    assert_eq!(k3p.to_string(), "q^3 - 3q^2 + 2q");
    assert_eq!(c4p.to_string(), "q^4 - 4q^3 + 6q^2 - 3q");
    assert_eq!(chromatic_classical(&Graph::edgeless(4).unwrap(), &l()).unwrap(), poly(&[0, 0, 0, 0, 1]));
    // q (q - 1)^4
    assert_eq!(chromatic_whitney(&star(5), &l()).unwrap(), poly(&[0, 1, -4, 6, -4, 1]));
}

#[test]
fn forest_examples() {
    let m = SchemeMap::minimal_tree();
    let got: Vec<EdgeSet> = enumerate_scheme_forests(&k3(), &m, &l()).unwrap().iter().map(|f| f.edges()).collect();
    let mut want = vec![EdgeSet::EMPTY, es(&[0]), es(&[1]), es(&[2]), es(&[0, 2]), es(&[1, 2])];
    want.sort();
    assert_eq!(got, want);
    assert_eq!(broken_circuit_free_forests(&k3(), &l()).unwrap(), want);
    let c4_forests = enumerate_scheme_forests(&c4(), &m, &l()).unwrap();
    assert_eq!(c4_forests.len(), 14);
    assert!(c4_forests.iter().all(|f| f.edges() != es(&[0, 1, 2])));
    assert_eq!(enumerate_scheme_forests(&Graph::edgeless(3).unwrap(), &m, &l()).unwrap().len(), 1);
    for m in [SchemeMap::minimal_tree(), SchemeMap::penrose().unwrap()] {
        assert_eq!(forest_level_counts(&k3(), &m, &l()).unwrap().counts, vec![1, 3, 2]);
        assert_eq!(forest_level_counts(&c4(), &m, &l()).unwrap().counts, vec![1, 4, 6, 3]);
        assert_eq!(forest_level_counts(&complete(2), &m, &l()).unwrap().counts, vec![1, 1]);
    }
}

#[test]
fn coloring_examples() {
    assert_eq!(count_proper_colorings(&k3(), 3, &l()).unwrap(), 6);
    assert_eq!(count_proper_colorings(&complete(2), 1, &l()).unwrap(), 0);
    assert_eq!(count_proper_colorings(&c4(), 0, &l()).unwrap(), 0);
}

#[test]
fn polymer_examples() {
    let m = SchemeMap::minimal_tree();
    let cases = [(k3(), vec![0, 1], -1, 1), (k3(), vec![0, 1, 2], 2, 2), (c4(), vec![0, 1, 2, 3], -3, 3)];
    for (g, r, a, e) in cases {
        let r = ConnectedSubset::new(&g, vs(&r)).unwrap();
        let act = activity(&g, r, &l()).unwrap();
        assert_eq!((act.numerator.clone(), act.exponent), (BigInt::from(a), e));
        assert_eq!(activity_via_scheme(&g, r, &m, &l()).unwrap(), act);
    }
    let inv = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(xi(&complete(2), &l()).unwrap().coefficients(), inv(&[1, -1]).as_slice());
    assert_eq!(xi(&k3(), &l()).unwrap().coefficients(), inv(&[1, -3, 2]).as_slice());
    let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(xi(&two_k2, &l()).unwrap().coefficients(), inv(&[1, -2, 1]).as_slice());
    assert_eq!(xi(&k3(), &l()).unwrap().to_string(), "1 - 3/q + 2/q^2");
}

#[test]
fn potts_examples() {
    let k2 = complete(2);
    let same = SpinConfiguration::new(2, vec![1, 1]).unwrap();
    let diff = SpinConfiguration::new(2, vec![0, 1]).unwrap();
    assert_eq!(hamiltonian(&k2, &same, &1.0f64), -1.0);
    assert_eq!(hamiltonian(&k2, &diff, &7.5f64), 0.0);
    let all_equal = SpinConfiguration::new(3, vec![2, 2, 2]).unwrap();
    assert_eq!(hamiltonian(&k3(), &all_equal, &BigInt::from(-2)), BigInt::from(6));

    let p = |q, beta: f64, j| PottsParameters { q, beta: InverseTemperature::Finite(beta), coupling: j };
    let z = partition_function(&k2, &p(2, 1.0, 1.0), &l()).unwrap();
    assert!((z - (2.0 * std::f64::consts::E + 2.0)).abs() <= 1e-12);
    assert_eq!(partition_function(&c4(), &p(3, 0.0, 1.0), &l()).unwrap(), 81.0);
    let z = partition_function(&k2, &p(1, 0.8, 1.0), &l()).unwrap();
    assert!((z - 0.8f64.exp()).abs() <= 1e-12);

    assert_eq!(zero_temperature_antiferromagnetic(&k3(), 3, &l()).unwrap(), 6);
    assert_eq!(zero_temperature_antiferromagnetic(&k2, 2, &l()).unwrap(), 2);
    assert_eq!(zero_temperature_antiferromagnetic(&k3(), 2, &l()).unwrap(), 0);

    assert_eq!(rho(&k2, k2.vertices(), &[1, 1], &l()).unwrap(), -1);
    assert_eq!(rho(&k2, k2.vertices(), &[0, 1], &l()).unwrap(), 0);
    assert_eq!(rho(&k3(), k3().vertices(), &[0, 0, 0], &l()).unwrap(), 2);

    let c = check_mayer_identity(&k3(), k3().vertices(), 3, &l()).unwrap();
    assert_eq!((c.lhs.clone(), c.rhs.clone(), c.equal), (BigInt::from(6), BigInt::from(6), true));
    let c = check_mayer_identity(&c4(), vs(&[0, 2]), 3, &l()).unwrap();
    assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigInt::from(0), BigInt::from(0)));
    let c = check_mayer_identity(&k2, k2.vertices(), 2, &l()).unwrap();
    assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigInt::from(-2), BigInt::from(-2)));
}
