use std::collections::HashMap;
use std::fmt;

use super::PartitionScheme;
use crate::error::{Error, Result};
use crate::graph::{connected_spanning_subgraphs, enumerate_spanning_trees, EdgeSet, Graph, Limits};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `m(τ)` does not contain `τ`.
    NotSuperset { tree: EdgeSet, image: EdgeSet },
    /// `m(τ)` uses edges outside the graph.
    OutsideGraph { tree: EdgeSet, image: EdgeSet },
    /// A connected spanning subgraph lies in `times` intervals instead of one.
    Coverage { subgraph: EdgeSet, times: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSuperset { tree, image } => {
                write!(f, "image {image:?} of tree {tree:?} does not contain the tree")
            }
            Violation::OutsideGraph { tree, image } => {
                write!(f, "image {image:?} of tree {tree:?} leaves the graph")
            }
            Violation::Coverage { subgraph, times } => {
                write!(f, "connected spanning subgraph {subgraph:?} covered {times} times")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub scheme: String,
    pub subgraphs: usize,
    pub trees: usize,
    /// First violation found, `None` when the intervals partition the
    /// connected spanning subgraphs.
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively checks that `[τ, m(τ)]` over the spanning trees `τ` of
/// `g_restricted` is a disjoint cover of its connected spanning subgraphs.
pub fn validate_scheme(
    g_restricted: &Graph,
    m: &dyn PartitionScheme,
    limits: &Limits,
) -> Result<ValidationReport> {
    let g = g_restricted;
    if g.vertex_count() < 2 {
        return Err(Error::NotConnected);
    }
    let subgraphs = connected_spanning_subgraphs(g, limits)?;
    let trees = enumerate_spanning_trees(g, limits)?;
    let mut report = ValidationReport {
        scheme: m.name().to_string(),
        subgraphs: subgraphs.len(),
        trees: trees.len(),
        violation: None,
    };
    let mut cover: HashMap<EdgeSet, usize> = HashMap::with_capacity(subgraphs.len());
    for t in &trees {
        let image = m.image(g, t);
        if !t.edges().is_subset(image) {
            report.violation = Some(Violation::NotSuperset { tree: t.edges(), image });
            return Ok(report);
        }
        if !image.is_subset(g.all_edges()) {
            report.violation = Some(Violation::OutsideGraph { tree: t.edges(), image });
            return Ok(report);
        }
        for extra in image.difference(t.edges()).subsets() {
            *cover.entry(t.edges().union(extra)).or_default() += 1;
        }
    }
    report.violation = subgraphs.iter().find_map(|&s| {
        let times = cover.get(&s).copied().unwrap_or(0);
        (times != 1).then_some(Violation::Coverage { subgraph: s, times })
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::{IdentityMap, MinimalTree, Penrose};
    use super::*;
    use crate::graph::catalog::{complete, cycle};

    #[test]
    fn minimal_tree_on_k3() {
        let r = validate_scheme(&complete(3), &MinimalTree, &Limits::default()).unwrap();
        assert_eq!((r.subgraphs, r.trees), (4, 3));
        assert!(r.is_valid());
    }

    #[test]
    fn k2_any_scheme() {
        for m in [&MinimalTree as &dyn PartitionScheme, &Penrose, &IdentityMap] {
            assert!(validate_scheme(&complete(2), m, &Limits::default()).unwrap().is_valid());
        }
    }

    #[test]
    fn identity_map_leaves_the_triangle_uncovered() {
        let k3 = complete(3);
        let r = validate_scheme(&k3, &IdentityMap, &Limits::default()).unwrap();
        assert_eq!(r.violation, Some(Violation::Coverage { subgraph: k3.all_edges(), times: 0 }));
    }

    struct Everything;
    impl PartitionScheme for Everything {
        fn name(&self) -> &str {
            "everything"
        }
        fn image(&self, g: &Graph, tree: &crate::graph::Tree) -> EdgeSet {
            g.induced_edges(tree.vertex_set())
        }
    }

    #[test]
    fn overlapping_intervals_are_reported() {
        let r = validate_scheme(&cycle(4), &Everything, &Limits::default()).unwrap();
        assert!(matches!(r.violation, Some(Violation::Coverage { times: 4, .. })));
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(validate_scheme(&g, &MinimalTree, &Limits::default()), Err(Error::NotConnected));
    }
}
