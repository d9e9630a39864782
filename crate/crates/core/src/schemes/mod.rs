//! Partition schemes: maps from each spanning tree `τ` of a restriction
//! `G|R` to a connected spanning supergraph `m(τ)` such that the intervals
//! `[τ, m(τ)]` partition all connected spanning subgraphs of `G|R`.
//!
//! A scheme's image of a tree is always taken on the restriction of the
//! graph to the tree's own vertex set, so the same tree gets the same image
//! in every graph whose restriction to those vertices agrees.

mod minimal_tree;
mod penrose;
mod penrose_identity;
mod validate;

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use minimal_tree::{minimal_tree_map, tree_avoids_induced_broken_circuits, MinimalTree};
pub use penrose::{penrose_map, Penrose};
pub use penrose_identity::{check_penrose_identity, PenroseCheck, WeightAssignment};
pub use validate::{validate_scheme, ValidationReport, Violation};

use crate::error::{Error, Result};
use crate::graph::{catalog, enumerate_connected_subsets, EdgeSet, Graph, Limits, Tree};

pub trait PartitionScheme: Send + Sync {
    fn name(&self) -> &str;

    /// `m(τ)` as an edge set of `g`, computed on `g` restricted to the
    /// vertices of `tree`.
    fn image(&self, g: &Graph, tree: &Tree) -> EdgeSet;
}

/// The degenerate map `m(τ) = τ`. Not a partition scheme on any graph with a
/// cycle; useful for exercising the validator.
pub struct IdentityMap;

impl PartitionScheme for IdentityMap {
    fn name(&self) -> &str {
        "identity"
    }

    fn image(&self, _g: &Graph, tree: &Tree) -> EdgeSet {
        tree.edges()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    MinimalTree,
    Penrose,
    Custom,
}

/// A partition scheme that has been checked against the partition property.
///
/// The built-in schemes are checked once per process; custom maps are checked
/// on every restriction of each graph they are used on, through
/// [`SchemeMap::ensure_valid_for`].
#[derive(Clone)]
pub struct SchemeMap {
    kind: SchemeKind,
    map: Arc<dyn PartitionScheme>,
    validated: Arc<Mutex<HashSet<Graph>>>,
}

impl fmt::Debug for SchemeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SchemeMap").field("kind", &self.kind).field("name", &self.name()).finish()
    }
}

/// Largest catalog size the built-in self-check runs over.
const SELF_CHECK_VERTICES: usize = 6;

fn self_check(map: &dyn PartitionScheme) -> Result<()> {
    let limits = Limits::default();
    for g in catalog::connected_graphs_up_to(SELF_CHECK_VERTICES) {
        if g.vertex_count() < 2 {
            continue;
        }
        let report = validate_scheme(&g, map, &limits)?;
        if let Some(v) = report.violation {
            return Err(Error::SchemeInvalid {
                scheme: map.name().to_string(),
                reason: format!("{v} on {g:?}"),
            });
        }
    }
    Ok(())
}

impl SchemeMap {
    fn wrap(kind: SchemeKind, map: Arc<dyn PartitionScheme>) -> Self {
        SchemeMap { kind, map, validated: Arc::new(Mutex::new(HashSet::new())) }
    }

    pub fn minimal_tree() -> Self {
        Self::wrap(SchemeKind::MinimalTree, Arc::new(MinimalTree))
    }

    /// The Penrose scheme, available only after it passes the partition check
    /// on every connected graph with at most six vertices.
    pub fn penrose() -> Result<Self> {
        static CHECK: OnceLock<Result<()>> = OnceLock::new();
        CHECK.get_or_init(|| self_check(&Penrose)).clone()?;
        Ok(Self::wrap(SchemeKind::Penrose, Arc::new(Penrose)))
    }

    /// A user-supplied map. It is validated lazily, per graph.
    pub fn custom(map: impl PartitionScheme + 'static) -> Self {
        Self::wrap(SchemeKind::Custom, Arc::new(map))
    }

    /// `minimal-tree`, `penrose`, or `identity` (the deliberately invalid map).
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "minimal-tree" => Ok(Self::minimal_tree()),
            "penrose" => Self::penrose(),
            "identity" => Ok(Self::custom(IdentityMap)),
            _ => Err(Error::UnknownScheme(name.to_string())),
        }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn name(&self) -> &str {
        self.map.name()
    }

    pub fn as_map(&self) -> &dyn PartitionScheme {
        self.map.as_ref()
    }

    pub fn image(&self, g: &Graph, tree: &Tree) -> EdgeSet {
        self.map.image(g, tree)
    }

    /// Checks the partition property on every connected restriction of `g`
    /// (built-in schemes pass trivially).
    pub fn ensure_valid_for(&self, g: &Graph, limits: &Limits) -> Result<()> {
        if self.kind != SchemeKind::Custom {
            return Ok(());
        }
        if self.validated.lock().unwrap().contains(g) {
            return Ok(());
        }
        for r in enumerate_connected_subsets(g, limits)? {
            let (sub, _) = g.restrict(r.vertices());
            let report = validate_scheme(&sub, self.as_map(), limits)?;
            if let Some(v) = report.violation {
                return Err(Error::SchemeInvalid {
                    scheme: self.name().to_string(),
                    reason: format!("{v} on restriction to {:?}", r.vertices()),
                });
            }
        }
        self.validated.lock().unwrap().insert(g.clone());
        Ok(())
    }
}

/// `m(τ) = τ`.
pub fn is_scheme_closed(tree: &Tree, g: &Graph, m: &SchemeMap) -> bool {
    m.image(g, tree) == tree.edges()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::complete;

    #[test]
    fn closedness_on_k3_minimal_tree() {
        let k3 = complete(3);
        let m = SchemeMap::minimal_tree();
        let t12 = Tree::new(&k3, EdgeSet::from_iter([0, 1])).unwrap();
        let t13 = Tree::new(&k3, EdgeSet::from_iter([0, 2])).unwrap();
        assert!(!is_scheme_closed(&t12, &k3, &m));
        assert!(is_scheme_closed(&t13, &k3, &m));
    }

    #[test]
    fn single_edge_tree_is_closed() {
        // restriction to the endpoints of edge {0,1} of C4 is just that edge
        let g = catalog::cycle(4);
        let t = Tree::new(&g, EdgeSet::singleton(g.edge_id(0, 1).unwrap())).unwrap();
        for m in [SchemeMap::minimal_tree(), SchemeMap::penrose().unwrap()] {
            assert!(is_scheme_closed(&t, &g, &m));
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(SchemeMap::by_name("minimal-tree").unwrap().kind(), SchemeKind::MinimalTree);
        assert_eq!(SchemeMap::by_name("penrose").unwrap().kind(), SchemeKind::Penrose);
        assert!(matches!(SchemeMap::by_name("nope"), Err(Error::UnknownScheme(_))));
    }

    #[test]
    fn identity_map_is_rejected_on_cyclic_graphs() {
        let m = SchemeMap::by_name("identity").unwrap();
        assert!(m.ensure_valid_for(&catalog::path(4), &Limits::default()).is_ok());
        assert!(matches!(
            m.ensure_valid_for(&complete(3), &Limits::default()),
            Err(Error::SchemeInvalid { .. })
        ));
    }
}
