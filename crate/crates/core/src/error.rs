use thiserror::Error;

use crate::graph::EdgeSet;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {{{0}, {1}}}")]
    ParallelEdge(usize, usize),
    #[error("edge {{{0}, {1}}} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("bitset representation supports at most {max} {what}, got {got}")]
    Capacity { what: &'static str, got: usize, max: usize },
    #[error("edge order must be a permutation of the {0} edges")]
    BadEdgeOrder(usize),

    #[error("graph too large for enumeration: {what} = {got} exceeds limit {limit}")]
    GraphTooLarge { what: &'static str, got: usize, limit: usize },
    #[error("budget exceeded: {what} = {got} exceeds budget {budget}")]
    BudgetExceeded { what: &'static str, got: u128, budget: u128 },

    #[error("graph is not connected")]
    NotConnected,
    #[error("edge set {0:?} is not a tree")]
    NotATree(EdgeSet),
    #[error("vertex subset must have at least two vertices")]
    SubsetTooSmall,
    #[error("vertex {0} is not in the tree")]
    VertexNotInTree(usize),
    #[error("tree does not span the vertex set of the graph")]
    TreeDoesNotSpan,

    #[error("partition scheme `{scheme}` is invalid: {reason}")]
    SchemeInvalid { scheme: String, reason: String },
    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),
    #[error("weight assignment covers {got} edges, graph has {expected}")]
    WeightMismatch { got: usize, expected: usize },
    #[error("partition function needs a finite inverse temperature")]
    InfiniteBeta,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
