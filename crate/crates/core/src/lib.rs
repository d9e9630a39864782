//! Exact chromatic polynomials of small simple graphs, computed along several
//! independent routes so that each can be checked against the others:
//!
//! * the subgraph expansion `sum_E (-1)^|E| q^k(E)`,
//! * Whitney's broken-circuit-free forests,
//! * forests of trees fixed by a partition scheme (minimal-tree or Penrose),
//! * the polymer gas obtained from the zero-temperature Potts antiferromagnet,
//! * deletion-contraction and brute-force coloring counts.

pub mod chromatic;
pub mod error;
pub mod graph;
pub mod polymer;
pub mod polynomial;
pub mod potts;
pub mod scalar;
pub mod schemes;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use graph::{ConnectedSubset, EdgeSet, Forest, Graph, Limits, Tree, VertexSet};
pub use polynomial::{InvQPolynomial, Polynomial};
pub use scalar::{Scalar, FLOAT_TOLERANCE};
pub use schemes::{PartitionScheme, SchemeKind, SchemeMap};

/// Chromatic polynomials: integer coefficients in `q`.
pub type IntPolynomial = Polynomial<BigInt>;
/// The polymer partition function: integer coefficients in `1/q`.
pub type XiPolynomial = InvQPolynomial<BigInt>;
/// Edge weights in exact mode.
pub type ExactWeights = schemes::WeightAssignment<BigRational>;
/// Edge weights in floating mode.
pub type FloatWeights = schemes::WeightAssignment<f64>;
pub type PottsParams = potts::PottsParameters<f64>;
