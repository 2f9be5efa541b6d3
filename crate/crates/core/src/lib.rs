//! Exact independence polynomials, trees of stable paths, and the
//! identities connecting them.

pub mod cli;
pub mod families;
pub mod graph;
pub mod independence;
pub mod poly;
pub mod stable_path;
pub mod tree;
pub mod verify;

pub use graph::{Graph, GraphError, ParseError, Vertex, VertexSubset};
pub use independence::{independence_polynomial, independence_polynomial_bruteforce};
pub use poly::{Poly, PolyError};
pub use stable_path::{DeepDecision, EdgeLabeling, FactorList, StablePathError};
pub use tree::{tree_isomorphic, RootedTree};
