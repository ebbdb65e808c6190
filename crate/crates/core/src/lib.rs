//! Large 2-regular subgraphs of subcubic multigraphs.
//!
//! Every subcubic multigraph on `n` vertices with `m` edges and `c` cut-edges
//! has a 2-regular subgraph omitting at most `max{0, ⌊(d + c - 1)/2⌋}`
//! vertices, where `d = 3n - 2m`. [`extract`] builds such a subgraph together
//! with a [`BoundCertificate`]; the other modules provide the matching
//! machinery it runs on, generators for the graphs where the bound is tight,
//! and an exhaustive oracle for checking all of it on small graphs.

pub mod error;
pub mod format;
pub mod graph;
pub mod matching;
pub mod random;
pub mod structure;
pub mod suppress;
pub mod extract;
pub mod families;
pub mod oracle;
pub mod casestudy;
pub mod dot;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
pub use format::{parse_multigraph, serialize_multigraph};
pub use graph::{EdgeSet, InducedSubgraph, Multigraph, VertexSet};
pub use extract::{extract, BoundCertificate, TwoRegularSubgraph};
