//! Exact determinants, permanents and characteristic polynomials of the
//! adjacency and Laplacian matrices of oriented hypergraphs.
//!
//! Every quantity is computed two independent ways: as a signed count of
//! contributors (see [`contributors`] and [`coefficients`]) and by exact
//! integer linear algebra (see [`matrices`]). [`analysis`] builds the bound
//! checks, orientation sweeps and the Sachs basic-figure oracle on top, and
//! [`cli`] exposes all of it through the `ohg` binary.

pub mod analysis;
pub mod cli;
pub mod coefficients;
pub mod contributors;
pub mod error;
pub mod fixtures;
pub mod hypergraph;
pub mod matrices;
pub mod polynomial;

pub use error::{Error, Result};
pub use hypergraph::{HypergraphBuilder, OrientedHypergraph, Sign};
pub use matrices::IntMatrix;
pub use polynomial::IntPolynomial;

/// Caps that turn combinatorial blow-up into a clean error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_contributors: u64,
    pub max_incidences_sweep: usize,
    pub max_walk_length: usize,
    pub max_walks: u64,
    pub max_permanent_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_contributors: 10_000_000,
            max_incidences_sweep: 16,
            max_walk_length: 4,
            max_walks: 10_000_000,
            max_permanent_size: 20,
        }
    }
}
