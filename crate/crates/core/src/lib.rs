//! Laboratory for coupling-based Hamiltonicity arguments on random
//! (hyper)graphs.
//!
//! The crate samples the binomial random hypergraph and its directed and
//! edge-colored relatives, decides Hamiltonicity exactly on small
//! instances, and implements the interpolation chains, multi-round
//! exposures, contractions and lifts that relate the models to each other.
//!
//! - [`structures`]: core types, seeded generators and witness verifiers.
//! - [`oracles`]: complete search for loose, directed loose and rainbow
//!   Hamilton cycles.
//! - [`coupling`]: interpolation chains between the undirected and
//!   directed models, with an exact enumeration engine.
//! - [`reductions`]: exposure algebra, contraction and lift machinery and
//!   the end-to-end pipelines.
//! - [`experiments`]: Monte Carlo estimation, dominance tests, sweeps and
//!   the exact dominance table.

pub mod coupling;
pub mod error;
pub mod experiments;
pub mod oracles;
pub mod reductions;
pub mod structures;

pub use error::{Error, Result};
