//! Combinatorics of minimal primes of binomial edge ideals.
//!
//! For a simple graph `G` on `[n]` the minimal primes of `J_G` are indexed
//! by the sets `T` with the cut-point property. This crate enumerates them,
//! derives height, Krull dimension and the unmixed property, and evaluates
//! closed-form criteria for generalized block graphs, joins and coronas.

pub mod cliques;
pub mod error;
pub mod gen;
pub mod genblock;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod products;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use spectrum::{CutSet, Spectrum, Status, Verdict};
