//! Injective hulls of finite connected graphs, the Helly-gap alpha(G),
//! related metric invariants, and exhaustive verification of the
//! eccentricity theorems that the gap parameterizes.
//!
//! The hull H(G) is built by enumerating extremal integer functions;
//! alpha(G) falls out as the largest hull-distance from any hull vertex
//! to a real vertex, cross-checked by a brute-force disk oracle on small
//! graphs. The suite module binds everything into one reproducible run.

pub mod error;
pub mod gap;
pub mod generators;
pub mod graph;
pub mod hull;
pub mod invariants;
pub mod io;
pub mod report;
pub mod suite;
pub mod terrain;

pub use error::{Error, Result};
