//! Generalized Sierpinski graphs and injective colorings.
//!
//! The library builds `S_G^n` for an arbitrary finite simple base graph `G`,
//! validates injective vertex and edge colorings, reduces both coloring
//! problems to proper coloring of derived conflict graphs, solves those
//! exactly at desk scale, and implements the constructive lifts that extend
//! small certificates to arbitrary dimension.

pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod repro;
pub mod s3;
pub mod sierpinski;
pub mod solver;

pub use error::Error;
pub use graph::Graph;
pub use sierpinski::{Materialized, SierpinskiGraph, Word};
