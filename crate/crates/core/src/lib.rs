//! Orientable sequences over `Z_k`.
//!
//! An orientable sequence of order `n` is a periodic sequence in which every
//! length-`n` window occurs at most once per period, reading in either
//! direction. This crate builds them from antisymmetric Eulerian subgraphs
//! of de Bruijn digraphs, evaluates upper bounds on their period, and
//! verifies candidate sequences by brute force.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod golden;
pub mod graph;
pub mod oracle;
pub mod tuples;

pub use error::{Error, Result};
