//! Exact anti-Ramsey numbers `ar(K_{n₁,…,n_r}, K_k)`: closed formulas,
//! extremal constructions, blow-ups, and exhaustive search.
//!
//! `no_std` with `alloc`. Everything here is deterministic; the companion
//! `antiramsey` crate adds threads, file formats and the command line.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod coloring;
pub mod construct;
pub mod dirac;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod partition;
pub mod search;
pub mod spec;
pub mod theorem6;

pub use coloring::{Color, ColorClassification, ColoredGraph};
pub use error::{Error, Result};
pub use formulas::{ArResult, Method};
pub use graph::{EdgeId, Graph, Vertex};
pub use spec::PartiteSpec;
