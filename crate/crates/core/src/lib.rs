//! Double Hall property (dHp) bipartite graphs.
//!
//! A bipartite graph `G(A, B)` has the double Hall property when `|A| >= 2`
//! and every `X ⊆ A` with `|X| >= 2` has at least `|X|` vertices in `B` with
//! two or more neighbors in `X`. This crate verifies the property, builds
//! 2-factors covering `A`, searches for single cycles covering `A` through
//! the equivalent rainbow Hamiltonian cycle problem, and generates and
//! measures extremal instances.

pub mod cli;
pub mod dot;
pub mod error;
pub mod extremal;
pub mod factors;
pub mod format;
pub mod graph;
pub mod matching;
pub mod rainbow;
pub mod sample;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, ColoredMultigraph, CycleFamily, Graph, Mask};
