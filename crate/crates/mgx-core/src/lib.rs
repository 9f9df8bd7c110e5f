//! Exact computation of the positive/negative inertia indices of mixed graphs.
//!
//! A mixed graph carries both undirected edges and arcs. Its Hermitian
//! adjacency matrix has entry 1 for an undirected edge, i / -i for an arc,
//! and 0 otherwise. This crate computes the inertia triple (p+, n-, eta) of
//! that matrix by two independent exact methods (Descartes' sign rule on the
//! integer characteristic polynomial, and Hermitian congruence elimination
//! over Gaussian rationals), evaluates the closed-form inertia results for
//! mixed cycles, unicyclic graphs and cactus-like graphs, and ships the
//! exhaustive verification suites that check every closed form against the
//! matrix computations.
//!
//! All arithmetic is exact; there are no floating-point eigenvalues anywhere.

pub mod classify;
pub mod elementary;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hermitian;
pub mod io;
pub mod matching;
pub mod suites;

mod fast;
mod gaussian;

pub use error::{Error, Result};
pub use gaussian::{GaussianInt, GaussianRational};
pub use graph::{BlockDecomposition, EdgeKind, MixedGraph, Relabeling};
pub use hermitian::{HermitianMatrix, Inertia, IntPolynomial};
pub use matching::{Matching, MatchingProfile};
