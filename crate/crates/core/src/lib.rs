//! Exact-arithmetic toolkit for deciding degree similarity of graphs.
//!
//! Two graphs G1, G2 are degree-similar when a single invertible matrix M
//! conjugates both the adjacency matrix and the degree matrix:
//! `M^-1 A(G1) M = A(G2)` and `M^-1 D(G1) M = D(G2)`.  Everything here is
//! computed over exact rationals (or exact rational functions of mu), never
//! floating point.
//!
//! The main entry points are:
//! * [`spectra::mu_polynomial`] / [`spectra::alpha_polynomial`] for the
//!   bivariate characteristic polynomials det(tI - A + mu D) and
//!   det(tI - A - alpha J),
//! * [`algebra::snf`] / [`algebra::determinant_divisor`] for Smith normal
//!   forms of polynomial matrices over Q(mu)[t],
//! * [`similarity::degree_similar`] for the degree-similarity decision with
//!   an exact witness or a certified/probabilistic refusal,
//! * [`constructions`] for the cospectral-pair generators (operation vectors
//!   on a shared degree partition, rooted coalescence pairs),
//! * [`srg`] for strongly-regular and 1-walk-regular edge-deletion sweeps,
//! * [`search`] for the unicyclic search and Smith-normal-form experiments.

pub mod algebra;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod similarity;
pub mod spectra;
pub mod srg;
pub mod par;
pub mod search;

pub use error::{Error, Result};
pub use graph::{DegreePartition, Graph, RootedGraph};
