//! Rankability analysis of pairwise-comparison data modeled as weighted
//! digraphs.
//!
//! A dataset of pairwise comparisons (match results, dominance relations)
//! is perfectly rankable when it forms a complete dominance graph: an
//! acyclic tournament with unit weights, whose Laplacian spectrum and
//! out-degree multiset both equal {n-1, n-2, ..., 0}. This crate measures
//! how far real data sits from that ideal:
//!
//! - [`rankability::spec_r`] scores a digraph in [0, 1] from the Hausdorff
//!   distances between the ideal spectrum and both the out-degree multiset
//!   and the Laplacian spectrum, normalized by 2(n-1).
//! - [`rankability::edge_r_exact`] scores small binary digraphs by the
//!   minimum number of edge changes to reach a complete dominance graph
//!   and the number of dominance graphs reachable at that distance,
//!   computed exactly by permutation search.
//! - [`ratings`] runs Elo over the same match data and derives the
//!   rank-correlation statistics used to validate the measures against
//!   rating stability and backward predictability.
//!
//! Supporting machinery lives in [`digraph`] (Laplacians, strongly
//! connected components in Frobenius normal form order, Johnson cycle
//! enumeration), [`spectral`] (a dense QR eigensolver, spectra as
//! multisets, Hausdorff/spectral-variation distances), [`ingest`] (match
//! CSV parsing and digraph builders), and [`gallery`] (frozen benchmark
//! digraphs).
//!
//! ## A note on dominance condition numbers
//!
//! For a complete dominance Laplacian the eigenvalue condition numbers
//! computed from the closed-form eigenvectors are sqrt(2i) for
//! i = 1..n-1. At i = n the left eigenvector degenerates to a single
//! standard basis vector, giving sqrt(n) rather than the sqrt(2n) the
//! general formula would suggest; [`spectral::eigen_condition_numbers`]
//! returns the computed sqrt(n).

pub mod digraph;
pub mod eigen;
pub mod error;
pub mod gallery;
pub mod ingest;
pub mod matrix;
pub mod rankability;
pub mod ratings;
pub mod spectral;

pub use digraph::{CycleReport, Digraph, SccDecomposition};
pub use error::{Error, Result};
pub use ingest::{build_digraph, parse_matches, MatchRecord, RoundSeries, WeightMode};
pub use matrix::Matrix;
pub use rankability::{
    dominance_graph, edge_r_exact, is_complete_dominance, perturb_edge, spec_r,
    EdgeRankabilityResult, RankabilityReport,
};
pub use ratings::{
    backward_predictability, elo_update, rating_correlation, run_elo, spearman, EloConfig,
    EloTable, TiePolicy,
};
pub use spectral::{hausdorff, spectral_variation, HausdorffResult, Spectrum};
