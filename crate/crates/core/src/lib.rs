//! Closest tie-equating approximations of pairwise comparison matrices and
//! the cost of manipulating a ranking.
//!
//! Given an additive pairwise comparison matrix `A` and two alternatives
//! `i`, `j`, [`project_to_tie`] returns the matrix closest to `A` (in the
//! Frobenius norm) under which `i` and `j` receive equal row-mean weights.
//! Every other alternative keeps its weight, and the tied weight is the mean
//! of the two originals. [`tip_pair`] then nudges one entry so the chosen
//! alternative wins, and [`emi`] measures how large the change was.
//!
//! ```
//! use pcmtie::{project_to_tie, additive_weights, AdditivePcm, AlternativePair};
//!
//! let a = AdditivePcm::from_upper_fn(3, |q, r| [[0.0, 2.0, -1.0], [0.0, 0.0, 1.0]][q][r]);
//! let pair = AlternativePair::from_one_based(1, 2, 3).unwrap();
//! let tied = project_to_tie(&a, pair).unwrap();
//! let w = additive_weights(&tied.projected);
//! assert!((w.get(0) - w.get(1)).abs() < 1e-12);
//! ```

pub mod error;
pub mod lsq;
pub mod manipulation;
pub mod matrix;
pub mod pcm;
pub mod projection;
pub mod tie_space;

#[cfg(test)]
mod test_fixtures;

pub use error::{PcmError, Result};
pub use manipulation::{
    abs_difference, emi, manipulation_report, max_changed_entries, nonzero_count, scan_all_pairs,
    tip_pair, verify_manipulation, ManipulationReport, ManipulationVerdict, PairScanRow,
    PairScanTable, TipResult, VerdictFailure, DEFAULT_DELTA,
};
pub use matrix::SquareMatrix;
pub use pcm::{
    additive_violations, additive_weights, frobenius_distance, frobenius_inner, frobenius_norm,
    gmm_weights, multiplicative_violations, normalize_weights, ranking_of, to_additive,
    to_multiplicative, validate_additive, validate_multiplicative, AdditivePcm,
    MultiplicativePcm, Ranking, Tolerances, WeightVector,
};
pub use projection::{
    gram_schmidt, hyperplane_oracle_project, orthogonalize, project_to_tie,
    projection_coefficients, relabel_pair, OrthogonalBasis, ProjectionResult, Projector,
    Relabeling,
};
pub use tie_space::{
    generator_matrix, is_tie_equating, tie_basis, tie_space_dimension, weight_sum_gap, z_set,
    AlternativePair, Generator, TieBasis, ZSet,
};
