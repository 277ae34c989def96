//! How hard is it to swap two alternatives?
//!
//! The projection onto a tie space is the cheapest way to make two
//! alternatives equal. The entry-wise absolute difference `A''` between the
//! original and the projection is supported on the rows and columns of the
//! pair, so at most `4n - 6` entries change. The Ease of Manipulation Index
//! averages `A''` over that count. Moving the `(i, j)` entry of the
//! projection by a small `delta` then breaks the tie in either direction.

use std::fmt;

use rayon::prelude::*;

use crate::error::{PcmError, Result};
use crate::matrix::SquareMatrix;
use crate::pcm::{
    additive_weights, frobenius_distance, ranking_of, AdditivePcm, Ranking, Tolerances,
    WeightVector,
};
use crate::projection::{project_to_tie, ProjectionResult};
use crate::tie_space::{weight_sum_gap, AlternativePair};

/// Entries of `A''` at or below this are counted as zero.
pub const NONZERO_THRESHOLD: f64 = 1e-9;

/// Default tie-breaking shift on the log scale.
pub const DEFAULT_DELTA: f64 = 1e-3;

/// `|a_kl - b_kl|` entry-wise.
pub fn abs_difference(a: &AdditivePcm, b: &AdditivePcm) -> Result<SquareMatrix> {
    if a.dim() != b.dim() {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let (am, bm) = (a.matrix(), b.matrix());
    Ok(SquareMatrix::from_fn(a.dim(), |k, l| {
        (am.get(k, l) - bm.get(k, l)).abs()
    }))
}

pub fn nonzero_count(m: &SquareMatrix) -> usize {
    m.as_slice()
        .iter()
        .filter(|v| v.abs() > NONZERO_THRESHOLD)
        .count()
}

/// Largest number of entries a single tie projection can change.
pub fn max_changed_entries(n: usize) -> usize {
    (4 * n).saturating_sub(6)
}

/// Ease of Manipulation Index: `sum |a_kl - b_kl| / (4n - 6)`.
pub fn emi(a: &AdditivePcm, b: &AdditivePcm) -> Result<f64> {
    let diff = abs_difference(a, b)?;
    let n = a.dim();
    if n < 2 {
        return Err(PcmError::TooSmall(n));
    }
    Ok(diff.as_slice().iter().sum::<f64>() / max_changed_entries(n) as f64)
}

#[derive(Debug, Clone)]
pub struct ManipulationReport {
    pub pair: AlternativePair,
    pub original: AdditivePcm,
    pub projected: AdditivePcm,
    pub coefficients: Vec<f64>,
    pub abs_diff: SquareMatrix,
    pub emi: f64,
    pub nonzero_count: usize,
    pub distance: f64,
    pub weights_before: WeightVector,
    pub weights_after: WeightVector,
    pub ranking_before: Ranking,
    pub ranking_after: Ranking,
}

impl ManipulationReport {
    pub fn from_projection(projection: &ProjectionResult, tol: &Tolerances) -> Result<Self> {
        let abs_diff = abs_difference(&projection.original, &projection.projected)?;
        let emi = emi(&projection.original, &projection.projected)?;
        let weights_before = additive_weights(&projection.original);
        let weights_after = additive_weights(&projection.projected);
        Ok(Self {
            pair: projection.pair,
            original: projection.original.clone(),
            projected: projection.projected.clone(),
            coefficients: projection.coefficients.clone(),
            nonzero_count: nonzero_count(&abs_diff),
            abs_diff,
            emi,
            distance: projection.distance,
            ranking_before: ranking_of(&weights_before, tol),
            ranking_after: ranking_of(&weights_after, tol),
            weights_before,
            weights_after,
        })
    }
}

/// Projects `a` onto the pair's tie space and summarizes the change.
pub fn manipulation_report(
    a: &AdditivePcm,
    pair: AlternativePair,
    tol: &Tolerances,
) -> Result<ManipulationReport> {
    ManipulationReport::from_projection(&project_to_tie(a, pair)?, tol)
}

#[derive(Debug, Clone)]
pub struct TipResult {
    pub pair: AlternativePair,
    pub tipped: AdditivePcm,
    pub delta: f64,
    pub winner: usize,
    /// `||A* - A'||`, equal to `delta * sqrt(2)`.
    pub extra_distance: f64,
    /// `||A - A*||`
    pub total_distance: f64,
}

/// Shifts `a'_ij` of a projection by `delta` towards `winner`.
pub fn tip_pair(projection: &ProjectionResult, winner: usize, delta: f64) -> Result<TipResult> {
    let pair = projection.pair;
    if !pair.contains(winner) {
        return Err(PcmError::InvalidWinner {
            winner,
            i: pair.i(),
            j: pair.j(),
        });
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(PcmError::NonPositiveDelta(delta));
    }
    let (i, j) = (pair.i(), pair.j());
    let shift = if winner == i { delta } else { -delta };
    let mut m = projection.projected.matrix().clone();
    let v = m.get(i, j) + shift;
    m.set(i, j, v);
    m.set(j, i, -v);
    let tipped = AdditivePcm::from_matrix_unchecked(m);
    Ok(TipResult {
        pair,
        extra_distance: frobenius_distance(&tipped, &projection.projected)?,
        total_distance: frobenius_distance(&tipped, &projection.original)?,
        tipped,
        delta,
        winner,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum VerdictFailure {
    DimensionMismatch,
    WinnerNotInPair,
    /// The winner does not strictly lead its partner.
    WinnerNotAhead,
    /// Alternatives outside the pair whose weights moved.
    WeightsChanged(Vec<usize>),
}

impl fmt::Display for VerdictFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictFailure::DimensionMismatch => write!(f, "matrices differ in dimension"),
            VerdictFailure::WinnerNotInPair => write!(f, "winner is not a member of the pair"),
            VerdictFailure::WinnerNotAhead => {
                write!(f, "winner does not strictly lead the other alternative")
            }
            VerdictFailure::WeightsChanged(ks) => {
                let list: Vec<String> = ks.iter().map(|k| (k + 1).to_string()).collect();
                write!(f, "weights changed for alternatives {}", list.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ManipulationVerdict {
    pub pair: AlternativePair,
    pub winner: usize,
    /// The winner already led in the original matrix.
    pub already_leading: bool,
    pub failures: Vec<VerdictFailure>,
}

impl ManipulationVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `tipped` puts `winner` strictly ahead without moving anyone else.
pub fn verify_manipulation(
    original: &AdditivePcm,
    tipped: &AdditivePcm,
    pair: AlternativePair,
    winner: usize,
    tol: &Tolerances,
) -> ManipulationVerdict {
    let mut verdict = ManipulationVerdict {
        pair,
        winner,
        already_leading: false,
        failures: Vec::new(),
    };
    if original.dim() != tipped.dim() || original.dim() != pair.n() {
        verdict.failures.push(VerdictFailure::DimensionMismatch);
        return verdict;
    }
    let Some(loser) = pair.partner(winner) else {
        verdict.failures.push(VerdictFailure::WinnerNotInPair);
        return verdict;
    };
    let before = additive_weights(original);
    let after = additive_weights(tipped);
    verdict.already_leading = ranking_of(&before, tol).is_above(winner, loser);
    if !ranking_of(&after, tol).is_above(winner, loser) {
        verdict.failures.push(VerdictFailure::WinnerNotAhead);
    }
    let changed: Vec<usize> = (0..pair.n())
        .filter(|&k| !pair.contains(k))
        .filter(|&k| (before.get(k) - after.get(k)).abs() > tol.ranking_tie)
        .collect();
    if !changed.is_empty() {
        verdict.failures.push(VerdictFailure::WeightsChanged(changed));
    }
    verdict
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairScanRow {
    pub pair: AlternativePair,
    pub emi: f64,
    pub distance: f64,
    /// `sum_k a_ik - sum_k a_jk`
    pub gap: f64,
}

/// One row per unordered pair, easiest manipulation first.
#[derive(Debug, Clone, PartialEq)]
pub struct PairScanTable {
    pub rows: Vec<PairScanRow>,
}

/// Projects onto every tie space and sorts pairs by ascending EMI, breaking
/// ties by the pair's lexicographic order.
pub fn scan_all_pairs(a: &AdditivePcm) -> Result<PairScanTable> {
    let n = a.dim();
    let pairs: Vec<AlternativePair> = AlternativePair::all(n).collect();
    let mut rows = pairs
        .into_par_iter()
        .map(|pair| {
            let r = project_to_tie(a, pair)?;
            Ok(PairScanRow {
                pair,
                emi: emi(a, &r.projected)?,
                distance: r.distance,
                gap: weight_sum_gap(a, pair),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|x, y| x.emi.total_cmp(&y.emi).then(x.pair.cmp(&y.pair)));
    Ok(PairScanTable { rows })
}
