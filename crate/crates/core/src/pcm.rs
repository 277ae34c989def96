//! Pairwise comparison matrices in multiplicative and additive form,
//! priority vectors and Frobenius geometry.
//!
//! A multiplicative PCM holds positive ratio judgments with `m_ij * m_ji = 1`.
//! Taking entry-wise logarithms gives an additive PCM, an antisymmetric real
//! matrix. Additive PCMs form a linear space, which is where all projections
//! in this crate happen. The geometric-mean priority of a multiplicative PCM
//! is the exponential of the row arithmetic mean of its additive image.

use std::cmp::Ordering;

use crate::error::{PcmError, Result};
use crate::matrix::SquareMatrix;

/// Numerical tolerances used when validating input and comparing weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Bound on `|m_ij * m_ji - 1|`.
    pub reciprocity: f64,
    /// Bound on `|a_ij + a_ji|`.
    pub antisymmetry: f64,
    /// Weights closer than this are considered tied.
    pub ranking_tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            reciprocity: 1e-8,
            antisymmetry: 1e-9,
            ranking_tie: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn new(reciprocity: f64, antisymmetry: f64, ranking_tie: f64) -> Result<Self> {
        let tol = Self {
            reciprocity,
            antisymmetry,
            ranking_tie,
        };
        tol.check()?;
        Ok(tol)
    }

    pub fn check(&self) -> Result<()> {
        for (name, value) in [
            ("reciprocity", self.reciprocity),
            ("antisymmetry", self.antisymmetry),
            ("ranking_tie", self.ranking_tie),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(PcmError::InvalidTolerance { name, value });
            }
        }
        Ok(())
    }
}

/// Validated multiplicative PCM.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicativePcm(SquareMatrix);

/// Validated additive (antisymmetric) PCM.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditivePcm(SquareMatrix);

impl MultiplicativePcm {
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0.get(row, col)
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }
}

impl AdditivePcm {
    pub fn zeros(n: usize) -> Self {
        Self(SquareMatrix::zeros(n))
    }

    /// Builds an antisymmetric matrix from its strict upper triangle.
    pub fn from_upper_fn(n: usize, mut upper: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SquareMatrix::zeros(n);
        for q in 0..n {
            for r in q + 1..n {
                let v = upper(q, r);
                m.set(q, r, v);
                m.set(r, q, -v);
            }
        }
        Self(m)
    }

    pub(crate) fn from_matrix_unchecked(m: SquareMatrix) -> Self {
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0.get(row, col)
    }

    pub fn row_sum(&self, row: usize) -> f64 {
        self.0.row_sum(row)
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.0.to_rows()
    }
}

/// Priority vector, indexed by alternative.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> f64 {
        self.0[k]
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// Order of alternatives by descending weight, with tie groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    groups: Vec<Vec<usize>>,
}

impl Ranking {
    /// Alternatives from best to worst; tied alternatives appear in ascending index order.
    pub fn order(&self) -> Vec<usize> {
        self.groups.iter().flatten().copied().collect()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Zero-based position of the tie group containing `alternative`.
    pub fn group_of(&self, alternative: usize) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&alternative))
    }

    /// True if `a` is ranked strictly above `b`.
    pub fn is_above(&self, a: usize, b: usize) -> bool {
        match (self.group_of(a), self.group_of(b)) {
            (Some(ga), Some(gb)) => ga < gb,
            _ => false,
        }
    }

    pub fn is_tied(&self, a: usize, b: usize) -> bool {
        match (self.group_of(a), self.group_of(b)) {
            (Some(ga), Some(gb)) => ga == gb,
            _ => false,
        }
    }
}

fn check_finite(m: &SquareMatrix) -> Result<()> {
    match m.iter().find(|(_, _, v)| !v.is_finite()) {
        Some((row, col, _)) => Err(PcmError::NonFinite { row, col }),
        None => Ok(()),
    }
}

/// Every violation of the multiplicative PCM conditions, one per unordered pair.
pub fn multiplicative_violations(m: &SquareMatrix, tol: &Tolerances) -> Vec<PcmError> {
    let n = m.dim();
    let mut out = Vec::new();
    if n < 2 {
        out.push(PcmError::TooSmall(n));
        return out;
    }
    for (row, col, value) in m.iter() {
        if !value.is_finite() {
            out.push(PcmError::NonFinite { row, col });
        } else if value <= 0.0 {
            out.push(PcmError::NonPositiveEntry { row, col, value });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for row in 0..n {
        for col in row..n {
            let residual = m.get(row, col) * m.get(col, row) - 1.0;
            if residual.abs() > tol.reciprocity {
                out.push(PcmError::ReciprocityViolation { row, col, residual });
            }
        }
    }
    out
}

/// Every violation of antisymmetry, one per unordered pair (diagonal included).
pub fn additive_violations(a: &SquareMatrix, tol: &Tolerances) -> Vec<PcmError> {
    let n = a.dim();
    if n < 2 {
        return vec![PcmError::TooSmall(n)];
    }
    if let Err(e) = check_finite(a) {
        return vec![e];
    }
    let mut out = Vec::new();
    for row in 0..n {
        for col in row..n {
            let residual = a.get(row, col) + a.get(col, row);
            if residual.abs() > tol.antisymmetry {
                out.push(PcmError::AntisymmetryViolation { row, col, residual });
            }
        }
    }
    out
}

/// Checks positivity and reciprocity. The matrix is kept as given.
pub fn validate_multiplicative(m: SquareMatrix, tol: &Tolerances) -> Result<MultiplicativePcm> {
    match multiplicative_violations(&m, tol).into_iter().next() {
        Some(e) => Err(e),
        None => Ok(MultiplicativePcm(m)),
    }
}

/// Checks antisymmetry. The matrix is kept as given.
pub fn validate_additive(a: SquareMatrix, tol: &Tolerances) -> Result<AdditivePcm> {
    match additive_violations(&a, tol).into_iter().next() {
        Some(e) => Err(e),
        None => Ok(AdditivePcm(a)),
    }
}

/// Logarithmic map into the additive space.
///
/// The upper entry is `(ln m_ij - ln m_ji) / 2` and the lower one its
/// negation, so the output is antisymmetric to the last bit even when the
/// input is reciprocal only within tolerance. For exactly reciprocal input
/// this is the plain entry-wise logarithm.
pub fn to_additive(m: &MultiplicativePcm) -> AdditivePcm {
    let mm = m.matrix();
    AdditivePcm::from_upper_fn(mm.dim(), |q, r| {
        0.5 * (mm.get(q, r).ln() - mm.get(r, q).ln())
    })
}

/// Exponential map back to the multiplicative space.
pub fn to_multiplicative(a: &AdditivePcm) -> Result<MultiplicativePcm> {
    let am = a.matrix();
    let mut out = SquareMatrix::zeros(am.dim());
    for (row, col, v) in am.iter() {
        let e = v.exp();
        if !e.is_finite() || e == 0.0 {
            return Err(PcmError::Overflow { row, col });
        }
        out.set(row, col, e);
    }
    Ok(MultiplicativePcm(out))
}

/// Geometric mean of each row.
pub fn gmm_weights(m: &MultiplicativePcm) -> WeightVector {
    let n = m.dim();
    let inv_n = 1.0 / n as f64;
    let values = (0..n)
        .map(|k| {
            let row = m.matrix().row(k);
            let product: f64 = row.iter().product();
            if product.is_finite() && product > 0.0 {
                product.powf(inv_n)
            } else {
                // product left the representable range; go through logs
                (row.iter().map(|v| v.ln()).sum::<f64>() * inv_n).exp()
            }
        })
        .collect();
    WeightVector(values)
}

/// Scales positive weights so they sum to one.
pub fn normalize_weights(w: &WeightVector) -> Result<WeightVector> {
    if let Some((index, &value)) = w.0.iter().enumerate().find(|(_, v)| v.is_nan() || **v <= 0.0) {
        return Err(PcmError::NonPositiveWeight { index, value });
    }
    let total: f64 = w.0.iter().sum();
    Ok(WeightVector(w.0.iter().map(|v| v / total).collect()))
}

/// Arithmetic mean of each row of an additive PCM.
pub fn additive_weights(a: &AdditivePcm) -> WeightVector {
    let m = a.matrix();
    WeightVector((0..m.dim()).map(|k| m.row_mean(k)).collect())
}

/// Sorts alternatives by descending weight.
///
/// A tie group collects every alternative whose weight lies within
/// `tol.ranking_tie` of the group's leading (largest) weight.
pub fn ranking_of(v: &WeightVector, tol: &Tolerances) -> Ranking {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| {
        v.0[b]
            .partial_cmp(&v.0[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut lead = f64::NAN;
    for k in idx {
        let w = v.0[k];
        match groups.last_mut() {
            Some(g) if (lead - w).abs() <= tol.ranking_tie => g.push(k),
            _ => {
                lead = w;
                groups.push(vec![k]);
            }
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    Ranking { groups }
}

fn same_dim(a: &AdditivePcm, b: &AdditivePcm) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// `sum_kl a_kl * b_kl`
pub fn frobenius_inner(a: &AdditivePcm, b: &AdditivePcm) -> Result<f64> {
    same_dim(a, b)?;
    Ok(a.matrix().dot(b.matrix()))
}

pub fn frobenius_norm(a: &AdditivePcm) -> f64 {
    a.matrix().dot(a.matrix()).sqrt()
}

pub fn frobenius_distance(a: &AdditivePcm, b: &AdditivePcm) -> Result<f64> {
    same_dim(a, b)?;
    let d = a.matrix().sub(b.matrix());
    Ok(d.dot(&d).sqrt())
}
