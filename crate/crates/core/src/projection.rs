//! Orthogonal projection of an additive PCM onto a tie space.
//!
//! The tie basis is orthogonalized with classical Gram-Schmidt under the
//! Frobenius inner product (no normalization, so the intermediate matrices
//! keep small rational entries). The projection is then the sum of
//! `<A,H^k> / <H^k,H^k> * H^k` over the orthogonal basis.
//!
//! Pairs that involve the last alternative are handled by conjugating the
//! matrix with a transposition first, projecting, and conjugating back.
//!
//! [`hyperplane_oracle_project`] computes the same projection in closed form
//! from the normal of the tie hyperplane and serves as an independent check.

use crate::error::{PcmError, Result};
use crate::matrix::SquareMatrix;
use crate::pcm::{frobenius_distance, AdditivePcm};
use crate::tie_space::{tie_basis, weight_sum_gap, AlternativePair, Generator, TieBasis};

/// Squared norms below this mean the input basis was not independent.
const DEGENERATE_NORM_SQ: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct OrthogonalBasis {
    pub pair: AlternativePair,
    pub matrices: Vec<AdditivePcm>,
    pub norms_sq: Vec<f64>,
    pub labels: Vec<Generator>,
}

impl OrthogonalBasis {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

/// Classical Gram-Schmidt on an arbitrary list of additive matrices.
///
/// `H^k = B^k - sum_{p<k} <H^p,B^k>/<H^p,H^p> H^p`. Returns the orthogonal
/// matrices together with their squared norms.
///
/// Antisymmetric matrices are handled through their strict upper triangles
/// (`<X,Y>_F = 2 sum_{q<r} x_qr y_qr`), and the inner products against each
/// incoming `B^k` only visit its nonzero entries, which keeps the sparse
/// integer bases cheap to orthogonalize.
pub fn orthogonalize(list: &[AdditivePcm]) -> Result<(Vec<AdditivePcm>, Vec<f64>)> {
    let Some(first) = list.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    let n = first.dim();
    let upper: Vec<(usize, usize)> = (0..n)
        .flat_map(|q| (q + 1..n).map(move |r| (q, r)))
        .collect();
    let mut hs: Vec<Vec<f64>> = Vec::with_capacity(list.len());
    let mut norms: Vec<f64> = Vec::with_capacity(list.len());
    for (index, b) in list.iter().enumerate() {
        if b.dim() != n {
            return Err(PcmError::DimensionMismatch {
                left: n,
                right: b.dim(),
            });
        }
        let packed: Vec<f64> = upper.iter().map(|&(q, r)| b.get(q, r)).collect();
        let support: Vec<usize> = (0..packed.len()).filter(|&s| packed[s] != 0.0).collect();
        let weights: Vec<f64> = hs
            .iter()
            .zip(&norms)
            .map(|(h, nrm)| 2.0 * support.iter().map(|&s| h[s] * packed[s]).sum::<f64>() / nrm)
            .collect();
        let mut h = packed;
        for (hp, w) in hs.iter().zip(weights) {
            if w != 0.0 {
                for (x, y) in h.iter_mut().zip(hp) {
                    *x -= w * y;
                }
            }
        }
        let norm_sq = 2.0 * h.iter().map(|x| x * x).sum::<f64>();
        if norm_sq < DEGENERATE_NORM_SQ {
            return Err(PcmError::DegenerateBasis { index, norm_sq });
        }
        hs.push(h);
        norms.push(norm_sq);
    }
    let matrices = hs
        .into_iter()
        .map(|h| {
            let mut it = h.into_iter();
            AdditivePcm::from_upper_fn(n, |_, _| it.next().unwrap())
        })
        .collect();
    Ok((matrices, norms))
}

pub fn gram_schmidt(basis: &TieBasis) -> Result<OrthogonalBasis> {
    let (matrices, norms_sq) = orthogonalize(&basis.matrices)?;
    Ok(OrthogonalBasis {
        pair: basis.pair,
        matrices,
        norms_sq,
        labels: basis.labels.clone(),
    })
}

/// Frobenius inner products `<A, H^k>` in basis order.
pub fn basis_inner_products(a: &AdditivePcm, h: &OrthogonalBasis) -> Result<Vec<f64>> {
    if a.dim() != h.pair.n() {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: h.pair.n(),
        });
    }
    Ok(h.matrices.iter().map(|hk| a.matrix().dot(hk.matrix())).collect())
}

/// `epsilon_k = <A,H^k> / <H^k,H^k>`
pub fn projection_coefficients(a: &AdditivePcm, h: &OrthogonalBasis) -> Result<Vec<f64>> {
    Ok(basis_inner_products(a, h)?
        .into_iter()
        .zip(&h.norms_sq)
        .map(|(ip, nrm)| ip / nrm)
        .collect())
}

/// Permutation of alternatives, `perm[old] = new`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    perm: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
        }
    }

    /// Permutation moving `pair` off the last index, and the pair it maps to.
    ///
    /// If `j` is the last alternative, it is swapped with the largest index
    /// outside the pair; otherwise the identity is returned. For `n = 2` no
    /// such index exists and the identity is returned unchanged.
    pub fn for_pair(pair: AlternativePair) -> (Self, AlternativePair) {
        let n = pair.n();
        let last = n - 1;
        if pair.j() != last {
            return (Self::identity(n), pair);
        }
        let Some(k) = (0..last).rev().find(|&k| !pair.contains(k)) else {
            return (Self::identity(n), pair);
        };
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(k, last);
        let mapped = AlternativePair::new(perm[pair.i()], perm[pair.j()], n)
            .expect("a permutation keeps the pair distinct and in range");
        (Self { perm }, mapped)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }

    /// New position of alternative `k`.
    pub fn map(&self, k: usize) -> usize {
        self.perm[k]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (old, &new) in self.perm.iter().enumerate() {
            inv[new] = old;
        }
        Self { perm: inv }
    }

    /// `P A P^T`
    pub fn apply(&self, a: &AdditivePcm) -> AdditivePcm {
        AdditivePcm::from_matrix_unchecked(a.matrix().permuted(&self.perm))
    }

    pub fn undo(&self, a: &AdditivePcm) -> AdditivePcm {
        self.inverse().apply(a)
    }
}

/// Conjugates `a` so that the pair avoids the last index.
pub fn relabel_pair(
    a: &AdditivePcm,
    pair: AlternativePair,
) -> Result<(AdditivePcm, AlternativePair, Relabeling)> {
    if a.dim() != pair.n() {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: pair.n(),
        });
    }
    let (relabeling, mapped) = Relabeling::for_pair(pair);
    Ok((relabeling.apply(a), mapped, relabeling))
}

#[derive(Debug, Clone)]
pub struct ProjectionResult {
    pub pair: AlternativePair,
    pub original: AdditivePcm,
    pub projected: AdditivePcm,
    /// Coefficients in the orthogonal basis of the (possibly relabeled) pair.
    pub coefficients: Vec<f64>,
    /// `||A - A'||_F`
    pub distance: f64,
    /// Present when the pair touched the last alternative.
    pub relabeling: Option<Relabeling>,
}

/// Precomputed orthogonal basis for one pair, reusable across matrices.
#[derive(Debug, Clone)]
pub struct Projector {
    pair: AlternativePair,
    relabeling: Relabeling,
    basis: Option<OrthogonalBasis>,
}

impl Projector {
    pub fn new(pair: AlternativePair) -> Result<Self> {
        let (relabeling, working) = Relabeling::for_pair(pair);
        let basis = if pair.n() == 2 {
            // the tie space is {0}
            None
        } else {
            Some(gram_schmidt(&tie_basis(working)?)?)
        };
        Ok(Self {
            pair,
            relabeling,
            basis,
        })
    }

    pub fn pair(&self) -> AlternativePair {
        self.pair
    }

    /// Orthogonal basis in relabeled coordinates; `None` for `n = 2`.
    pub fn basis(&self) -> Option<&OrthogonalBasis> {
        self.basis.as_ref()
    }

    pub fn relabeling(&self) -> &Relabeling {
        &self.relabeling
    }

    pub fn project(&self, a: &AdditivePcm) -> Result<ProjectionResult> {
        let n = self.pair.n();
        if a.dim() != n {
            return Err(PcmError::DimensionMismatch {
                left: a.dim(),
                right: n,
            });
        }
        let relabeled = !self.relabeling.is_identity();
        let (projected, coefficients) = match &self.basis {
            None => (AdditivePcm::zeros(n), Vec::new()),
            Some(h) => {
                let work = if relabeled {
                    self.relabeling.apply(a)
                } else {
                    a.clone()
                };
                let coefficients = projection_coefficients(&work, h)?;
                let mut sum = SquareMatrix::zeros(n);
                for (eps, hk) in coefficients.iter().zip(&h.matrices) {
                    sum.axpy(*eps, hk.matrix());
                }
                let sum = AdditivePcm::from_matrix_unchecked(sum);
                let projected = if relabeled {
                    self.relabeling.undo(&sum)
                } else {
                    sum
                };
                (projected, coefficients)
            }
        };
        let distance = frobenius_distance(a, &projected)?;
        Ok(ProjectionResult {
            pair: self.pair,
            original: a.clone(),
            projected,
            coefficients,
            distance,
            relabeling: relabeled.then(|| self.relabeling.clone()),
        })
    }
}

/// Closest member of the pair's tie space to `a` in the Frobenius norm.
pub fn project_to_tie(a: &AdditivePcm, pair: AlternativePair) -> Result<ProjectionResult> {
    Projector::new(pair)?.project(a)
}

/// Closed-form projection onto the tie hyperplane.
///
/// With `f = sum_k a_ik - sum_k a_jk`, returns `A - (f/n) N` where `N` is the
/// antisymmetric normal with `N_ij = 1` and, for every `l` outside the pair,
/// `N_il = 1/2`, `N_jl = -1/2`.
pub fn hyperplane_oracle_project(a: &AdditivePcm, pair: AlternativePair) -> Result<AdditivePcm> {
    let n = pair.n();
    if a.dim() != n {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: n,
        });
    }
    let (i, j) = (pair.i(), pair.j());
    let step = weight_sum_gap(a, pair) / n as f64;
    let mut out = a.matrix().clone();
    let mut shift = |k: usize, l: usize, v: f64| {
        out[(k, l)] -= step * v;
        out[(l, k)] += step * v;
    };
    shift(i, j, 1.0);
    for l in (0..n).filter(|&l| l != i && l != j) {
        shift(i, l, 0.5);
        shift(j, l, -0.5);
    }
    Ok(AdditivePcm::from_matrix_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lsq::least_squares_tie_projection;
    use crate::pcm::{additive_weights, frobenius_inner, frobenius_norm};
    use crate::test_fixtures::*;
    use crate::tie_space::{is_tie_equating, linear_combination};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(i: usize, j: usize, n: usize) -> AlternativePair {
        AlternativePair::from_one_based(i, j, n).unwrap()
    }

    fn example_h() -> OrthogonalBasis {
        gram_schmidt(&tie_basis(p(2, 3, 5)).unwrap()).unwrap()
    }

    #[test]
    fn orthogonal_basis_matches_printed_fractions() {
        let h = example_h();
        let b = printed_tie_basis();
        for (hk, bk) in h.matrices.iter().zip(&b).take(4) {
            assert_eq!(hk.matrix(), bk.matrix());
        }
        for (k, printed) in ORTHOGONAL_5_23_H5_TO_H9.iter().enumerate() {
            let printed = SquareMatrix::from_rows(printed).unwrap();
            let err = max_abs_diff(h.matrices[k + 4].matrix(), &printed);
            assert!(err < 1e-9, "H^{} off by {err}", k + 5);
        }
    }

    #[test]
    fn intermediate_inner_products() {
        let h = example_h();
        let b = printed_tie_basis();
        let ip = |x: &AdditivePcm, y: &AdditivePcm| frobenius_inner(x, y).unwrap();
        assert_eq!(ip(&h.matrices[3], &b[4]), -2.0);
        assert_eq!(ip(&h.matrices[3], &b[5]), -4.0);
        assert!((ip(&h.matrices[4], &b[5]) - 2.0).abs() < 1e-12);
        assert!((ip(&h.matrices[5], &b[6]) - 4.0 / 3.0).abs() < 1e-12);
        assert!((ip(&h.matrices[6], &b[7]) - 2.0 / 7.0).abs() < 1e-12);
        assert!((ip(&h.matrices[7], &b[8]) + 0.25).abs() < 1e-12);
        let exact = [2.0, 2.0, 2.0, 4.0, 3.0, 14.0 / 3.0, 16.0 / 7.0, 9.0 / 4.0, 20.0 / 9.0];
        for (got, want) in h.norms_sq.iter().zip(exact) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((ip(&h.matrices[4], &h.matrices[4]) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_input_is_unchanged() {
        let list: Vec<AdditivePcm> = printed_tie_basis().into_iter().take(4).collect();
        let (out, norms) = orthogonalize(&list).unwrap();
        assert_eq!(out, list);
        assert_eq!(norms, vec![2.0, 2.0, 2.0, 4.0]);
    }

    #[test]
    fn dependent_input_is_rejected() {
        let b = printed_tie_basis();
        let list = vec![b[0].clone(), b[1].clone(), b[0].clone()];
        assert!(matches!(
            orthogonalize(&list),
            Err(PcmError::DegenerateBasis { index: 2, .. })
        ));
    }

    #[test]
    fn reference5_coefficients() {
        let h = example_h();
        let a = reference5();
        let ips = basis_inner_products(&a, &h).unwrap();
        let eps = projection_coefficients(&a, &h).unwrap();
        for k in 0..9 {
            assert!((ips[k] - REFERENCE5_INNER_PRINTED[k]).abs() < 1e-3);
            assert!((h.norms_sq[k] - REFERENCE5_NORMS_PRINTED[k]).abs() < 1e-3);
            assert!((eps[k] - REFERENCE5_COEFFS_PRINTED[k]).abs() < 1e-3);
        }
        let exact_ips = [0.0, 8.0, -16.0, 8.0, -10.0, -52.0 / 3.0, 30.0 / 7.0, -73.0 / 4.0, 110.0 / 9.0];
        let exact_eps = [0.0, 4.0, -8.0, 2.0, -10.0 / 3.0, -26.0 / 7.0, 15.0 / 8.0, -73.0 / 9.0, 5.5];
        for k in 0..9 {
            assert!((ips[k] - exact_ips[k]).abs() < 1e-9);
            assert!((eps[k] - exact_eps[k]).abs() < 1e-9);
        }
        assert!(projection_coefficients(&AdditivePcm::zeros(5), &h)
            .unwrap()
            .iter()
            .all(|&c| c == 0.0));
        let unit = projection_coefficients(&h.matrices[1], &h).unwrap();
        for (k, c) in unit.iter().enumerate() {
            let want = if k == 1 { 1.0 } else { 0.0 };
            assert!((c - want).abs() < 1e-12);
        }
        assert!(matches!(
            projection_coefficients(&AdditivePcm::zeros(4), &h),
            Err(PcmError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reference5_projection_and_weights() {
        let r = project_to_tie(&reference5(), p(2, 3, 5)).unwrap();
        assert!(max_abs_diff(r.projected.matrix(), reference5_projection().matrix()) < 1e-9);
        for (w, e) in additive_weights(&r.projected).values().iter().zip(REFERENCE5_PROJECTED_WEIGHTS) {
            assert!((w - e).abs() < 1e-9);
        }
        assert!(r.relabeling.is_none());
        // ||A''||_F with twelve 1.5's and two 3's
        assert!((r.distance - (12.0 * 2.25 + 2.0 * 9.0f64).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn oracle_reproduces_reference5_projection() {
        let a = reference5();
        assert_eq!(weight_sum_gap(&a, p(2, 3, 5)), 15.0);
        let o = hyperplane_oracle_project(&a, p(2, 3, 5)).unwrap();
        assert_eq!(o.get(1, 2), -1.0);
        assert!(max_abs_diff(o.matrix(), reference5_projection().matrix()) < 1e-12);
    }

    #[test]
    fn oracle_agrees_with_least_squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=7 {
            for pair in AlternativePair::all(n) {
                let a = random_additive(&mut rng, n);
                let o = hyperplane_oracle_project(&a, pair).unwrap();
                let l = least_squares_tie_projection(&a, pair).unwrap();
                assert!(max_abs_diff(o.matrix(), l.matrix()) < 1e-9, "n={n} {pair}");
            }
        }
    }

    #[test]
    fn members_are_fixed_points() {
        let a = reference5_projection();
        let r = project_to_tie(&a, p(2, 3, 5)).unwrap();
        assert!(max_abs_diff(r.projected.matrix(), a.matrix()) < 1e-9);
        let z = hyperplane_oracle_project(&AdditivePcm::zeros(4), p(1, 4, 4)).unwrap();
        assert_eq!(z, AdditivePcm::zeros(4));
    }

    #[test]
    fn gram_schmidt_agrees_with_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_additive(&mut rng, 6);
        let r = project_to_tie(&a, p(2, 6, 6)).unwrap();
        let o = hyperplane_oracle_project(&a, p(2, 6, 6)).unwrap();
        assert!(max_abs_diff(r.projected.matrix(), o.matrix()) < 1e-9);
        assert!(r.relabeling.is_some());

        let a = random_additive(&mut rng, 5);
        for pair in AlternativePair::all(5) {
            let r = project_to_tie(&a, pair).unwrap();
            let o = hyperplane_oracle_project(&a, pair).unwrap();
            assert!(max_abs_diff(r.projected.matrix(), o.matrix()) < 1e-9);
        }
    }

    #[test]
    fn two_alternatives_project_to_zero() {
        let a = AdditivePcm::from_upper_fn(2, |_, _| 3.0);
        let r = project_to_tie(&a, p(1, 2, 2)).unwrap();
        assert_eq!(r.projected, AdditivePcm::zeros(2));
        assert!(r.coefficients.is_empty());
        assert!((r.distance - 18f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn relabeling_examples() {
        let a = reference5();
        let (b, q, rl) = relabel_pair(&a, p(2, 3, 5)).unwrap();
        assert!(rl.is_identity());
        assert_eq!(q, p(2, 3, 5));
        assert_eq!(b, a);

        let (_, q, rl) = relabel_pair(&a, p(3, 5, 5)).unwrap();
        assert_eq!(q, p(3, 4, 5));
        assert!(!rl.is_identity());

        let (_, q, _) = relabel_pair(&a, p(5, 2, 5)).unwrap();
        assert_eq!(q.j(), 3);
        assert!(q.j() < 4);
    }

    #[test]
    fn projection_commutes_with_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = random_additive(&mut rng, 5);
            let pair = p(3, 5, 5);
            let (b, q, rl) = relabel_pair(&a, pair).unwrap();
            let direct = hyperplane_oracle_project(&a, pair).unwrap();
            let via = rl.undo(&project_to_tie(&b, q).unwrap().projected);
            assert!(max_abs_diff(direct.matrix(), via.matrix()) < 1e-9);
        }
    }

    #[test]
    fn orthogonality_for_all_small_pairs() {
        for n in 3..=8 {
            for pair in AlternativePair::all(n) {
                let proj = Projector::new(pair).unwrap();
                let h = proj.basis().unwrap();
                for k in 0..h.len() {
                    assert!(h.norms_sq[k] >= 1e-12);
                    for l in 0..k {
                        let ip = frobenius_inner(&h.matrices[k], &h.matrices[l]).unwrap();
                        assert!(ip.abs() <= 1e-9, "n={n} {pair} <H{k},H{l}> = {ip}");
                    }
                }
                // same span: each tie basis element is rebuilt from its coefficients
                let working = tie_basis(h.pair).unwrap();
                for bs in &working.matrices {
                    let c = projection_coefficients(bs, h).unwrap();
                    let back = linear_combination(n, &c, &h.matrices);
                    assert!(max_abs_diff(back.matrix(), bs.matrix()) < 1e-9);
                }
            }
        }
    }

    #[test]
    fn projection_properties_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 3..=7 {
            for pair in AlternativePair::all(n) {
                let proj = Projector::new(pair).unwrap();
                let a = random_additive(&mut rng, n);
                let r = proj.project(&a).unwrap();
                let ap = &r.projected;
                assert!(is_tie_equating(ap, pair, 1e-9));
                for k in 0..n {
                    for l in 0..n {
                        assert!((ap.get(k, l) + ap.get(l, k)).abs() <= 1e-12);
                    }
                }
                let pyth = frobenius_norm(ap).powi(2) + r.distance.powi(2);
                assert!((pyth - frobenius_norm(&a).powi(2)).abs() < 1e-8);
                let again = proj.project(ap).unwrap();
                assert!(max_abs_diff(again.projected.matrix(), ap.matrix()) < 1e-9);

                let v = additive_weights(&a);
                let vp = additive_weights(ap);
                let (i, j) = (pair.i(), pair.j());
                for k in (0..n).filter(|&k| !pair.contains(k)) {
                    assert!((v.get(k) - vp.get(k)).abs() < 1e-9);
                }
                let mean = 0.5 * (v.get(i) + v.get(j));
                assert!((vp.get(i) - mean).abs() < 1e-9);
                assert!((vp.get(j) - mean).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn projection_is_closest_among_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let pair = p(2, 4, 6);
        let proj = Projector::new(pair).unwrap();
        let b = tie_basis(pair).unwrap();
        for _ in 0..5 {
            let a = random_additive(&mut rng, 6);
            let r = proj.project(&a).unwrap();
            for _ in 0..200 {
                let c: Vec<f64> = (0..b.len()).map(|_| rng.gen_range(-10.0..10.0)).collect();
                let x = linear_combination(6, &c, &b.matrices);
                assert!(frobenius_distance(&a, &x).unwrap() >= r.distance - 1e-9);
            }
        }
    }
}
