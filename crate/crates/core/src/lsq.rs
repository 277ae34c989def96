//! Generic equality-constrained least squares, used as a third, independent
//! route to the tie-space projection.

use nalgebra::{DMatrix, DVector};

use crate::error::{PcmError, Result};
use crate::pcm::AdditivePcm;
use crate::tie_space::AlternativePair;

/// Minimizes `||M x - b||^2` subject to `C x = d` by solving the KKT system
///
/// ```text
/// [ M^T M  C^T ] [x]   [M^T b]
/// [ C      0   ] [λ] = [  d  ]
/// ```
pub fn equality_constrained_least_squares(
    m: &DMatrix<f64>,
    b: &DVector<f64>,
    c: &DMatrix<f64>,
    d: &DVector<f64>,
) -> Result<DVector<f64>> {
    let vars = m.ncols();
    let cons = c.nrows();
    if m.nrows() != b.len() || c.ncols() != vars || d.len() != cons {
        return Err(PcmError::DimensionMismatch {
            left: vars,
            right: c.ncols(),
        });
    }
    let size = vars + cons;
    let mut kkt = DMatrix::<f64>::zeros(size, size);
    kkt.view_mut((0, 0), (vars, vars)).copy_from(&(m.transpose() * m));
    kkt.view_mut((0, vars), (vars, cons)).copy_from(&c.transpose());
    kkt.view_mut((vars, 0), (cons, vars)).copy_from(c);
    let mut rhs = DVector::<f64>::zeros(size);
    rhs.rows_mut(0, vars).copy_from(&(m.transpose() * b));
    rhs.rows_mut(vars, cons).copy_from(d);
    let sol = kkt.lu().solve(&rhs).ok_or(PcmError::SingularSystem)?;
    Ok(sol.rows(0, vars).into_owned())
}

/// Tie-space projection posed over the strict upper triangle.
///
/// The Frobenius objective counts each upper entry twice, hence the `sqrt(2)`
/// scaling; the single constraint states that rows `i` and `j` have equal sums.
pub fn least_squares_tie_projection(a: &AdditivePcm, pair: AlternativePair) -> Result<AdditivePcm> {
    let n = pair.n();
    if a.dim() != n {
        return Err(PcmError::DimensionMismatch {
            left: a.dim(),
            right: n,
        });
    }
    let coords: Vec<(usize, usize)> = (0..n)
        .flat_map(|q| (q + 1..n).map(move |r| (q, r)))
        .collect();
    let vars = coords.len();
    let s = std::f64::consts::SQRT_2;
    let m = DMatrix::<f64>::identity(vars, vars) * s;
    let b = DVector::from_iterator(vars, coords.iter().map(|&(q, r)| s * a.get(q, r)));
    let (i, j) = (pair.i(), pair.j());
    let indicator = |x: usize, y: usize| if x == y { 1.0 } else { 0.0 };
    let c = DMatrix::from_iterator(
        1,
        vars,
        coords
            .iter()
            .map(|&(q, r)| indicator(q, i) - indicator(r, i) - indicator(q, j) + indicator(r, j)),
    );
    let d = DVector::zeros(1);
    let x = equality_constrained_least_squares(&m, &b, &c, &d)?;
    let mut it = x.iter();
    Ok(AdditivePcm::from_upper_fn(n, |_, _| *it.next().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projects_a_point_onto_a_line() {
        // minimize (x-1)^2 + (y-3)^2 subject to x = y
        let m = DMatrix::identity(2, 2);
        let b = DVector::from_vec(vec![1.0, 3.0]);
        let c = DMatrix::from_row_slice(1, 2, &[1.0, -1.0]);
        let d = DVector::zeros(1);
        let x = equality_constrained_least_squares(&m, &b, &c, &d).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn redundant_constraints_are_singular() {
        let m = DMatrix::identity(2, 2);
        let b = DVector::from_vec(vec![1.0, 3.0]);
        let c = DMatrix::from_row_slice(2, 2, &[1.0, -1.0, 1.0, -1.0]);
        let d = DVector::zeros(2);
        assert_eq!(
            equality_constrained_least_squares(&m, &b, &c, &d),
            Err(PcmError::SingularSystem)
        );
    }

    #[test]
    fn two_by_two_ties_to_zero() {
        let a = AdditivePcm::from_upper_fn(2, |_, _| 4.0);
        let pair = AlternativePair::new(0, 1, 2).unwrap();
        let x = least_squares_tie_projection(&a, pair).unwrap();
        assert!(x.get(0, 1).abs() < 1e-12);
    }
}
