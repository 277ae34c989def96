#[path = "fixture_data.rs"]
mod data;

pub(crate) use data::*;

use crate::matrix::SquareMatrix;
use crate::pcm::AdditivePcm;

fn additive(rows: &[[f64; 5]; 5]) -> AdditivePcm {
    AdditivePcm::from_matrix_unchecked(SquareMatrix::from_rows(rows).unwrap())
}

pub(crate) fn reference5() -> AdditivePcm {
    additive(&REFERENCE5)
}

pub(crate) fn reference5_projection() -> AdditivePcm {
    additive(&REFERENCE5_PROJECTION)
}

pub(crate) fn printed_tie_basis() -> Vec<AdditivePcm> {
    TIE_BASIS_5_23.iter().map(additive).collect()
}

/// 3x3 family with a_12 = 1 + eps, a_13 = -1, a_23 = 1.
pub(crate) fn shifted_family(eps: f64) -> AdditivePcm {
    AdditivePcm::from_upper_fn(3, |q, r| match (q, r) {
        (0, 1) => 1.0 + eps,
        (0, 2) => -1.0,
        _ => 1.0,
    })
}

pub(crate) fn random_additive(rng: &mut impl rand::Rng, n: usize) -> AdditivePcm {
    AdditivePcm::from_upper_fn(n, |_, _| rng.gen_range(-10.0..10.0))
}

pub(crate) fn max_abs_diff(a: &SquareMatrix, b: &SquareMatrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
