#![allow(dead_code)]

#[path = "../../src/fixture_data.rs"]
mod data;

pub use data::*;

use pcmtie::{AdditivePcm, SquareMatrix};
use rand::Rng;

pub fn additive(rows: &[[f64; 5]; 5]) -> AdditivePcm {
    AdditivePcm::from_upper_fn(5, |q, r| rows[q][r])
}

pub fn reference5() -> AdditivePcm {
    additive(&REFERENCE5)
}

pub fn shifted_family(eps: f64) -> AdditivePcm {
    AdditivePcm::from_upper_fn(3, |q, r| match (q, r) {
        (0, 1) => 1.0 + eps,
        (0, 2) => -1.0,
        _ => 1.0,
    })
}

pub fn random_additive(rng: &mut impl Rng, n: usize) -> AdditivePcm {
    AdditivePcm::from_upper_fn(n, |_, _| rng.gen_range(-10.0..10.0))
}

pub fn max_abs_diff(a: &SquareMatrix, b: &SquareMatrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
