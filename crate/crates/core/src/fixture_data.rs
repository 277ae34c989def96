// Worked-example matrices shared by unit and integration tests.
// Rows are 1-based alternatives written in order; values as printed.
#![allow(dead_code)]

pub const REFERENCE5: [[f64; 5]; 5] = [
    [0.0, -5.0, 2.0, 0.0, 4.0],
    [5.0, 0.0, 2.0, 5.0, -6.0],
    [-2.0, -2.0, 0.0, 4.0, -9.0],
    [0.0, -5.0, -4.0, 0.0, -8.0],
    [-4.0, 6.0, 9.0, 8.0, 0.0],
];

/// Projection of `REFERENCE5` onto the (2,3) tie space as printed. Entry (1,3)
/// is printed as -0.5, which breaks antisymmetry against (3,1) = -0.5.
pub const REFERENCE5_PROJECTION_PRINTED: [[f64; 5]; 5] = [
    [0.0, -3.5, -0.5, 0.0, 4.0],
    [3.5, 0.0, -1.0, 3.5, -7.5],
    [-0.5, 1.0, 0.0, 5.5, -7.5],
    [0.0, -3.5, -5.5, 0.0, -8.0],
    [-4.0, 7.5, 7.5, 8.0, 0.0],
];

/// The same projection with (1,3) = 0.5, as implied by the printed
/// coefficients and weights.
pub const REFERENCE5_PROJECTION: [[f64; 5]; 5] = [
    [0.0, -3.5, 0.5, 0.0, 4.0],
    [3.5, 0.0, -1.0, 3.5, -7.5],
    [-0.5, 1.0, 0.0, 5.5, -7.5],
    [0.0, -3.5, -5.5, 0.0, -8.0],
    [-4.0, 7.5, 7.5, 8.0, 0.0],
];

pub const REFERENCE5_ABS_DIFF_PRINTED: [[f64; 5]; 5] = [
    [0.0, 1.5, 2.5, 0.0, 0.0],
    [1.5, 0.0, 3.0, 1.5, 1.5],
    [1.5, 3.0, 0.0, 1.5, 1.5],
    [0.0, 1.5, 1.5, 0.0, 0.0],
    [0.0, 1.5, 1.5, 0.0, 0.0],
];

/// Tie basis B^1..B^9 for n = 5, pair (2,3).
pub const TIE_BASIS_5_23: [[[f64; 5]; 5]; 9] = [
    // C^{14}
    [
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    // C^{15}
    [
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 0.0],
    ],
    // C^{45}
    [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, -1.0, 0.0],
    ],
    // D^1
    [
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
    ],
    // E^1
    [
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0, 0.0],
    ],
    // E^2
    [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0, 2.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -2.0, 0.0, 0.0],
    ],
    // F^4
    [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, -1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0, 0.0],
    ],
    // F^5
    [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, -1.0, 0.0, 0.0],
    ],
    // G^4
    [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, -1.0],
        [0.0, 0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
    ],
];

const H: f64 = 1.0 / 2.0;
const T: f64 = 2.0 / 3.0;
const S: f64 = 1.0 / 7.0;
const E: f64 = 1.0 / 8.0;
const N: f64 = 1.0 / 9.0;

/// Orthogonalized H^5..H^9 for the same basis (H^1..H^4 equal B^1..B^4).
pub const ORTHOGONAL_5_23_H5_TO_H9: [[[f64; 5]; 5]; 5] = [
    [
        [0.0, H, 1.0, 0.0, 0.0],
        [-H, 0.0, 0.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, H],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -H, 0.0, 0.0],
    ],
    [
        [0.0, T, -T, 0.0, 0.0],
        [-T, 0.0, 1.0, 0.0, 0.0],
        [T, -1.0, 0.0, 0.0, T],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -T, 0.0, 0.0],
    ],
    [
        [0.0, S, -S, 0.0, 0.0],
        [-S, 0.0, -2.0 * S, 1.0, 0.0],
        [S, 2.0 * S, 0.0, 0.0, S],
        [0.0, -1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -S, 0.0, 0.0],
    ],
    [
        [0.0, E, -E, 0.0, 0.0],
        [-E, 0.0, -2.0 * E, -E, 1.0],
        [E, 2.0 * E, 0.0, 0.0, E],
        [0.0, E, 0.0, 0.0, 0.0],
        [0.0, -1.0, -E, 0.0, 0.0],
    ],
    [
        [0.0, -N, N, 0.0, 0.0],
        [N, 0.0, 2.0 * N, N, N],
        [-N, -2.0 * N, 0.0, 1.0, -N],
        [0.0, -N, -1.0, 0.0, 0.0],
        [0.0, -N, N, 0.0, 0.0],
    ],
];

/// Coefficient table for REFERENCE5 as printed: <A,H^k>, <H^k,H^k>, epsilon_k.
pub const REFERENCE5_INNER_PRINTED: [f64; 9] =
    [0.0, 8.0, -16.0, 8.0, -10.0, -17.3333, 4.285714, -18.25, 12.22222];
pub const REFERENCE5_NORMS_PRINTED: [f64; 9] =
    [2.0, 2.0, 2.0, 4.0, 3.0, 4.666666, 2.285714, 2.25, 2.222222];
pub const REFERENCE5_COEFFS_PRINTED: [f64; 9] =
    [0.0, 4.0, -8.0, 2.0, -3.33333, -3.71429, 1.875, -8.11111, 5.5];

pub const REFERENCE5_WEIGHTS: [f64; 5] = [0.2, 1.2, -1.8, -3.4, 3.8];
pub const REFERENCE5_PROJECTED_WEIGHTS: [f64; 5] = [0.2, -0.3, -0.3, -3.4, 3.8];
