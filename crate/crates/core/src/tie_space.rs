//! The tie space of a pair of alternatives and its integer basis.
//!
//! For a fixed pair `(i, j)` the tie space is the linear subspace of additive
//! PCMs whose row sums for `i` and `j` coincide, i.e. whose row-mean weights
//! rank the two alternatives equal. It has codimension one, so its dimension
//! is `(n^2 - n)/2 - 1`.
//!
//! The basis built here consists of five generator families:
//!
//! * `C^{qr}` for every `(q, r)` with `q < r` disjoint from `{i, j}`,
//! * `D^p` for `p < i`,
//! * `E^p` for `p < j` (with a doubled `(j, n)` entry when `p = i`),
//! * `F^p` for `i < p <= n`, `p != j`,
//! * `G^p` for `j < p < n`,
//!
//! each a sparse matrix with entries in `{-2, -1, 0, 1, 2}`. The construction
//! assumes `i < j < n`; pairs touching the last index are first relabeled by
//! a permutation (see [`crate::projection::Relabeling`]).
//!
//! Indices are 0-based in code. `Display` implementations render them 1-based.

use std::fmt;

use crate::error::{PcmError, Result};
use crate::matrix::SquareMatrix;
use crate::pcm::AdditivePcm;

/// An unordered pair of distinct alternatives, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternativePair {
    i: usize,
    j: usize,
    n: usize,
}

impl AlternativePair {
    /// 0-based constructor; the two indices may be given in either order.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == b || a >= n || b >= n || n < 2 {
            return Err(PcmError::InvalidPair { i: a, j: b, n });
        }
        Ok(Self {
            i: a.min(b),
            j: a.max(b),
            n,
        })
    }

    /// 1-based constructor matching user-facing notation.
    pub fn from_one_based(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(PcmError::InvalidPair {
                i: a.wrapping_sub(1),
                j: b.wrapping_sub(1),
                n,
            });
        }
        Self::new(a - 1, b - 1, n)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, k: usize) -> bool {
        k == self.i || k == self.j
    }

    /// The other member of the pair.
    pub fn partner(&self, k: usize) -> Option<usize> {
        if k == self.i {
            Some(self.j)
        } else if k == self.j {
            Some(self.i)
        } else {
            None
        }
    }

    /// All pairs `i < j` for `n` alternatives, lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = AlternativePair> {
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| AlternativePair { i, j, n }))
    }
}

impl fmt::Display for AlternativePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i + 1, self.j + 1)
    }
}

/// Label of a basis generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    C { q: usize, r: usize },
    D(usize),
    E(usize),
    F(usize),
    G(usize),
}

impl Generator {
    pub fn kind(&self) -> char {
        match self {
            Generator::C { .. } => 'C',
            Generator::D(_) => 'D',
            Generator::E(_) => 'E',
            Generator::F(_) => 'F',
            Generator::G(_) => 'G',
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::C { q, r } => write!(f, "C^{{{},{}}}", q + 1, r + 1),
            Generator::D(p) | Generator::E(p) | Generator::F(p) | Generator::G(p) => {
                write!(f, "{}^{{{}}}", self.kind(), p + 1)
            }
        }
    }
}

/// Index pairs `q < r` disjoint from the chosen pair, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSet {
    pub pairs: Vec<(usize, usize)>,
}

impl ZSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn z_set(pair: AlternativePair) -> ZSet {
    let n = pair.n;
    let pairs = (0..n)
        .flat_map(|q| (q + 1..n).map(move |r| (q, r)))
        .filter(|&(q, r)| !pair.contains(q) && !pair.contains(r))
        .collect();
    ZSet { pairs }
}

pub fn tie_space_dimension(n: usize) -> usize {
    (n * n - n) / 2 - 1
}

/// `sum_k a_ik - sum_k a_jk`
pub fn weight_sum_gap(a: &AdditivePcm, pair: AlternativePair) -> f64 {
    a.row_sum(pair.i) - a.row_sum(pair.j)
}

/// True if the row sums of `i` and `j` agree within `tol * n`.
pub fn is_tie_equating(a: &AdditivePcm, pair: AlternativePair, tol: f64) -> bool {
    a.dim() == pair.n && weight_sum_gap(a, pair).abs() <= tol * pair.n as f64
}

fn require_canonical(pair: AlternativePair) -> Result<()> {
    if pair.j == pair.n - 1 {
        return Err(PcmError::PairRequiresRelabeling {
            i: pair.i,
            j: pair.j,
            n: pair.n,
        });
    }
    Ok(())
}

fn put(m: &mut SquareMatrix, k: usize, l: usize, v: f64) {
    m.set(k, l, v);
    m.set(l, k, -v);
}

/// Builds one generator matrix for the pair.
pub fn generator_matrix(generator: Generator, pair: AlternativePair) -> Result<AdditivePcm> {
    require_canonical(pair)?;
    let AlternativePair { i, j, n } = pair;
    let last = n - 1;
    let mut m = SquareMatrix::zeros(n);
    match generator {
        Generator::C { q, r } => {
            if !(q < r && r < n && !pair.contains(q) && !pair.contains(r)) {
                return Err(PcmError::ParamOutOfRange { kind: "C" });
            }
            put(&mut m, q, r, 1.0);
        }
        Generator::D(p) => {
            if p >= i {
                return Err(PcmError::ParamOutOfRange { kind: "D" });
            }
            put(&mut m, p, i, 1.0);
            put(&mut m, last, j, 1.0);
        }
        Generator::E(p) => {
            if p >= j {
                return Err(PcmError::ParamOutOfRange { kind: "E" });
            }
            put(&mut m, p, j, 1.0);
            put(&mut m, j, last, if p == i { 2.0 } else { 1.0 });
        }
        Generator::F(p) => {
            if p <= i || p == j || p >= n {
                return Err(PcmError::ParamOutOfRange { kind: "F" });
            }
            put(&mut m, i, p, 1.0);
            put(&mut m, j, last, 1.0);
        }
        Generator::G(p) => {
            if p <= j || p >= last {
                return Err(PcmError::ParamOutOfRange { kind: "G" });
            }
            put(&mut m, j, p, 1.0);
            put(&mut m, last, j, 1.0);
        }
    }
    Ok(AdditivePcm::from_matrix_unchecked(m))
}

/// Generator labels in basis order: all `C` (lexicographic), then `D`, `E`,
/// `F` (below `j`, then above), `G`.
pub fn basis_labels(pair: AlternativePair) -> Result<Vec<Generator>> {
    require_canonical(pair)?;
    let AlternativePair { i, j, n } = pair;
    let mut labels: Vec<Generator> = z_set(pair)
        .pairs
        .into_iter()
        .map(|(q, r)| Generator::C { q, r })
        .collect();
    labels.extend((0..i).map(Generator::D));
    labels.extend((0..j).map(Generator::E));
    labels.extend((i + 1..j).map(Generator::F));
    labels.extend((j + 1..n).map(Generator::F));
    labels.extend((j + 1..n - 1).map(Generator::G));
    Ok(labels)
}

/// Ordered basis of the tie space.
#[derive(Debug, Clone)]
pub struct TieBasis {
    pub pair: AlternativePair,
    pub matrices: Vec<AdditivePcm>,
    pub labels: Vec<Generator>,
}

impl TieBasis {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

pub fn tie_basis(pair: AlternativePair) -> Result<TieBasis> {
    let labels = basis_labels(pair)?;
    let matrices = labels
        .iter()
        .map(|&g| generator_matrix(g, pair))
        .collect::<Result<Vec<_>>>()?;
    Ok(TieBasis {
        pair,
        matrices,
        labels,
    })
}

/// Coordinates of a tie-space member in [`tie_basis`] order.
///
/// Each generator owns one free upper-triangle entry: `a_qr` for `C^{qr}`,
/// `a_pi` for `D^p`, `a_pj` for `E^p`, `a_ip` for `F^p` and `a_jp` for `G^p`.
/// The remaining entry `a_jn` is implied by the tie constraint.
pub fn basis_coordinates(a: &AdditivePcm, pair: AlternativePair) -> Result<Vec<f64>> {
    let (i, j) = (pair.i, pair.j);
    Ok(basis_labels(pair)?
        .into_iter()
        .map(|g| match g {
            Generator::C { q, r } => a.get(q, r),
            Generator::D(p) => a.get(p, i),
            Generator::E(p) => a.get(p, j),
            Generator::F(p) => a.get(i, p),
            Generator::G(p) => a.get(j, p),
        })
        .collect())
}

/// `sum_k coeffs[k] * matrices[k]`
pub fn linear_combination(n: usize, coeffs: &[f64], matrices: &[AdditivePcm]) -> AdditivePcm {
    let mut out = SquareMatrix::zeros(n);
    for (c, m) in coeffs.iter().zip(matrices) {
        out.axpy(*c, m.matrix());
    }
    AdditivePcm::from_matrix_unchecked(out)
}
