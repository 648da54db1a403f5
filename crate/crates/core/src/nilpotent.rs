//! Pyramids, the transverse slice of block matrices and the lattice-to-matrix slice map.
//!
//! With `π = (2,3,4)` the pyramid is
//!
//! ```text
//!       2 1
//!     5 4 3
//!   9 8 7 6
//! ```
//!
//! and `e_π` sends each box to its left neighbour. Box `offset_i + k + 1` stands for
//! `t^k e_i`, so `e_π` is multiplication by `t` on `Λ_0 / t^π Λ_0`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinatorics::SliceCombinatorics;
use crate::error::Error;
use crate::linalg::{is_zero_matrix, mat_mul, rank, zeros, QMatrix};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::slice::{point_to_lattice, PyramidQuotient, SlicePoint};

/// A right-justified pyramid; row `i` (1-based, top first) holds `p_i` boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pyramid {
    pi: Vec<usize>,
    offsets: Vec<usize>,
}

impl Pyramid {
    pub fn new(pi: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(pi.len());
        let mut acc = 0;
        for &p in pi {
            offsets.push(acc);
            acc += p;
        }
        Self { pi: pi.to_vec(), offsets }
    }

    pub fn size(&self) -> usize {
        self.pi.iter().sum()
    }

    pub fn width(&self) -> usize {
        self.pi.iter().copied().max().unwrap_or(0)
    }

    /// 0-based offset of row `i` (1-based).
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i - 1]
    }

    /// Label of the box at `(row, col)`, columns counted from the left edge of the widest row.
    pub fn label(&self, row: usize, col: usize) -> Option<usize> {
        let p = *self.pi.get(row.checked_sub(1)?)?;
        let w = self.width();
        (col >= 1 && col <= w && col + p > w).then(|| self.offsets[row - 1] + (w - col) + 1)
    }

    pub fn position(&self, label: usize) -> Option<(usize, usize)> {
        let row = (1..=self.pi.len()).find(|&i| label > self.offsets[i - 1] && label <= self.offsets[i - 1] + self.pi[i - 1])?;
        Some((row, self.width() + 1 - (label - self.offsets[row - 1])))
    }

    /// Pairs `(k, ℓ)` with box `k` immediately left of box `ℓ`.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.pi.iter().enumerate() {
            for k in 1..p {
                let right = self.offsets[i] + k;
                out.push((right + 1, right));
            }
        }
        out
    }
}

/// An `N×N` matrix on the basis indexed by pyramid boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceMatrix {
    pub pi: Vec<usize>,
    pub entries: QMatrix,
}

impl SliceMatrix {
    pub fn new(pi: Vec<usize>, entries: QMatrix) -> Result<Self, Error> {
        let size: usize = pi.iter().sum();
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::BadDimensions(format!("matrix is not {size}×{size}")));
        }
        Ok(Self { pi, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

pub fn pyramid_nilpotent(pi: &[usize]) -> SliceMatrix {
    let pyr = Pyramid::new(pi);
    let mut m = zeros(pyr.size(), pyr.size());
    for (k, l) in pyr.adjacent_pairs() {
        m[k - 1][l - 1] = crate::rational::int(1);
    }
    SliceMatrix { pi: pi.to_vec(), entries: m }
}

/// Block formula: row `k` (0-based) of the final column of block `(i, j)` is `−a_{ij}^{(p_j − k)}`.
pub fn mv_map(g: &SlicePoint) -> Result<SliceMatrix, Error> {
    mv_map_with_sign(g, false)
}

/// [`mv_map`] with the final-column sign optionally flipped; only for harness self-tests.
#[doc(hidden)]
pub fn mv_map_with_sign(g: &SlicePoint, flip: bool) -> Result<SliceMatrix, Error> {
    g.require_shape()?;
    let pi = &g.comb.pi;
    let mut x = pyramid_nilpotent(pi);
    let pyr = Pyramid::new(pi);
    let n = g.n();
    for j in 1..=n {
        let pj = pi[j - 1];
        if pj == 0 {
            continue;
        }
        let col = pyr.offset(j) + pj - 1;
        for i in 1..=n {
            for k in 0..pi[i - 1].min(pj) {
                let v = g.get(i, j, pj - k);
                x.entries[pyr.offset(i) + k][col] = if flip { v } else { -v };
            }
        }
    }
    Ok(x)
}

/// Multiplication by `t` on `Λ_0 / Λ` in the pyramid basis, by elimination against the lattice.
pub fn mv_map_oracle(g: &SlicePoint) -> Result<SliceMatrix, Error> {
    let lattice = point_to_lattice(g)?;
    let pi = &g.comb.pi;
    let quotient = PyramidQuotient::new(&lattice, pi)?;
    let pyr = Pyramid::new(pi);
    let size = pyr.size();
    let mut m = zeros(size, size);
    for (j, &pj) in pi.iter().enumerate() {
        for k in 0..pj {
            let image = quotient.coordinates(j, k + 1);
            for (row, v) in image.into_iter().enumerate() {
                m[row][pyr.offsets[j] + k] = v;
            }
        }
    }
    Ok(SliceMatrix { pi: pi.clone(), entries: m })
}

fn require_slice_shape(x: &SliceMatrix) -> Result<(), Error> {
    let pyr = Pyramid::new(&x.pi);
    let base = pyramid_nilpotent(&x.pi);
    let mut free = zeros(x.size(), x.size());
    for (j, &pj) in x.pi.iter().enumerate() {
        if pj == 0 {
            continue;
        }
        for (i, &p) in x.pi.iter().enumerate() {
            for k in 0..p.min(pj) {
                free[pyr.offsets[i] + k][pyr.offsets[j] + pj - 1] = Rational::one();
            }
        }
    }
    for (r, row) in x.entries.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if free[r][c].is_zero() && *v != base.entries[r][c] {
                return Err(Error::ShapeViolation(format!("entry ({}, {}) is outside the slice", r + 1, c + 1)));
            }
        }
    }
    Ok(())
}

/// The slice point with `mv_map(g) = X`.
pub fn mv_inverse(x: &SliceMatrix) -> Result<SlicePoint, Error> {
    require_slice_shape(x)?;
    require_nilpotent(&x.entries)?;
    slice_coordinates(x)
}

/// Reads the coefficients off the final block columns without asking for nilpotency.
pub fn slice_coordinates(x: &SliceMatrix) -> Result<SlicePoint, Error> {
    require_slice_shape(x)?;
    let comb = SliceCombinatorics::from_pi(&x.pi)?;
    let pyr = Pyramid::new(&x.pi);
    let mut g = SlicePoint::zero(comb);
    let n = x.pi.len();
    for j in 1..=n {
        let pj = x.pi[j - 1];
        if pj == 0 {
            continue;
        }
        let col = pyr.offset(j) + pj - 1;
        for i in 1..=n {
            for k in 0..x.pi[i - 1].min(pj) {
                g.set(i, j, pj - k, -&x.entries[pyr.offset(i) + k][col]);
            }
        }
    }
    Ok(g)
}

fn require_nilpotent(x: &QMatrix) -> Result<(), Error> {
    let mut power = x.clone();
    for _ in 1..x.len() {
        if is_zero_matrix(&power) {
            return Ok(());
        }
        power = mat_mul(&power, x);
    }
    if is_zero_matrix(&power) {
        Ok(())
    } else {
        Err(Error::NotNilpotent)
    }
}

/// Jordan type from the ranks of successive powers.
pub fn jordan_type(x: &QMatrix) -> Result<Partition, Error> {
    require_nilpotent(x)?;
    let mut ranks = Vec::from([x.len()]);
    let mut power = x.clone();
    while *ranks.last().expect("nonempty") > 0 {
        ranks.push(rank(&power));
        power = mat_mul(&power, x);
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(columns).map(|p| p.transpose())
}

pub fn orbit_leq_check(x: &QMatrix, tau: &Partition) -> Result<bool, Error> {
    jordan_type(x)?.dominance_leq(tau)
}
