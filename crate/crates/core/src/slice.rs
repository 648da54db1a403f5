//! Matrix coordinates and the lattice model of Grassmannian slices.
//!
//! A slice point is `g = 1 + Σ a_{ij}^{(r)} t^{−r}` with `a_{ij}^{(r)}` allowed only for
//! `max(1, p_j − p_i + 1) ≤ r ≤ p_j`. Its lattice is spanned by the columns of `g · t^p`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::SliceCombinatorics;
use crate::error::Error;
use crate::laurent::Laurent;
use crate::linalg::Echelon;
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::ring;
use crate::series::{Series, Var};

/// Coefficients `r ↦ a_{ij}^{(r)}` of one entry; zero values are never stored.
pub type EntryCoeffs = BTreeMap<usize, Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePoint {
    pub comb: SliceCombinatorics,
    a: Vec<Vec<EntryCoeffs>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    pub shape_ok: bool,
    pub det_is_one: bool,
}

impl SlicePoint {
    pub fn zero(comb: SliceCombinatorics) -> Self {
        let n = comb.n;
        Self { comb, a: vec![vec![EntryCoeffs::new(); n]; n] }
    }

    /// Builds a point from 0-based `a[i][j]` maps, dropping zero coefficients.
    pub fn new(comb: SliceCombinatorics, a: Vec<Vec<EntryCoeffs>>) -> Result<Self, Error> {
        let n = comb.n;
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::BadDimensions(format!("coefficient table is not {n}×{n}")));
        }
        let a = a
            .into_iter()
            .map(|row| {
                row.into_iter().map(|e| e.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect()
            })
            .collect();
        Ok(Self { comb, a })
    }

    pub fn n(&self) -> usize {
        self.comb.n
    }

    /// `a_{ij}^{(r)}` for 1-based `i, j`.
    pub fn get(&self, i: usize, j: usize, r: usize) -> Rational {
        self.a[i - 1][j - 1].get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, r: usize, v: Rational) {
        let entry = &mut self.a[i - 1][j - 1];
        if v.is_zero() {
            entry.remove(&r);
        } else {
            entry.insert(r, v);
        }
    }

    /// Nonzero coefficients of entry `(i, j)` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &EntryCoeffs {
        &self.a[i - 1][j - 1]
    }

    /// Whether `a_{ij}^{(r)}` may be nonzero.
    pub fn allowed(&self, i: usize, j: usize, r: usize) -> bool {
        allowed(&self.comb.pi, i, j, r)
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().flatten().all(BTreeMap::is_empty)
    }

    /// `g(t)` as a matrix of Laurent polynomials.
    pub fn matrix(&self) -> Vec<Vec<Laurent>> {
        let n = self.n();
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        let mut e = Laurent::from_terms(
                            self.entry(i, j).iter().map(|(r, v)| (-(*r as i64), v.clone())),
                        );
                        if i == j {
                            e.add_term(0, Rational::one());
                        }
                        e
                    })
                    .collect()
            })
            .collect()
    }

    pub fn validate(&self) -> Validation {
        let n = self.n();
        let shape_ok = (1..=n).all(|i| (1..=n).all(|j| self.entry(i, j).keys().all(|&r| self.allowed(i, j, r))));
        let det = ring::det(&self.matrix()).expect("n ≥ 2");
        Validation { shape_ok, det_is_one: det == Laurent::one() }
    }

    pub(crate) fn require_shape(&self) -> Result<(), Error> {
        let n = self.n();
        for i in 1..=n {
            for j in 1..=n {
                if let Some(&r) = self.entry(i, j).keys().find(|&&r| !self.allowed(i, j, r)) {
                    return Err(Error::ShapeViolation(format!(
                        "a_{{{i}{j}}}^({r}) is nonzero but p = {:?}",
                        self.comb.pi
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn allowed(pi: &[usize], i: usize, j: usize, r: usize) -> bool {
    let (pi_, pj) = (pi[i - 1], pi[j - 1]);
    r >= 1 && r <= pj && r + pi_ > pj
}

/// Generators of `Λ ⊆ ℂ[t]^n`; `cols[j][i]` is entry `i` of column `j` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeGens {
    pub cols: Vec<Vec<Poly>>,
}

impl LatticeGens {
    pub fn n(&self) -> usize {
        self.cols.len()
    }

    /// Right multiplication by a constant matrix (column operations).
    pub fn mul_constant(&self, c: &[Vec<Rational>]) -> LatticeGens {
        let n = self.n();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        (0..n).fold(Poly::zero(), |acc, k| &acc + &self.cols[k][i].scale(&c[k][j]))
                    })
                    .collect()
            })
            .collect();
        LatticeGens { cols }
    }

    /// Left multiplication by a polynomial matrix, `h · Λ`.
    pub fn left_mul(&self, h: &[Vec<Poly>]) -> LatticeGens {
        let n = self.n();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| (0..n).fold(Poly::zero(), |acc, k| &acc + &(&h[i][k] * &self.cols[j][k])))
                    .collect()
            })
            .collect();
        LatticeGens { cols }
    }
}

/// Columns `t^{p_j} e_j + Σ a_{ij}^{(r)} t^{p_j − r} e_i`.
pub fn point_to_lattice(g: &SlicePoint) -> Result<LatticeGens, Error> {
    g.require_shape()?;
    let n = g.n();
    let cols = (1..=n)
        .map(|j| {
            let pj = g.comb.p(j);
            (1..=n)
                .map(|i| {
                    let mut coeffs = vec![Rational::zero(); pj + 1];
                    if i == j {
                        coeffs[pj] = Rational::one();
                    }
                    for (r, v) in g.entry(i, j) {
                        coeffs[pj - r] += v;
                    }
                    Poly::new(coeffs)
                })
                .collect()
        })
        .collect();
    Ok(LatticeGens { cols })
}

/// `Λ_0 / Λ` truncated at `t^K`, with the pyramid vectors `t^k e_i` (`k < p_i`) as the
/// candidate basis.
pub(crate) struct PyramidQuotient {
    pi: Vec<usize>,
    depth: usize,
    echelon: Echelon,
}

impl PyramidQuotient {
    pub(crate) fn new(lattice: &LatticeGens, pi: &[usize]) -> Result<Self, Error> {
        let n = pi.len();
        if lattice.n() != n || lattice.cols.iter().any(|c| c.len() != n) {
            return Err(Error::BadDimensions(format!("{} generators for {n} rows", lattice.n())));
        }
        let big_n: usize = pi.iter().sum();
        let depth = big_n + pi.iter().copied().max().unwrap_or(0) + 4;
        let dim = n * depth;
        let mut vectors = Vec::with_capacity(n * depth);
        for col in &lattice.cols {
            for s in 0..depth {
                let mut v = vec![Rational::zero(); dim];
                for (i, entry) in col.iter().enumerate() {
                    for (k, c) in entry.coeffs().iter().enumerate() {
                        if k + s < depth {
                            v[i * depth + k + s] = c.clone();
                        }
                    }
                }
                vectors.push(v);
            }
        }
        let is_pyramid = |idx: usize| idx % depth < pi[idx / depth];
        let priority: Vec<usize> =
            (0..dim).filter(|&x| !is_pyramid(x)).chain((0..dim).filter(|&x| is_pyramid(x))).collect();
        let echelon = Echelon::new(vectors, &priority);
        let expected = dim - big_n;
        let pivot_on_pyramid = echelon.pivots().any(is_pyramid);
        if echelon.rank() != expected || pivot_on_pyramid {
            return Err(Error::NotABasis(format!(
                "quotient has dimension {} (expected {big_n}); pyramid vectors {}",
                dim - echelon.rank(),
                if pivot_on_pyramid { "are dependent" } else { "do not span" }
            )));
        }
        Ok(Self { pi: pi.to_vec(), depth, echelon })
    }

    pub(crate) fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.pi.len());
        let mut acc = 0;
        for &p in &self.pi {
            out.push(acc);
            acc += p;
        }
        out
    }

    /// Coordinates of `t^k e_i` (0-based `i`) in the pyramid basis, ordered row by row.
    pub(crate) fn coordinates(&self, i: usize, k: usize) -> Vec<Rational> {
        let n = self.pi.len();
        let mut v = vec![Rational::zero(); n * self.depth];
        if k < self.depth {
            v[i * self.depth + k] = Rational::one();
        }
        self.echelon.reduce(&mut v);
        let mut out = Vec::new();
        for (row, &p) in self.pi.iter().enumerate() {
            out.extend(v[row * self.depth..row * self.depth + p].iter().cloned());
        }
        out
    }
}

/// The unique slice point whose lattice equals the span of `lattice`.
pub fn canonicalize_lattice(lattice: &LatticeGens, comb: &SliceCombinatorics) -> Result<SlicePoint, Error> {
    let quotient = PyramidQuotient::new(lattice, &comb.pi).map_err(|e| match e {
        Error::NotABasis(s) => Error::NotInSlice(s),
        other => other,
    })?;
    let offsets = quotient.offsets();
    let n = comb.n;
    let mut point = SlicePoint::zero(comb.clone());
    for j in 1..=n {
        let pj = comb.p(j);
        let x = quotient.coordinates(j - 1, pj);
        for i in 1..=n {
            for k in 0..comb.p(i) {
                let v = &x[offsets[i - 1] + k];
                if v.is_zero() {
                    continue;
                }
                if k >= pj {
                    return Err(Error::NotInSlice(format!(
                        "t^{pj} e_{j} has a component on t^{k} e_{i} beyond the truncation"
                    )));
                }
                point.set(i, j, pj - k, -v);
            }
        }
    }
    if !point.validate().det_is_one {
        return Err(Error::NotInSlice("reduced representative has det ≠ 1".into()));
    }
    Ok(point)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `a_{ij} = 0` for `i > j`, unit diagonal.
    Upper,
    /// `a_{ij} = 0` for `i < j`, unit diagonal.
    Lower,
    /// Every allowed coefficient drawn; det is generally not 1.
    Free,
    /// A lower sample moved by an upper one and brought back to canonical form.
    ReducedProduct,
}

const COEFF_RANGE: i64 = 3;
pub const RESAMPLE_CAP: usize = 100;

fn draw(comb: &SliceCombinatorics, rng: &mut ChaCha8Rng, keep: impl Fn(usize, usize) -> bool) -> SlicePoint {
    let mut point = SlicePoint::zero(comb.clone());
    let n = comb.n;
    for i in 1..=n {
        for j in 1..=n {
            if !keep(i, j) {
                continue;
            }
            for r in 1..=comb.p(j) {
                if allowed(&comb.pi, i, j, r) {
                    point.set(i, j, r, int(rng.random_range(-COEFF_RANGE..=COEFF_RANGE)));
                }
            }
        }
    }
    point
}

/// Deterministic sample from a seed.
///
/// The reduced-product family draws a lower sample and a constant upper unitriangular
/// matrix `h`, moves the lower lattice by `h` and canonicalizes. Since `t^{−π} h t^π` is
/// invertible over `ℂ[[t]]` the moved lattice stays in the slice; draws that still fail to
/// canonicalize are redrawn up to [`RESAMPLE_CAP`] times, after which the lower sample is
/// returned.
pub fn sample_point(comb: &SliceCombinatorics, seed: u64, family: Family) -> SlicePoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Upper => draw(comb, &mut rng, |i, j| i < j),
        Family::Lower => draw(comb, &mut rng, |i, j| i > j),
        Family::Free => draw(comb, &mut rng, |_, _| true),
        Family::ReducedProduct => {
            let mut lower = draw(comb, &mut rng, |i, j| i > j);
            for _ in 0..RESAMPLE_CAP {
                let h = constant_upper(comb.n, &mut rng);
                let lattice = point_to_lattice(&lower).expect("sampled shape is valid");
                if let Ok(p) = canonicalize_lattice(&lattice.left_mul(&h), comb) {
                    return p;
                }
                lower = draw(comb, &mut rng, |i, j| i > j);
            }
            lower
        }
    }
}

fn constant_upper(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Poly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    core::cmp::Ordering::Equal => Poly::one(),
                    core::cmp::Ordering::Less => Poly::constant(int(rng.random_range(-COEFF_RANGE..=COEFF_RANGE))),
                    core::cmp::Ordering::Greater => Poly::zero(),
                })
                .collect()
        })
        .collect()
}

fn leading_block(i: usize) -> Vec<usize> {
    (0..i).collect()
}

/// `Δ_{1..i, 1..i}(g)` as a Laurent polynomial in `t`.
pub fn principal_minor(g: &SlicePoint, i: usize) -> Laurent {
    if i == 0 {
        return Laurent::one();
    }
    let rows = leading_block(i);
    ring::minor(&g.matrix(), &rows, &rows).expect("nonempty minor")
}

/// `[t^{−r}] Δ_{1..i,1..i}(g)`.
pub fn eval_a(g: &SlicePoint, i: usize, r: usize) -> Rational {
    principal_minor(g, i).coeff(-(r as i64))
}

fn check_node(g: &SlicePoint, i: usize) -> Result<(), Error> {
    if i == 0 || i >= g.n() {
        return Err(Error::IndexOutOfRange(format!("node {i} for n = {}", g.n())));
    }
    Ok(())
}

fn ratio_series(g: &SlicePoint, rows: &[usize], cols: &[usize], i: usize, order: i64) -> Series {
    let m = g.matrix();
    let num = ring::minor(&m, rows, cols).expect("nonempty minor");
    let den = principal_minor(g, i);
    let order_den = order + 1;
    num.to_series(Var::T, order_den)
        .div(&den.to_series(Var::T, order_den))
        .expect("principal minor starts with 1")
        .truncate(order)
}

/// `Δ_{{1..i−1,i+1},{1..i}} / Δ_{1..i,1..i}` expanded down to `t^{−order}`.
pub fn eval_e_series(g: &SlicePoint, i: usize, order: i64) -> Result<Series, Error> {
    check_node(g, i)?;
    let mut rows = leading_block(i - 1);
    rows.push(i);
    Ok(ratio_series(g, &rows, &leading_block(i), i, order))
}

/// `Δ_{{1..i},{1..i−1,i+1}} / Δ_{1..i,1..i}` expanded down to `t^{−order}`.
pub fn eval_f_series(g: &SlicePoint, i: usize, order: i64) -> Result<Series, Error> {
    check_node(g, i)?;
    let mut cols = leading_block(i - 1);
    cols.push(i);
    Ok(ratio_series(g, &leading_block(i), &cols, i, order))
}

fn coefficient(s: &Series, r: usize) -> Result<Rational, Error> {
    s.coeff(-(r as i64)).map_err(|_| Error::OrderTooLarge { requested: r as i64, order: s.order() })
}

/// `[t^{−r}]` of the E-ratio.
pub fn eval_e(g: &SlicePoint, i: usize, r: usize) -> Result<Rational, Error> {
    coefficient(&eval_e_series(g, i, r as i64)?, r)
}

/// `[t^{−s}]` of the F-ratio.
pub fn eval_f(g: &SlicePoint, i: usize, s: usize) -> Result<Rational, Error> {
    coefficient(&eval_f_series(g, i, s as i64)?, s)
}

/// `[t^{−r}]` of a previously expanded series, failing past its order.
pub fn series_coefficient(s: &Series, r: usize) -> Result<Rational, Error> {
    coefficient(s, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hand_point(a22: i64) -> SlicePoint {
        let comb = SliceCombinatorics::from_pi(&[1, 1]).unwrap();
        let mut g = SlicePoint::zero(comb);
        g.set(1, 1, 1, int(1));
        g.set(1, 2, 1, int(1));
        g.set(2, 1, 1, int(-1));
        g.set(2, 2, 1, int(a22));
        g
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn validation_examples() {
        let zero = SlicePoint::zero(SliceCombinatorics::from_pi(&[1, 1]).unwrap());
        assert_eq!(zero.validate(), Validation { shape_ok: true, det_is_one: true });
        assert_eq!(hand_point(-1).validate(), Validation { shape_ok: true, det_is_one: true });
        assert_eq!(hand_point(0).validate(), Validation { shape_ok: true, det_is_one: false });
        let mut bad = hand_point(-1);
        bad.set(1, 1, 2, int(1));
        assert!(!bad.validate().shape_ok);
    }

    #[test]
    fn lattice_examples() {
        let zero = SlicePoint::zero(SliceCombinatorics::from_pi(&[1, 1]).unwrap());
        let l = point_to_lattice(&zero).unwrap();
        assert_eq!(l.cols, [[poly(&[0, 1]), poly(&[])], [poly(&[]), poly(&[0, 1])]]);
        let l = point_to_lattice(&hand_point(-1)).unwrap();
        assert_eq!(l.cols, [[poly(&[1, 1]), poly(&[-1])], [poly(&[1]), poly(&[-1, 1])]]);
        let mut g = SlicePoint::zero(SliceCombinatorics::from_pi(&[1, 1, 1]).unwrap());
        g.set(1, 3, 1, int(5));
        assert_eq!(point_to_lattice(&g).unwrap().cols[2], [poly(&[5]), poly(&[]), poly(&[0, 1])]);
    }

    #[test]
    fn canonical_round_trip_and_rejection() {
        let g = hand_point(-1);
        let l = point_to_lattice(&g).unwrap();
        assert_eq!(canonicalize_lattice(&l, &g.comb).unwrap(), g);
        let mixed = l.mul_constant(&[vec![int(1), int(2)], vec![int(0), int(1)]]);
        assert_eq!(canonicalize_lattice(&mixed, &g.comb).unwrap(), g);
        let wrong = LatticeGens { cols: vec![vec![poly(&[0, 0, 1]), poly(&[])], vec![poly(&[]), poly(&[1])]] };
        assert!(matches!(canonicalize_lattice(&wrong, &g.comb), Err(Error::NotInSlice(_))));
        assert!(matches!(canonicalize_lattice(&point_to_lattice(&hand_point(0)).unwrap(), &g.comb), Err(Error::NotInSlice(_))));
    }

    #[test]
    fn evaluations_on_hand_point() {
        let g = hand_point(-1);
        assert_eq!(eval_a(&g, 1, 1), int(1));
        assert_eq!(eval_e(&g, 1, 1).unwrap(), int(-1));
        assert_eq!(eval_f(&g, 1, 1).unwrap(), int(1));
        assert_eq!(eval_a(&g, 1, 2), int(0));
        assert!(matches!(eval_e(&g, 2, 1), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn samplers_are_deterministic_and_shaped() {
        let comb = SliceCombinatorics::from_pi(&[1, 2]).unwrap();
        for family in [Family::Upper, Family::Lower, Family::Free, Family::ReducedProduct] {
            let a = sample_point(&comb, 42, family);
            assert_eq!(a, sample_point(&comb, 42, family));
            assert!(a.validate().shape_ok);
        }
        let up = sample_point(&comb, 7, Family::Upper);
        assert!(up.entry(2, 1).is_empty());
        assert!(up.validate().det_is_one);
        let low = sample_point(&comb, 7, Family::Lower);
        assert!(low.entry(1, 2).is_empty());
        assert!(low.validate().det_is_one);
    }
}
