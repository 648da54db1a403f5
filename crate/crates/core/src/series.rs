//! Truncated Laurent series in a descending variable and matrices of them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{pretty, Rational};
use crate::ring::{self, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::T => "t",
        }
    }
}

/// `Σ_{e ≤ top} c_e x^e`, with coefficients known exactly for `e ≥ −order`.
///
/// Storage index `k` holds the coefficient of `x^{top−k}`. Equality compares coefficients
/// down to the smaller of the two orders.
#[derive(Debug, Clone)]
pub struct Series {
    var: Var,
    top: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl Series {
    pub fn new(var: Var, top: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        let len = (top + order + 1).max(0) as usize;
        coeffs.resize(len, Rational::zero());
        Self { var, top, coeffs, order }
    }

    pub fn zero(var: Var, order: i64) -> Self {
        Self::new(var, 0, Vec::new(), order)
    }

    pub fn one(var: Var, order: i64) -> Self {
        Self::constant(var, Rational::one(), order)
    }

    pub fn constant(var: Var, c: Rational, order: i64) -> Self {
        Self::new(var, 0, vec![c], order)
    }

    /// `c · x^e`.
    pub fn monomial(var: Var, c: Rational, e: i64, order: i64) -> Self {
        Self::new(var, e, vec![c], order)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exponent of the first stored coefficient (not necessarily nonzero).
    pub fn top(&self) -> i64 {
        self.top
    }

    /// Stored coefficients from `x^top` down to `x^{−order}`.
    pub fn raw_coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exponent of the highest known nonzero coefficient.
    pub fn lead(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|k| self.top - k as i64)
    }

    pub fn coeff(&self, e: i64) -> Result<Rational, Error> {
        if e < -self.order {
            return Err(Error::IndeterminateComparison { requested: e, order: self.order });
        }
        if e > self.top {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(self.top - e) as usize].clone())
    }

    /// Coefficients of `x^hi, x^{hi−1}, …, x^{−order}`.
    pub fn coeffs_from(&self, hi: i64, order: i64) -> Result<Vec<Rational>, Error> {
        (-order..=hi).rev().map(|e| self.coeff(e)).collect()
    }

    /// Forgets coefficients below `x^{−order}`; a larger order is clamped to the current one.
    pub fn truncate(&self, order: i64) -> Series {
        let order = order.min(self.order);
        Series::new(self.var, self.top, self.coeffs.clone(), order)
    }

    fn same_var(&self, other: &Series) {
        assert_eq!(self.var, other.var, "series in different variables");
    }

    fn combine(&self, other: &Series, f: impl Fn(Rational, Rational) -> Rational) -> Series {
        self.same_var(other);
        let order = self.order.min(other.order);
        let top = self.top.max(other.top);
        let len = (top + order + 1).max(0);
        let coeffs = (0..len)
            .map(|k| {
                let e = top - k;
                f(self.coeff(e).expect("within order"), other.coeff(e).expect("within order"))
            })
            .collect();
        Series::new(self.var, top, coeffs, order)
    }

    pub fn add(&self, other: &Series) -> Series {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Series) -> Series {
        self.same_var(other);
        let (ka, kb) = (self.order, other.order);
        let (la, lb) = (self.lead(), other.lead());
        let order = match (la, lb) {
            (Some(ta), Some(tb)) => (ka - tb).min(kb - ta),
            (None, Some(tb)) => ka - tb,
            (Some(ta), None) => kb - ta,
            (None, None) => ka + kb + 1,
        };
        let (Some(ta), Some(tb)) = (la, lb) else {
            return Series::zero(self.var, order);
        };
        let top = ta + tb;
        let len = (top + order + 1).max(0) as usize;
        let a_off = (self.top - ta) as usize;
        let b_off = (other.top - tb) as usize;
        let mut out = vec![Rational::zero(); len];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for i in 0..=k {
                let a = &self.coeffs[a_off + i];
                if a.is_zero() {
                    continue;
                }
                let b = &other.coeffs[b_off + k - i];
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            *slot = acc;
        }
        Series::new(self.var, top, out, order)
    }

    /// Multiplicative inverse; `None` if no nonzero coefficient is known.
    pub fn inv(&self) -> Option<Series> {
        let d = self.lead()?;
        let off = (self.top - d) as usize;
        let a = &self.coeffs[off..];
        let order = self.order + 2 * d;
        let len = (order - d + 1).max(0) as usize;
        let a0_inv = Rational::one() / &a[0];
        let mut b: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                b.push(a0_inv.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k.min(a.len() - 1) {
                if !a[j].is_zero() {
                    acc += &a[j] * &b[k - j];
                }
            }
            b.push(-acc * &a0_inv);
        }
        Some(Series::new(self.var, -d, b, order))
    }

    pub fn div(&self, other: &Series) -> Option<Series> {
        Some(self.mul(&other.inv()?))
    }

    /// Coefficientwise equality on exponents `≥ −order`; fails beyond either precision.
    pub fn eq_to(&self, other: &Series, order: i64) -> Result<bool, Error> {
        let known = self.order.min(other.order);
        if order > known {
            return Err(Error::IndeterminateComparison { requested: -order, order: known });
        }
        let top = self.top.max(other.top);
        for e in (-order..=top).rev() {
            if self.coeff(e)? != other.coeff(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First exponent `≥ −order` where the two differ.
    pub fn first_difference(&self, other: &Series, order: i64) -> Result<Option<i64>, Error> {
        let top = self.top.max(other.top);
        for e in (-order..=top).rev() {
            if self.coeff(e)? != other.coeff(e)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var
            && matches!(self.first_difference(other, self.order.min(other.order)), Ok(None))
    }
}

impl Eq for Series {}

impl Ring for Series {
    fn zero_like(&self) -> Self {
        Series::zero(self.var, self.order)
    }
    fn one_like(&self) -> Self {
        Series::one(self.var, self.order)
    }
    fn add(&self, other: &Self) -> Self {
        Series::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Series::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Series::mul(self, other)
    }
    fn neg(&self) -> Self {
        Series::neg(self)
    }
    fn is_zero_element(&self) -> bool {
        self.lead().is_none()
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.var.name();
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.top - k as i64;
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            if e == 0 {
                write!(f, "{}", pretty(c))?;
            } else {
                write!(f, "{}·{x}^{e}", pretty(c))?;
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O({x}^{})", -self.order - 1)
    }
}

/// Square matrix of series sharing one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: Vec<Vec<Series>>,
}

impl SeriesMatrix {
    pub fn new(rows: Vec<Vec<Series>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadDimensions(format!("{n} rows of unequal length")));
        }
        Ok(Self { rows })
    }

    pub fn identity(var: Var, n: usize, order: i64) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Series::one(var, order) } else { Series::zero(var, order) })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Series>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Series {
        &self.rows[i][j]
    }

    pub fn order(&self) -> i64 {
        self.rows.iter().flatten().map(Series::order).min().unwrap_or(i64::MAX)
    }

    pub fn mul(&self, other: &SeriesMatrix) -> SeriesMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = self.rows[i][0].mul(&other.rows[0][j]);
                        for k in 1..n {
                            acc = acc.add(&self.rows[i][k].mul(&other.rows[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { rows }
    }

    pub fn transpose(&self) -> SeriesMatrix {
        let n = self.dim();
        SeriesMatrix { rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect() }
    }

    /// Minor on 0-based rows and columns; the empty minor is the constant 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Series, Error> {
        check_indices(self.dim(), rows, cols)?;
        let template = self.rows.first().and_then(|r| r.first());
        match ring::minor(&self.rows, rows, cols) {
            Some(m) => Ok(m),
            None => Ok(template.map_or(Series::one(Var::U, 0), |t| t.one_like())),
        }
    }
}

pub(crate) fn check_indices(dim: usize, rows: &[usize], cols: &[usize]) -> Result<(), Error> {
    if rows.len() != cols.len() {
        return Err(Error::IndexOutOfRange(format!("{} rows but {} columns", rows.len(), cols.len())));
    }
    if let Some(bad) = rows.iter().chain(cols).find(|&&k| k >= dim) {
        return Err(Error::IndexOutOfRange(format!("index {bad} in dimension {dim}")));
    }
    Ok(())
}

/// `M = F · D · E` with `F` lower and `E` upper unitriangular.
#[derive(Debug, Clone)]
pub struct Gauss {
    pub f: SeriesMatrix,
    pub d: Vec<Series>,
    pub e: SeriesMatrix,
}

impl Gauss {
    /// Rebuilds `F · D · E`.
    pub fn product(&self) -> SeriesMatrix {
        let n = self.d.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.f.rows[i][j].mul(&self.d[j])).collect())
            .collect();
        SeriesMatrix { rows }.mul(&self.e)
    }

    /// `D_1 ⋯ D_i` for `i = 1..=n`.
    pub fn diagonal_products(&self) -> Vec<Series> {
        let mut out: Vec<Series> = Vec::with_capacity(self.d.len());
        for d in &self.d {
            let next = match out.last() {
                Some(prev) => prev.mul(d),
                None => d.clone(),
            };
            out.push(next);
        }
        out
    }
}

/// Gauss decomposition by elimination without pivoting.
///
/// Every pivot must have a nonzero constant term.
pub fn gauss_decompose(m: &SeriesMatrix) -> Result<Gauss, Error> {
    let n = m.dim();
    let var = m.rows.first().and_then(|r| r.first()).map_or(Var::U, Series::var);
    let order = m.order();
    let mut a = m.rows.clone();
    let mut f = SeriesMatrix::identity(var, n, order);
    let mut e = SeriesMatrix::identity(var, n, order);
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.coeff(0).map_or(true, |c| c.is_zero()) || pivot.lead() != Some(0) {
            return Err(Error::SingularPrincipalMinor { index: k + 1 });
        }
        let inv = pivot.inv().expect("pivot is a unit");
        for j in k + 1..n {
            e.rows[k][j] = a[k][j].mul(&inv);
        }
        for i in k + 1..n {
            let l = a[i][k].mul(&inv);
            for j in k + 1..n {
                a[i][j] = a[i][j].sub(&l.mul(&a[k][j]));
            }
            f.rows[i][k] = l;
        }
        d.push(pivot);
    }
    Ok(Gauss { f, d, e })
}

/// Compact dump used in diagnostics.
pub fn describe(s: &Series, depth: i64) -> String {
    s.truncate(depth).to_string()
}
