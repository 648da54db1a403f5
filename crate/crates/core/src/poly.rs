//! Dense univariate polynomials and rational functions over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{pretty, Rational};
use crate::ring::Ring;
use crate::series::{Series, Var};

/// Polynomial with coefficients in ascending powers; trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// Polynomial in the spectral variable `u`.
pub type PolyU = Poly;
/// Polynomial in the loop variable `t`.
pub type PolyT = Poly;

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `x − r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let step = Self::new(vec![c.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| &(&acc * &step) + &Self::constant(a.clone()))
    }

    /// `f(−x)`.
    pub fn negate_arg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dd = d.degree()?;
        let lead = d.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Descending-power series of this polynomial in `var`, exact down to `var^{-order}`.
    pub fn to_series(&self, var: Var, order: i64) -> Series {
        let top = self.degree().map_or(0, |d| d as i64);
        let coeffs = (0..=top).rev().map(|k| self.coeff(k as usize)).collect();
        Series::new(var, top, coeffs, order)
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero_element(&self) -> bool {
        Poly::is_zero(self)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(other)?;
        r.is_zero().then_some(q)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", pretty(a))?,
                1 => write!(f, "{}·u", pretty(a))?,
                _ => write!(f, "{}·u^{k}", pretty(a))?,
            }
        }
        Ok(())
    }
}

/// Quotient of polynomials with a monic denominator.
///
/// Equality is decided by cross-multiplication; no cancellation is attempted.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

pub type RationalFunctionU = RationalFunction;

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        let lead = den.leading().ok_or(Error::ZeroDenominator)?.clone();
        let inv = Rational::one() / lead;
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// `x^k` for any integer `k`.
    pub fn x_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(Rational::one(), k as usize))
        } else {
            Self { num: Poly::one(), den: Poly::monomial(Rational::one(), k.unsigned_abs() as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// Integer power; negative exponents require a nonzero function.
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let k_abs = k.unsigned_abs() as usize;
        let p = Self { num: self.num.pow(k_abs), den: self.den.pow(k_abs) };
        if k >= 0 {
            Ok(p)
        } else {
            Self::one().div(&p)
        }
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        Self::new(self.num.shift(c), self.den.shift(c)).expect("shift preserves a nonzero denominator")
    }

    /// `f(−x)`.
    pub fn negate_arg(&self) -> Self {
        Self::new(self.num.negate_arg(), self.den.negate_arg())
            .expect("reflection preserves a nonzero denominator")
    }

    /// Descending expansion `Σ_e c_e x^e`, exact for exponents `e ≥ −order`.
    pub fn expand(&self, var: Var, order: i64) -> Series {
        let dd = self.den.degree().expect("denominator is nonzero") as i64;
        let Some(dn) = self.num.degree() else {
            return Series::new(var, -order - 1, Vec::new(), order);
        };
        let top = dn as i64 - dd;
        let lead = self.den.leading().expect("denominator is nonzero");
        let count = (top + order + 1).max(0) as usize;
        // num = q · den compared at exponent e + dd, from the top down.
        let mut q: Vec<Rational> = Vec::with_capacity(count);
        for k in 0..count {
            let e = top - k as i64;
            let mut acc = coeff_at(&self.num, e + dd);
            for j in 1..=k.min(dd as usize) {
                let d = self.den.coeff(dd as usize - j);
                if !d.is_zero() {
                    acc -= d * &q[k - j];
                }
            }
            q.push(acc / lead);
        }
        Series::new(var, top, q, order)
    }
}

fn coeff_at(p: &Poly, e: i64) -> Rational {
    if e < 0 {
        Rational::zero()
    } else {
        p.coeff(e as usize)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
