//! Finitely supported Laurent polynomials in `t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::{pretty, Rational};
use crate::ring::Ring;
use crate::series::{Series, Var};

/// Exponent ↦ nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

pub type LaurentT = Laurent;

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `t^k · self`.
    pub fn shift_exp(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `f(−t)`.
    pub fn negate_var(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `f(t⁻¹)`.
    pub fn invert_var(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Polynomial in `t` if no negative exponents occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let top = self.max_exp().unwrap_or(0).max(0) as usize;
        Some(Poly::new((0..=top).map(|k| self.coeff(k as i64)).collect()))
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.clone())))
    }

    /// Descending series in `var`, exact down to `var^{−order}`.
    pub fn to_series(&self, var: Var, order: i64) -> Series {
        let top = self.max_exp().unwrap_or(0);
        let len = (top + order + 1).max(0);
        Series::new(var, top, (0..len).map(|k| self.coeff(top - k)).collect(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Exact quotient in the Laurent polynomial ring, if it exists.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        let lo_b = other.min_exp()?;
        let Some(lo_a) = self.min_exp() else {
            return Some(Self::zero());
        };
        let a = self.shift_exp(-lo_a).to_poly()?;
        let b = other.shift_exp(-lo_b).to_poly()?;
        let q = Ring::exact_div(&a, &b)?;
        Some(Self::from_poly(&q).shift_exp(lo_a - lo_b))
    }
}

impl Ring for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::zero()
    }
    fn one_like(&self) -> Self {
        Laurent::one()
    }
    fn add(&self, other: &Self) -> Self {
        Laurent::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Laurent::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Laurent::mul(self, other)
    }
    fn neg(&self) -> Self {
        Laurent::neg(self)
    }
    fn is_zero_element(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        Laurent::exact_div(self, other)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| if *e == 0 { pretty(c) } else { alloc::format!("{}·t^{e}", pretty(c)) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
