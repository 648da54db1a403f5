//! Executable checks of the sign identities between slice minors and the Gauss
//! decomposition, and of the parameter bookkeeping (`f_k`, `s_i`, `R̃`, `Z_N`).

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinatorics::{expand_parameters, halved_roots_poly, shift_polynomials_f, ParameterSet, SliceCombinatorics};
use crate::error::Error;
use crate::multiset::Multiset;
use crate::nilpotent::{mv_map_with_sign, slice_coordinates};
use crate::poly::{Poly, RationalFunction};
use crate::rational::{frac, half, int, Rational};
use crate::report::{Failure, Report};
use crate::series::{gauss_decompose, SeriesMatrix, Var};
use crate::slice::{eval_e_series, eval_f_series, principal_minor, SlicePoint};

fn sign(r: i64) -> Rational {
    if r % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `T(u) = g(−u)ᵀ`, with `g` read back from the slice matrix.
pub fn evaluated_t(h: &SlicePoint, order: i64) -> SeriesMatrix {
    let g = h.matrix();
    let n = h.n();
    let rows = (0..n).map(|i| (0..n).map(|j| g[j][i].negate_var().to_series(Var::U, order)).collect()).collect();
    SeriesMatrix::new(rows).expect("square")
}

/// `A_i^{(r)}(g) = (−1)^r Q_i^{(r)}(X)`, `E_i^{(r)}(g) = (−1)^r E_i^{(r)}(X)` and the analogous
/// `F` identity, for every node and every `r ≤ order`.
pub fn verify_classical_ae(g: &SlicePoint, order: i64) -> Result<Report, Error> {
    classical_ae(g, order, false)
}

/// [`verify_classical_ae`] against a slice matrix built with the wrong block sign.
#[doc(hidden)]
pub fn verify_classical_ae_mutated(g: &SlicePoint, order: i64) -> Result<Report, Error> {
    classical_ae(g, order, true)
}

fn classical_ae(g: &SlicePoint, order: i64, flip: bool) -> Result<Report, Error> {
    let x = mv_map_with_sign(g, flip)?;
    let read_back = slice_coordinates(&x)?;
    let gauss = gauss_decompose(&evaluated_t(&read_back, order))?;
    let q = gauss.diagonal_products();
    let mut failures = Vec::new();
    for i in 1..g.n() {
        let a = principal_minor(g, i);
        let e = eval_e_series(g, i, order)?;
        let f = eval_f_series(g, i, order)?;
        let ex = gauss.e.get(i - 1, i);
        let fx = gauss.f.get(i, i - 1);
        for r in 1..=order {
            let s = sign(r);
            let checks = [
                ("A", a.coeff(-r), &s * q[i - 1].coeff(-r)?),
                ("E", e.coeff(-r)?, &s * ex.coeff(-r)?),
                ("F", f.coeff(-r)?, &s * fx.coeff(-r)?),
            ];
            for (name, lhs, rhs) in checks {
                if lhs != rhs {
                    failures.push(Failure::new(format!("{name}_{i}^({r})"), &lhs, &rhs));
                }
            }
        }
    }
    Ok(Report::single("classical-ae", failures))
}

/// `D_1 ⋯ D_i = Δ_{1..i,1..i}` to the given order.
pub fn verify_gauss_minor(m: &SeriesMatrix, order: i64) -> Result<Report, Error> {
    let gauss = gauss_decompose(m)?;
    let mut failures = Vec::new();
    for (i, prod) in gauss.diagonal_products().iter().enumerate() {
        let idx: Vec<usize> = (0..=i).collect();
        let minor = m.minor(&idx, &idx)?;
        if let Some(e) = prod.first_difference(&minor, order)? {
            failures.push(Failure::new(format!("D_1..D_{} at u^{e}", i + 1), &prod.coeff(e)?, &minor.coeff(e)?));
        }
    }
    Ok(Report::single("gauss-minor", failures))
}

fn linear(c: &Rational) -> Poly {
    Poly::linear_root(&-c)
}

/// `(u + c)^k / u^k`.
fn relative_power(c: &Rational, k: i64) -> RationalFunction {
    RationalFunction::from_poly(linear(c))
        .div(&RationalFunction::x_pow(1))
        .and_then(|f| f.pow(k))
        .expect("nonzero")
}

/// `s_i(u) = ∏_{j ≤ i} (u − (i−1)/2 + j − 1)^{p_j} / u^{m′_i}`.
pub fn s_series(comb: &SliceCombinatorics, i: usize) -> RationalFunction {
    let mut num = Poly::one();
    for j in 1..=i {
        let root = frac(i as i64 - 1, 2) - int(j as i64 - 1);
        num = &num * &Poly::linear_root(&root).pow(comb.p(j));
    }
    RationalFunction::from_poly(num).mul(&RationalFunction::x_pow(-(comb.m_prime_ext(i) as i64)))
}

fn neighbours(n: usize, i: usize) -> impl Iterator<Item = usize> {
    [i.wrapping_sub(1), i + 1].into_iter().filter(move |&j| j >= 1 && j < n)
}

/// `r_i(u)` for `λ = Nϖ_1` and the expanded parameters.
pub fn r_series(comb: &SliceCombinatorics, r_tilde: &Multiset, i: usize) -> RationalFunction {
    let n = comb.n;
    let around: usize = neighbours(n, i).map(|j| comb.m_prime_ext(j)).sum();
    let mut out = relative_power(&-half(), around as i64).mul(&relative_power(&int(-1), -(comb.m_prime_ext(i) as i64)));
    if i == n - 1 {
        out = out
            .mul(&RationalFunction::from_poly(halved_roots_poly(r_tilde)))
            .mul(&RationalFunction::x_pow(-(comb.big_n as i64)));
    }
    out
}

/// `ψQ_n(v) = Z_N(v) / ∏_j (v − j + 1)^{p_j}` with `Z_N(v) = (−1)^N R̃(−v + n/2)`.
fn central_q(comb: &SliceCombinatorics, r_tilde: &Multiset) -> RationalFunction {
    let n = comb.n;
    let z = halved_roots_poly(r_tilde).shift(&frac(n as i64, 2)).negate_arg().scale(&sign(comb.big_n as i64));
    let mut den = Poly::one();
    for j in 1..=n {
        den = &den * &Poly::linear_root(&int(j as i64 - 1)).pow(comb.p(j));
    }
    RationalFunction::new(z, den).expect("monic denominator")
}

/// Both defining equations of the `s_i`, as exact rational-function identities.
pub fn verify_s_identities(comb: &SliceCombinatorics, r_tilde: &Multiset) -> Result<Report, Error> {
    if !comb.is_first_fundamental() {
        return Err(Error::BadDimensions("the s identities need λ = Nϖ_1".into()));
    }
    if r_tilde.len() != comb.big_n {
        return Err(Error::SizeMismatch(format!("|R̃| = {} but N = {}", r_tilde.len(), comb.big_n)));
    }
    let n = comb.n;
    let h = half();
    let mut failures = Vec::new();
    for i in 1..n {
        let s_i = s_series(comb, i);
        let num_degree = s_i.num().degree().unwrap_or(0);
        if num_degree != comb.m_prime_ext(i) {
            failures.push(Failure::described(
                format!("deg s_{i}"),
                num_degree.to_string(),
                comb.m_prime_ext(i).to_string(),
            ));
        }
        let mut lhs = r_series(comb, r_tilde, i);
        for j in neighbours(n, i) {
            lhs = lhs.mul(&s_series(comb, j).shift(&-&h));
        }
        lhs = lhs.div(&s_i.mul(&s_i.shift(&int(-1))))?;
        let mut rhs = relative_power(&frac(i as i64 - 1, 2), comb.mu_at(i) as i64);
        if i == n - 1 {
            rhs = rhs.mul(&central_q(comb, r_tilde).shift(&frac(n as i64, 2)).negate_arg());
        }
        if lhs != rhs {
            failures.push(Failure::described(format!("s identity at node {i}"), lhs.to_string(), rhs.to_string()));
        }
    }
    Ok(Report::single("s-identities", failures))
}

/// `R_i(u) f_i(u) f_i(u−1) = f_{i−1}(u−½) f_{i+1}(u−½)` for `i < n−1`, and
/// `R_{n−1}(u) f_{n−1}(u) f_{n−1}(u−1) = R̃(u) f_{n−2}(u−½)`.
pub fn verify_f_identities(r: &ParameterSet) -> Report {
    let n = r.n;
    let f = shift_polynomials_f(r);
    let f_at = |k: usize| if k == 0 { Poly::one() } else { f[k - 1].clone() };
    let minus_half = -half();
    let mut failures = Vec::new();
    for i in 1..n {
        let lhs = &(&r.node_poly(i) * &f_at(i)) * &f_at(i).shift(&int(-1));
        let rhs = if i == n - 1 {
            &halved_roots_poly(&expand_parameters(r)) * &f_at(n - 2).shift(&minus_half)
        } else {
            &f_at(i - 1).shift(&minus_half) * &f_at(i + 1).shift(&minus_half)
        };
        if lhs != rhs {
            failures.push(Failure::described(format!("f identity at node {i}"), lhs.to_string(), rhs.to_string()));
        }
    }
    Report::single("f-identities", failures)
}

/// `A_i^{(r)}(g) = 0` for `m′_i < r ≤ m′_i + 5`.
pub fn verify_truncation_vanishing(g: &SlicePoint) -> Report {
    let mut failures = Vec::new();
    for i in 1..g.n() {
        let minor = principal_minor(g, i);
        let top = g.comb.m_prime_ext(i);
        for r in top + 1..=top + 5 {
            let v = minor.coeff(-(r as i64));
            if !v.is_zero() {
                failures.push(Failure::new(format!("A_{i}^({r})"), &v, &Rational::zero()));
            }
        }
    }
    Report::single("truncation-vanishing", failures)
}

/// Series order used when none is configured: `max(2N + 5, 20)`.
pub fn default_order(big_n: usize) -> i64 {
    (2 * big_n as i64 + 5).max(20)
}
