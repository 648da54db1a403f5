//! Coweight bookkeeping for one slice and the parameter-set transformations.
//!
//! Weights `λ, μ` are indexed so that entry `i` (1-based) is the coefficient of the
//! fundamental coweight `ϖ_{n−i}`. For `sl_3` with `λ = (1,1)` and `μ = (0,0)` this gives
//! `N = 3`, `π = (1,1,1)` and `τ = (2,1)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::multiset::Multiset;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{frac, half, int, to_i64, Rational};

/// The full `λ, μ ↔ τ, π, N, m, m′, m″` dictionary of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCombinatorics {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub big_n: usize,
    /// `λ − μ = Σ m_i α_{n−i}`.
    pub m: Vec<usize>,
    /// `Nϖ_1 − μ = Σ m′_i α_{n−i}`.
    pub m_prime: Vec<usize>,
    pub m_double_prime: Vec<usize>,
    pub tau: Partition,
    /// Row lengths `p_1 ≤ … ≤ p_n`, zeros kept.
    pub pi: Vec<usize>,
}

/// Entry `(i, l)` (1-based) of the inverse Cartan matrix of `sl_n`.
fn inverse_cartan(n: usize, i: usize, l: usize) -> Rational {
    frac((i.min(l) * (n - i.max(l))) as i64, n as i64)
}

/// Coefficients `c_i` with `Σ_l w_l ϖ_{n−l} = Σ_i c_i α_{n−i}`.
fn coroot_coefficients(n: usize, w: &[i64]) -> Vec<Rational> {
    (1..n)
        .map(|i| (1..n).map(|l| inverse_cartan(n, i, l) * int(w[l - 1])).fold(Rational::zero(), |a, b| a + b))
        .collect()
}

fn nonnegative_integers(c: &[Rational], what: &str) -> Result<Vec<usize>, Error> {
    if let Some((k, q)) = c.iter().enumerate().find(|(_, q)| q.is_negative()) {
        return Err(Error::NotDominated(format!("{what}_{} = {q} < 0", k + 1)));
    }
    c.iter()
        .enumerate()
        .map(|(k, q)| {
            to_i64(q).map(|v| v as usize).ok_or_else(|| {
                Error::NotInRootLattice(format!("{what}_{} = {q} is not an integer", k + 1))
            })
        })
        .collect()
}

impl SliceCombinatorics {
    pub fn derive(n: usize, lambda: &[usize], mu: &[usize]) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::BadDimensions(format!("n = {n} must be at least 2")));
        }
        if lambda.len() != n - 1 || mu.len() != n - 1 {
            return Err(Error::BadDimensions(format!(
                "λ has {} and μ has {} entries; expected {}",
                lambda.len(),
                mu.len(),
                n - 1
            )));
        }
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(&l, &m)| l as i64 - m as i64).collect();
        let m = nonnegative_integers(&coroot_coefficients(n, &diff), "m")?;
        let big_n: usize = (1..n).map(|l| (n - l) * lambda[l - 1]).sum();
        let mut top = vec![0i64; n - 1];
        top[n - 2] = big_n as i64;
        let diff_top: Vec<i64> = top.iter().zip(mu).map(|(&l, &m)| l - m as i64).collect();
        let m_prime = nonnegative_integers(&coroot_coefficients(n, &diff_top), "m′")?;
        let m_double_prime = m_prime
            .iter()
            .zip(&m)
            .map(|(&a, &b)| {
                a.checked_sub(b).ok_or_else(|| Error::NotDominated(format!("m″ would be negative: {a} < {b}")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let mut pi = Vec::with_capacity(n);
        let mut prev = 0;
        for &mp in &m_prime {
            pi.push(mp.checked_sub(prev).ok_or_else(|| Error::NotDominated("π is not monotone".into()))?);
            prev = mp;
        }
        pi.push(big_n.checked_sub(prev).ok_or_else(|| Error::NotDominated("p_n < 0".into()))?);

        // Part j occurs λ_{n−j} times before conjugation.
        let columns = (1..n).flat_map(|j| core::iter::repeat_n(j, lambda[n - j - 1]));
        let tau = Partition::from_parts(columns).transpose();

        Ok(Self { n, lambda: lambda.to_vec(), mu: mu.to_vec(), big_n, m, m_prime, m_double_prime, tau, pi })
    }

    /// Instance with `λ = Nϖ_1` and `μ` read off a monotone row-length vector.
    pub fn from_pi(pi: &[usize]) -> Result<Self, Error> {
        let n = pi.len();
        if n < 2 {
            return Err(Error::BadDimensions(format!("π needs at least 2 rows, got {n}")));
        }
        if pi.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!("{pi:?} is not non-decreasing")));
        }
        let big_n: usize = pi.iter().sum();
        let mut lambda = vec![0; n - 1];
        lambda[n - 2] = big_n;
        let mu: Vec<usize> = pi.windows(2).map(|w| w[1] - w[0]).collect();
        Self::derive(n, &lambda, &mu)
    }

    /// `π` as an ordinary partition (zeros dropped, non-increasing).
    pub fn pi_partition(&self) -> Partition {
        Partition::from_parts(self.pi.iter().copied())
    }

    /// `p_i` for a 1-based row index.
    pub fn p(&self, i: usize) -> usize {
        self.pi[i - 1]
    }

    /// `m′_i` for `0 ≤ i ≤ n`, with `m′_0 = 0` and `m′_n = N`.
    pub fn m_prime_ext(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i if i == self.n => self.big_n,
            i => self.m_prime[i - 1],
        }
    }

    /// `μ_i` for a 1-based node.
    pub fn mu_at(&self, i: usize) -> usize {
        self.mu[i - 1]
    }

    pub fn is_first_fundamental(&self) -> bool {
        self.lambda[..self.n - 2].iter().all(|&l| l == 0)
    }
}

/// Multisets `R_1, …, R_{n−1}` of spectral parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterSet {
    pub n: usize,
    sets: Vec<Multiset>,
}

impl ParameterSet {
    pub fn new(n: usize, sets: Vec<Multiset>) -> Result<Self, Error> {
        if n < 2 || sets.len() != n - 1 {
            return Err(Error::BadDimensions(format!("{} multisets for n = {n}", sets.len())));
        }
        Ok(Self { n, sets })
    }

    /// All parameters at node `n − 1`, the shape used for first-fundamental weights.
    pub fn first_fundamental(n: usize, r: Multiset) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::BadDimensions(format!("n = {n}")));
        }
        let mut sets = vec![Multiset::new(); n - 1];
        sets[n - 2] = r;
        Ok(Self { n, sets })
    }

    /// `R_i` for a 1-based node.
    pub fn at(&self, i: usize) -> &Multiset {
        &self.sets[i - 1]
    }

    pub fn sets(&self) -> &[Multiset] {
        &self.sets
    }

    /// `λ_i = |R_i|`.
    pub fn weight(&self) -> Vec<usize> {
        self.sets.iter().map(Multiset::len).collect()
    }

    /// `(i, c)` with multiplicity, in lexicographic order.
    pub fn vertices(&self) -> Vec<(usize, Rational)> {
        self.sets
            .iter()
            .enumerate()
            .flat_map(|(k, s)| s.iter().map(move |c| (k + 1, c.clone())))
            .collect()
    }

    /// `R_i(u) = ∏_{c ∈ R_i} (u − c/2)`.
    pub fn node_poly(&self, i: usize) -> Poly {
        halved_roots_poly(self.at(i))
    }
}

/// `∏_{c} (u − c/2)` over a multiset.
pub fn halved_roots_poly(set: &Multiset) -> Poly {
    let h = half();
    let roots: Vec<Rational> = set.iter().map(|c| c * &h).collect();
    Poly::from_roots(&roots)
}

/// `{c+n−i−1, c+n−i−3, …, c−n+i+1}`.
pub fn c_block(n: usize, i: usize, c: &Rational) -> Multiset {
    let width = n - i;
    (0..width).map(|k| c + int(width as i64 - 1 - 2 * k as i64)).collect()
}

/// The same block listed in decreasing order.
pub fn c_block_descending(n: usize, i: usize, c: &Rational) -> Vec<Rational> {
    let width = n - i;
    (0..width).map(|k| c + int(width as i64 - 1 - 2 * k as i64)).collect()
}

/// Union of all c-blocks: the parameters of the first-fundamental expansion.
pub fn expand_parameters(r: &ParameterSet) -> Multiset {
    r.vertices().iter().fold(Multiset::new(), |acc, (i, c)| acc.union(&c_block(r.n, *i, c)))
}

/// `f_1, …, f_{n−1}` with
/// `f_k(u) = ∏_{i<k} ∏_{j=0}^{k−i−1} R_i(u + 1/2 + (k−i−1−2j)/2)`.
pub fn shift_polynomials_f(r: &ParameterSet) -> Vec<Poly> {
    (1..r.n)
        .map(|k| {
            let mut f = Poly::one();
            for i in 1..k {
                let ri = r.node_poly(i);
                for j in 0..(k - i) {
                    let shift = half() + frac((k - i - 1) as i64 - 2 * j as i64, 2);
                    f = &f * &ri.shift(&shift);
                }
            }
            f
        })
        .collect()
}

/// Integrality class of a vertex: `(c − i) mod 2`, in `[0, 2)`.
pub fn integrality_class(i: usize, c: &Rational) -> Rational {
    let two = int(2);
    let x = c - int(i as i64);
    let q = (&x / &two).floor();
    x - q * two
}
