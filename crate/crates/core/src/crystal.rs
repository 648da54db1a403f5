//! The product monomial crystal as a set: Laurent monomials in `y_{i,k}`, their
//! `z`-factorization, the partition-diagram membership model and highest-weight series.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{c_block_descending, expand_parameters, ParameterSet, SliceCombinatorics};
use crate::error::Error;
use crate::multiset::Multiset;
use crate::partition::Partition;
use crate::poly::{Poly, RationalFunction};
use crate::rational::{half, int, pretty, Rational};
use crate::report::{Failure, Report};
use crate::series::{Series, Var};

/// A variable `y_{i,k}` is the key `(i, k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<(usize, Rational), i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(i: usize, k: Rational) -> Self {
        Self::from_factors([(i, k, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (usize, Rational, i64)>) -> Self {
        let mut out = Self::one();
        for (i, k, e) in factors {
            out.add_exponent(i, k, e);
        }
        out
    }

    fn add_exponent(&mut self, i: usize, k: Rational, e: i64) {
        if e == 0 {
            return;
        }
        let key = (i, k);
        let total = self.exps.get(&key).copied().unwrap_or(0) + e;
        if total == 0 {
            self.exps.remove(&key);
        } else {
            self.exps.insert(key, total);
        }
    }

    pub fn exponent(&self, i: usize, k: &Rational) -> i64 {
        self.exps.get(&(i, k.clone())).copied().unwrap_or(0)
    }

    /// `(i, k, e)` in increasing `(i, k)`.
    pub fn factors(&self) -> impl Iterator<Item = (usize, &Rational, i64)> + '_ {
        self.exps.iter().map(|((i, k), e)| (*i, k, *e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for ((i, k), e) in &other.exps {
            out.add_exponent(*i, k.clone(), *e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial { exps: self.exps.iter().filter(|_| k != 0).map(|(key, e)| (key.clone(), e * k)).collect() }
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Coefficients on `ϖ_1, …, ϖ_{n−1}`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n - 1];
        for ((i, _), e) in &self.exps {
            w[i - 1] += e;
        }
        w
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (idx, ((i, k), e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                f.write_str("·")?;
            }
            write!(f, "y[{i},{}]", pretty(k))?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `z_{i,k} = y_{i,k} y_{i,k+2} / ∏_{j∼i} y_{j,k+1}`.
pub fn z_monomial(n: usize, i: usize, k: &Rational) -> Monomial {
    let mut z = Monomial::from_factors([(i, k.clone(), 1), (i, k + int(2), 1)]);
    for j in [i.wrapping_sub(1), i + 1] {
        if j >= 1 && j < n {
            z.add_exponent(j, k + int(1), -1);
        }
    }
    z
}

/// `y_𝐑 = ∏_{(i,c)} y_{i,c}`.
pub fn y_r(r: &ParameterSet) -> Monomial {
    Monomial::from_factors(r.vertices().into_iter().map(|(i, c)| (i, c, 1)))
}

fn check_box(n: usize, i: usize, xi: &Partition) -> Result<(), Error> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("node {i} for n = {n}")));
    }
    if xi.len() > i || xi.part(0) > n - i {
        return Err(Error::BoxViolation(format!("{:?} in a {i}×{} box", xi.parts(), n - i)));
    }
    Ok(())
}

/// The `z`-factors `(node, level)` removed by the cells of `ξ` at the vertex `(i, c)`.
fn cell_factors(i: usize, c: &Rational, xi: &Partition) -> Vec<(usize, Rational)> {
    xi.cells().map(|(a, b)| (i + b - a, c - int((a + b) as i64))).collect()
}

/// `y_{ξ,c} = y_{i,c} ∏_{(a,b) ∈ ξ} z_{i−a+b, c−a−b}^{−1}`, with `(a, b)` = (row, column).
pub fn fundamental_element(n: usize, i: usize, c: &Rational, xi: &Partition) -> Result<Monomial, Error> {
    check_box(n, i, xi)?;
    Ok(cell_factors(i, c, xi)
        .iter()
        .fold(Monomial::y(i, c.clone()), |acc, (j, k)| acc.mul(&z_monomial(n, *j, k).inv())))
}

/// All elements of the crystal of one vertex.
pub fn fundamental_crystal(n: usize, i: usize, c: &Rational) -> Result<BTreeSet<Monomial>, Error> {
    Partition::in_box(i, n - i).iter().map(|xi| fundamental_element(n, i, c, xi)).collect()
}

/// The unique `𝐒` with `p = y_𝐑 ∏_{i, k ∈ 𝐒_i} z_{i,k}^{−1}`; `S[i−1]` is `𝐒_i`.
pub fn z_factorize(p: &Monomial, r: &ParameterSet) -> Result<Vec<Multiset>, Error> {
    let n = r.n;
    let mut rest = p.mul(&y_r(r).inv());
    let ceiling = rest.factors().map(|(_, k, _)| k.clone()).max();
    let mut s = vec![Multiset::new(); n - 1];
    while let Some(level) = rest.factors().map(|(_, k, _)| k.clone()).min() {
        if ceiling.as_ref().is_some_and(|c| &level > c) {
            return Err(Error::NotFactorizable(format!("residual {rest} climbs past the original support")));
        }
        let at_level: Vec<(usize, i64)> = rest.factors().filter(|(_, k, _)| **k == level).map(|(i, _, e)| (i, e)).collect();
        for (i, e) in at_level {
            if e > 0 {
                return Err(Error::NotFactorizable(format!("y[{i},{}] has exponent {e} > 0", pretty(&level))));
            }
            let count = e.unsigned_abs() as usize;
            s[i - 1].insert_many(level.clone(), count);
            rest = rest.mul(&z_monomial(n, i, &level).pow(e.abs()));
        }
    }
    Ok(s)
}

/// One vertex `(i, c)` of `𝐑` together with its partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexChoice {
    pub i: usize,
    pub c: Rational,
    pub xi: Partition,
}

pub type Assignment = Vec<VertexChoice>;

/// Product of the fundamental elements of an assignment.
pub fn assignment_monomial(n: usize, assignment: &[VertexChoice]) -> Result<Monomial, Error> {
    assignment
        .iter()
        .try_fold(Monomial::one(), |acc, v| Ok(acc.mul(&fundamental_element(n, v.i, &v.c, &v.xi)?)))
}

fn factor_multiset(s: &[Multiset]) -> BTreeMap<(usize, Rational), usize> {
    let mut out = BTreeMap::new();
    for (idx, set) in s.iter().enumerate() {
        for (k, m) in set.runs() {
            out.insert((idx + 1, k.clone()), *m);
        }
    }
    out
}

fn take(rest: &mut BTreeMap<(usize, Rational), usize>, cells: &[(usize, Rational)]) -> bool {
    let mut taken = Vec::new();
    for key in cells {
        match rest.get_mut(key) {
            Some(m) if *m > 0 => {
                *m -= 1;
                taken.push(key);
            }
            _ => {
                for k in taken {
                    *rest.get_mut(k).expect("taken") += 1;
                }
                return false;
            }
        }
    }
    true
}

fn give_back(rest: &mut BTreeMap<(usize, Rational), usize>, cells: &[(usize, Rational)]) {
    for key in cells {
        *rest.get_mut(key).expect("present") += 1;
    }
}

/// Lexicographically first witness that `p ∈ ℬ(𝐑)`.
pub fn crystal_membership(p: &Monomial, r: &ParameterSet) -> Result<Assignment, Error> {
    let s = z_factorize(p, r).map_err(|_| Error::NotMember)?;
    let mut rest = factor_multiset(&s);
    let vertices = r.vertices();
    let boxes: Vec<Vec<Partition>> = vertices.iter().map(|(i, _)| Partition::in_box(*i, r.n - i)).collect();
    let mut chosen: Vec<usize> = Vec::new();
    if search(&vertices, &boxes, &mut rest, &mut chosen) {
        Ok(vertices
            .iter()
            .zip(&chosen)
            .zip(&boxes)
            .map(|(((i, c), &k), b)| VertexChoice { i: *i, c: c.clone(), xi: b[k].clone() })
            .collect())
    } else {
        Err(Error::NotMember)
    }
}

fn search(
    vertices: &[(usize, Rational)],
    boxes: &[Vec<Partition>],
    rest: &mut BTreeMap<(usize, Rational), usize>,
    chosen: &mut Vec<usize>,
) -> bool {
    let depth = chosen.len();
    if depth == vertices.len() {
        return rest.values().all(|&m| m == 0);
    }
    let (i, c) = &vertices[depth];
    let repeat_bound = (depth > 0 && vertices[depth - 1] == vertices[depth]).then(|| chosen[depth - 1]);
    for (k, xi) in boxes[depth].iter().enumerate() {
        if repeat_bound.is_some_and(|b| k > b) {
            break;
        }
        let cells = cell_factors(*i, c, xi);
        if !take(rest, &cells) {
            continue;
        }
        chosen.push(k);
        if search(vertices, boxes, rest, chosen) {
            return true;
        }
        chosen.pop();
        give_back(rest, &cells);
    }
    false
}

/// All members of weight `μ*`, where `μ*` has `μ_i` on `ϖ_i`, in increasing order.
pub fn enumerate_weight_space(r: &ParameterSet, mu: &[usize]) -> Result<Vec<Monomial>, Error> {
    let comb = SliceCombinatorics::derive(r.n, &r.weight(), mu)?;
    let n = r.n;
    let vertices = r.vertices();
    let options: Vec<Vec<(Vec<usize>, Monomial)>> = vertices
        .iter()
        .map(|(i, c)| {
            Partition::in_box(*i, n - i)
                .iter()
                .map(|xi| {
                    let mut counts = vec![0; n - 1];
                    for (j, _) in cell_factors(*i, c, xi) {
                        counts[j - 1] += 1;
                    }
                    (counts, fundamental_element(n, *i, c, xi).expect("fits its box"))
                })
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut counts = vec![0usize; n - 1];
    product_rec(&options, 0, &comb.m, &mut counts, &Monomial::one(), &mut out);
    Ok(out.into_iter().collect())
}

fn product_rec(
    options: &[Vec<(Vec<usize>, Monomial)>],
    depth: usize,
    target: &[usize],
    counts: &mut [usize],
    acc: &Monomial,
    out: &mut BTreeSet<Monomial>,
) {
    if depth == options.len() {
        if counts == target {
            out.insert(acc.clone());
        }
        return;
    }
    for (c, m) in &options[depth] {
        if counts.iter().zip(c).zip(target).any(|((a, b), t)| a + b > *t) {
            continue;
        }
        for (a, b) in counts.iter_mut().zip(c) {
            *a += b;
        }
        product_rec(options, depth + 1, target, counts, &acc.mul(m), out);
        for (a, b) in counts.iter_mut().zip(c) {
            *a -= b;
        }
    }
}

/// Rewrites a witness over `𝐑` as a witness over `𝐑̃`: the vertex `(i, c)` with `ξ` becomes
/// the column partitions `(1^{ξᵗ_b + n−i−b})` at `(n−1, c + n−i+1−2b)`, `b = 1..n−i`.
pub fn embed_crystal(n: usize, assignment: &[VertexChoice]) -> Result<Assignment, Error> {
    let mut out = Vec::new();
    for v in assignment {
        check_box(n, v.i, &v.xi)?;
        let width = n - v.i;
        let cols = v.xi.transpose();
        for (b, c_prime) in (1..=width).zip(c_block_descending(n, v.i, &v.c)) {
            let k = cols.part(b - 1) + width - b;
            out.push(VertexChoice { i: n - 1, c: c_prime, xi: Partition::from_parts(vec![1; k]) });
        }
    }
    out.sort();
    Ok(out)
}

/// Which chain of shifted inclusions a flag must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlagConvention {
    /// `S_i + (n−i+1) ⊆ S_{i+1} + (n−i)` and `S_{n−1} + 2 ⊆ R̃`.
    Statement,
    /// `S_i + (n−i) ⊆ S_{i+1} + (n−i−1)` and `S_{n−1} + 1 ⊆ R̃`.
    Display,
}

impl FlagConvention {
    /// Shift applied to `S_i`; `S_n` stands for `R̃` shifted by zero.
    pub fn shift(self, n: usize, i: usize) -> Rational {
        let base = (n - i) as i64;
        match self {
            FlagConvention::Statement => int(base + 1),
            FlagConvention::Display => int(base),
        }
    }
}

/// `|S_i| = m′_i` and the chain of shifted inclusions ending in `R̃`.
pub fn flag_check(s: &[Multiset], r_tilde: &Multiset, comb: &SliceCombinatorics, convention: FlagConvention) -> bool {
    let n = comb.n;
    if s.len() != n - 1 || s.iter().zip(&comb.m_prime).any(|(set, &m)| set.len() != m) {
        return false;
    }
    (1..n).all(|i| {
        let outer = if i + 1 == n { r_tilde.clone() } else { s[i].shift(&convention.shift(n, i + 1)) };
        s[i - 1].shift(&convention.shift(n, i)).is_subset(&outer)
    })
}

/// `J_i(u) = u^{−μ_i} ∏_k (u − k/2)^{a_{i,k}}` as exact rational functions.
pub fn hw_j(p: &Monomial, n: usize, mu: &[usize]) -> Vec<RationalFunction> {
    let h = half();
    (1..n)
        .map(|i| {
            let mut f = RationalFunction::x_pow(-(mu[i - 1] as i64));
            for (j, k, e) in p.factors() {
                if j == i {
                    let lin = RationalFunction::from_poly(Poly::linear_root(&(k * &h)));
                    f = f.mul(&lin.pow(e).expect("linear factor is nonzero"));
                }
            }
            f
        })
        .collect()
}

/// `A_i(u) = u^{−|S_i|} ∏_{s ∈ S_i} (u − s/2)`.
pub fn hw_a(s: &[Multiset]) -> Vec<RationalFunction> {
    let h = half();
    s.iter()
        .map(|set| {
            let roots: Vec<Rational> = set.iter().map(|x| x * &h).collect();
            RationalFunction::from_poly(Poly::from_roots(&roots)).mul(&RationalFunction::x_pow(-(set.len() as i64)))
        })
        .collect()
}

pub fn hw_series_j(p: &Monomial, n: usize, mu: &[usize], order: i64) -> Vec<Series> {
    hw_j(p, n, mu).iter().map(|f| f.expand(Var::U, order)).collect()
}

pub fn hw_series_a(s: &[Multiset], order: i64) -> Vec<Series> {
    hw_a(s).iter().map(|f| f.expand(Var::U, order)).collect()
}

/// `(u + c)^k / u^k`.
pub(crate) fn relative_power(c: &Rational, k: i64) -> RationalFunction {
    RationalFunction::from_poly(Poly::linear_root(&-c))
        .mul(&RationalFunction::x_pow(-1))
        .pow(k)
        .expect("nonzero")
}

/// `r_i(u) = u^{−λ_i} R_i(u) ((u−½)/u)^{Σ_{j∼i} m_j} / ((u−1)/u)^{m_i}`.
pub fn r_function(r: &ParameterSet, comb: &SliceCombinatorics, i: usize) -> RationalFunction {
    let n = r.n;
    let around: usize = [i.wrapping_sub(1), i + 1].into_iter().filter(|&j| j >= 1 && j < n).map(|j| comb.m[j - 1]).sum();
    RationalFunction::from_poly(r.node_poly(i))
        .mul(&RationalFunction::x_pow(-(r.at(i).len() as i64)))
        .mul(&relative_power(&-half(), around as i64))
        .mul(&relative_power(&int(-1), -(comb.m[i - 1] as i64)))
}

/// `J_i = r_i ∏_{j∼i} A_j(u−½) / (A_i(u) A_i(u−1))` for one member, compared as series.
pub fn verify_j_consistency(p: &Monomial, r: &ParameterSet, mu: &[usize], order: i64) -> Result<Report, Error> {
    let n = r.n;
    let comb = SliceCombinatorics::derive(n, &r.weight(), mu)?;
    let s = z_factorize(p, r)?;
    let a = hw_a(&s);
    let j = hw_j(p, n, mu);
    let minus_half = -half();
    let mut failures = Vec::new();
    for i in 1..n {
        let mut rhs = r_function(r, &comb, i);
        for nb in [i.wrapping_sub(1), i + 1] {
            if nb >= 1 && nb < n {
                rhs = rhs.mul(&a[nb - 1].shift(&minus_half));
            }
        }
        rhs = rhs.div(&a[i - 1].mul(&a[i - 1].shift(&int(-1))))?;
        let (ls, rs) = (j[i - 1].expand(Var::U, order), rhs.expand(Var::U, order));
        if let Some(e) = ls.first_difference(&rs, order)? {
            failures.push(Failure::new(format!("J_{i} at u^{e}"), &ls.coeff(e)?, &rs.coeff(e)?));
        }
    }
    Ok(Report::single("j-consistency", failures))
}

/// Parameters of `𝐑̃` placed at node `n − 1`.
pub fn expanded_parameter_set(r: &ParameterSet) -> ParameterSet {
    ParameterSet::first_fundamental(r.n, expand_parameters(r)).expect("n ≥ 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ms(v: &[i64]) -> Multiset {
        v.iter().map(|&x| int(x)).collect()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sl2(a: i64, b: i64) -> ParameterSet {
        ParameterSet::new(2, vec![ms(&[a, b])]).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn z_monomials_and_weights() {
        let k = int(4);
        assert_eq!(z_monomial(2, 1, &k), Monomial::from_factors([(1, int(4), 1), (1, int(6), 1)]));
        let z = z_monomial(3, 1, &k);
        assert_eq!(z, Monomial::from_factors([(1, int(4), 1), (1, int(6), 1), (2, int(5), -1)]));
        assert_eq!(z.weight(3), [2, -1]);
        assert_eq!(z_monomial(4, 2, &k).weight(4), [-1, 2, -1]);
        let p = Monomial::from_factors([(1, int(0), 1), (1, int(3), -1)]);
        assert_eq!(p.weight(3), [0, 0]);
    }

    #[test]
    fn factorization_examples() {
        let r = sl2(0, 5);
        assert_eq!(z_factorize(&y_r(&r), &r).unwrap(), [Multiset::new()]);
        let p = Monomial::from_factors([(1, int(0), 1), (1, int(3), -1)]);
        assert_eq!(z_factorize(&p, &r).unwrap(), [ms(&[3])]);
        let single = ParameterSet::new(2, vec![ms(&[0])]).unwrap();
        let square = Monomial::from_factors([(1, int(0), 2)]);
        assert!(matches!(z_factorize(&square, &single), Err(Error::NotFactorizable(_))));
    }

    #[test]
    fn fundamental_element_examples() {
        let c = int(6);
        let xi = part(&[4, 2]);
        let expected = [(3, 4), (4, 3), (5, 2), (6, 1), (2, 3), (3, 2)]
            .iter()
            .fold(Monomial::y(3, c.clone()), |acc, &(i, k)| acc.mul(&z_monomial(7, i, &int(k)).inv()));
        assert_eq!(fundamental_element(7, 3, &c, &xi).unwrap(), expected);
        assert_eq!(fundamental_element(2, 1, &int(5), &part(&[1])).unwrap(), Monomial::from_factors([(1, int(3), -1)]));
        assert_eq!(fundamental_element(4, 2, &int(0), &Partition::empty()).unwrap(), Monomial::y(2, int(0)));
        assert!(matches!(fundamental_element(4, 1, &int(0), &part(&[1, 1])), Err(Error::BoxViolation(_))));
    }

    #[test]
    fn fundamental_crystal_sizes() {
        for n in 2..=6 {
            for i in 1..n {
                assert_eq!(fundamental_crystal(n, i, &frac(1, 2)).unwrap().len(), binomial(n, i), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn displayed_sl9_monomial_is_a_member() {
        let r = ParameterSet::new(
            9,
            vec![
                Multiset::new(),
                Multiset::new(),
                ms(&[3, 5, 5]),
                Multiset::new(),
                ms(&[5]),
                ms(&[2, 4]),
                ms(&[5]),
                Multiset::new(),
            ],
        )
        .unwrap();
        let zs = [(3, 3, 2), (5, 3, 1), (7, 3, 1), (2, 2, 1), (4, 2, 1), (6, 2, 2), (8, 2, 1), (3, 1, 2), (5, 1, 3), (7, 1, 2), (4, 0, 4)];
        let p = zs.iter().fold(y_r(&r), |acc, &(i, k, e)| acc.mul(&z_monomial(9, i, &int(k)).pow(-e)));
        let witness = crystal_membership(&p, &r).unwrap();
        assert_eq!(assignment_monomial(9, &witness).unwrap(), p);
        let stray = y_r(&r).mul(&z_monomial(9, 1, &int(40)).inv());
        assert_eq!(crystal_membership(&stray, &r), Err(Error::NotMember));
    }

    #[test]
    fn sl2_weight_spaces() {
        let r = sl2(0, 5);
        let zero = enumerate_weight_space(&r, &[0]).unwrap();
        let expected: BTreeSet<Monomial> = [
            Monomial::from_factors([(1, int(0), 1), (1, int(3), -1)]),
            Monomial::from_factors([(1, int(5), 1), (1, int(-2), -1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(zero.into_iter().collect::<BTreeSet<_>>(), expected);
        assert_eq!(enumerate_weight_space(&r, &[2]).unwrap(), [y_r(&r)]);
    }

    #[test]
    fn embedding_preserves_monomials_and_membership() {
        let r = ParameterSet::new(4, vec![ms(&[0]), ms(&[1]), ms(&[3])]).unwrap();
        let big = expanded_parameter_set(&r);
        let members = enumerate_weight_space(&r, &[0, 1, 0]).unwrap();
        assert!(members.len() > 1);
        for p in members {
            let witness = crystal_membership(&p, &r).unwrap();
            let embedded = embed_crystal(4, &witness).unwrap();
            assert_eq!(assignment_monomial(4, &embedded).unwrap(), p);
            assert!(crystal_membership(&p, &big).is_ok());
            assert_eq!(p.weight(4), [0, 1, 0]);
        }
    }

    #[test]
    fn flag_examples() {
        let comb = SliceCombinatorics::from_pi(&[1, 1]).unwrap();
        let r_tilde = ms(&[1, 3]);
        assert!(flag_check(&[ms(&[1])], &r_tilde, &comb, FlagConvention::Statement));
        assert!(!flag_check(&[ms(&[2])], &r_tilde, &comb, FlagConvention::Statement));
        assert!(flag_check(&[ms(&[2])], &r_tilde, &comb, FlagConvention::Display));
        assert!(!flag_check(&[ms(&[1, 1])], &r_tilde, &comb, FlagConvention::Statement));
    }

    #[test]
    fn sl2_highest_weight_series() {
        let (a, b) = (int(1), int(3));
        let p = Monomial::from_factors([(1, a.clone(), 1), (1, &b - int(2), -1)]);
        let expected = RationalFunction::new(Poly::linear_root(&(&a * half())), Poly::linear_root(&(&b * half() - int(1)))).unwrap();
        assert_eq!(hw_j(&p, 2, &[0]), core::slice::from_ref(&expected));
        assert_eq!(hw_series_j(&p, 2, &[0], 20), [expected.expand(Var::U, 20)]);
        let s = [ms(&[1])];
        assert_eq!(hw_series_a(&s, 4)[0].coeffs_from(0, 2).unwrap(), [int(1), frac(-1, 2), int(0)]);
        assert!(verify_j_consistency(&p, &sl2(1, 3), &[0], 20).unwrap().passed());
    }

    #[test]
    fn j_consistency_over_weight_spaces() {
        let r = ParameterSet::new(3, vec![ms(&[0]), ms(&[4])]).unwrap();
        for mu in [[0usize, 0], [1, 1]] {
            for p in enumerate_weight_space(&r, &mu).unwrap() {
                assert!(verify_j_consistency(&p, &r, &mu, 12).unwrap().passed(), "{p}");
            }
        }
    }
}
