//! Row tableaux, the flag/tableau dictionary, parabolic-singular permutations and
//! overshadowing colorings, tied together by the highest-weight cross-check.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{c_block_descending, expand_parameters, ParameterSet, SliceCombinatorics};
use crate::crystal::{crystal_membership, embed_crystal, enumerate_weight_space, hw_a, hw_j, z_factorize};
use crate::error::Error;
use crate::multiset::Multiset;
use crate::poly::{Poly, RationalFunction};
use crate::rational::{frac, half, int, Rational};
use crate::report::{Failure, Report};
use crate::series::{describe, Var};
use crate::verify::s_series;

/// A filling of the rows of `π` by a multiset alphabet; entries within a row are unordered.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowTableau {
    rows: Vec<Multiset>,
}

impl RowTableau {
    pub fn new(shape: &[usize], rows: Vec<Multiset>) -> Result<Self, Error> {
        if rows.len() != shape.len() || rows.iter().zip(shape).any(|(r, &p)| r.len() != p) {
            return Err(Error::ShapeViolation(format!("rows do not have lengths {shape:?}")));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Multiset] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Multiset::len).collect()
    }

    pub fn content(&self) -> Multiset {
        self.rows.iter().fold(Multiset::new(), |acc, r| acc.union(r))
    }
}

impl fmt::Display for RowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(" / ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// `T_i = (S_i + (n−i+1)) ∖ (S_{i−1} + (n−i+2))` and `T_n = R̃ ∖ (S_{n−1} + 2)`.
pub fn tableau_from_flags(s: &[Multiset], r_tilde: &Multiset, comb: &SliceCombinatorics) -> Result<RowTableau, Error> {
    let n = comb.n;
    if s.len() != n - 1 {
        return Err(Error::NotAFlag(format!("{} sets for n = {n}", s.len())));
    }
    let shifted = |i: usize| -> Multiset {
        match i {
            0 => Multiset::new(),
            i if i == n => r_tilde.clone(),
            i => s[i - 1].shift(&int((n - i + 1) as i64)),
        }
    };
    let rows = (1..=n)
        .map(|i| {
            shifted(i)
                .difference(&shifted(i - 1))
                .ok_or_else(|| Error::NotAFlag(format!("S_{} + {} is not inside the next flag", i - 1, n - i + 2)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    RowTableau::new(&comb.pi, rows).map_err(|_| Error::NotAFlag(format!("flag sizes do not match π = {:?}", comb.pi)))
}

/// `S_i = (T_1 ∪ ⋯ ∪ T_i) − (n−i+1)`.
pub fn flags_from_tableau(t: &RowTableau, r_tilde: &Multiset) -> Result<Vec<Multiset>, Error> {
    if t.content() != *r_tilde {
        return Err(Error::AlphabetMismatch);
    }
    let n = t.rows.len();
    let mut acc = Multiset::new();
    let mut out = Vec::with_capacity(n - 1);
    for i in 1..n {
        acc = acc.union(&t.rows[i - 1]);
        out.push(acc.shift(&int(-((n - i + 1) as i64))));
    }
    Ok(out)
}

/// `D_i(v) = ∏_{t ∈ T_i} (v + i − 1 + t/2 − n/2) / v^{p_i}`.
pub fn tableau_d(t: &RowTableau) -> Vec<RationalFunction> {
    let n = t.rows.len() as i64;
    let h = half();
    t.rows
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let i = k as i64 + 1;
            let roots: Vec<Rational> = row.iter().map(|x| frac(n, 2) - int(i - 1) - x * &h).collect();
            RationalFunction::from_poly(Poly::from_roots(&roots)).mul(&RationalFunction::x_pow(-(row.len() as i64)))
        })
        .collect()
}

pub fn tableau_d_series(t: &RowTableau, order: i64) -> Vec<crate::series::Series> {
    tableau_d(t).iter().map(|d| d.expand(Var::U, order)).collect()
}

/// `f(−u − c)`.
fn reflect(f: &RationalFunction, c: &Rational) -> RationalFunction {
    f.shift(&-c).negate_arg()
}

fn relative_power(c: &Rational, k: i64) -> RationalFunction {
    RationalFunction::from_poly(Poly::linear_root(&-c))
        .mul(&RationalFunction::x_pow(-1))
        .pow(k)
        .expect("nonzero")
}

/// `J_i` through the tableau: `((u + (i−1)/2)/u)^{μ_i} D_{i+1}(−u−(i−1)/2) / D_i(−u−(i−1)/2)`.
pub fn phi_j(t: &RowTableau, comb: &SliceCombinatorics) -> Vec<RationalFunction> {
    let d = tableau_d(t);
    (1..comb.n)
        .map(|i| {
            let c = frac(i as i64 - 1, 2);
            relative_power(&c, comb.mu_at(i) as i64)
                .mul(&reflect(&d[i], &c))
                .div(&reflect(&d[i - 1], &c))
                .expect("D series are nonzero")
        })
        .collect()
}

/// `A_i` through the tableau: `s_i(u) Q_i(−u + (i−1)/2)` with `Q_i(v) = ∏_{j ≤ i} D_j(v − j + 1)`.
pub fn phi_a(t: &RowTableau, comb: &SliceCombinatorics) -> Vec<RationalFunction> {
    let d = tableau_d(t);
    (1..comb.n)
        .map(|i| {
            let q = (1..=i).fold(RationalFunction::one(), |acc, j| acc.mul(&d[j - 1].shift(&int(1 - j as i64))));
            s_series(comb, i).mul(&q.shift(&frac(i as i64 - 1, 2)).negate_arg())
        })
        .collect()
}

/// Highest weight of a member of `ℬ(𝐑̃)_{μ*}` through the monomial and through its tableau.
pub fn cross_check_highest_weight(
    p: &crate::crystal::Monomial,
    comb: &SliceCombinatorics,
    r_tilde: &Multiset,
    order: i64,
) -> Result<(), Error> {
    let n = comb.n;
    let r = ParameterSet::first_fundamental(n, r_tilde.clone())?;
    let s = z_factorize(p, &r)?;
    let t = tableau_from_flags(&s, r_tilde, comb)?;
    let sides = [("J", hw_j(p, n, &comb.mu), phi_j(&t, comb)), ("A", hw_a(&s), phi_a(&t, comb))];
    for (side, lhs, rhs) in sides {
        for (k, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
            let (ls, rs) = (l.expand(Var::U, order), r.expand(Var::U, order));
            if ls.first_difference(&rs, order)?.is_some() {
                return Err(Error::ConventionMismatch {
                    node: k + 1,
                    side,
                    lhs: describe(&ls, order),
                    rhs: describe(&rs, order),
                });
            }
        }
    }
    Ok(())
}

/// Every filling of the row lengths `shape` by `alphabet`, rows as multisets, in increasing order.
pub fn enumerate_row_tableaux(shape: &[usize], alphabet: &Multiset) -> Result<Vec<RowTableau>, Error> {
    if shape.iter().sum::<usize>() != alphabet.len() {
        return Err(Error::SizeMismatch(format!("shape {shape:?} for {} letters", alphabet.len())));
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    fill_rows(shape, alphabet.runs().to_vec(), &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn fill_rows(shape: &[usize], rest: Vec<(Rational, usize)>, rows: &mut Vec<Multiset>, out: &mut Vec<RowTableau>) {
    let Some((&size, tail)) = shape.split_first() else {
        out.push(RowTableau { rows: rows.clone() });
        return;
    };
    let mut picks = Vec::new();
    sub_multisets(&rest, size, 0, &mut vec![0; rest.len()], &mut picks);
    for pick in picks {
        let row = Multiset::from_runs(rest.iter().zip(&pick).map(|((v, _), &k)| (v.clone(), k)));
        let left: Vec<(Rational, usize)> =
            rest.iter().zip(&pick).filter(|((_, m), &k)| *m > k).map(|((v, m), &k)| (v.clone(), m - k)).collect();
        rows.push(row);
        fill_rows(tail, left, rows, out);
        rows.pop();
    }
}

fn sub_multisets(runs: &[(Rational, usize)], size: usize, idx: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if idx == runs.len() {
        if size == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for k in 0..=runs[idx].1.min(size) {
        cur[idx] = k;
        sub_multisets(runs, size - k, idx + 1, cur, out);
    }
    cur[idx] = 0;
}

/// One-line notation on `{1, …, N}`.
pub type Permutation = Vec<usize>;

/// Largest `N` for which permutations are enumerated.
pub const PS_LIMIT: usize = 9;

fn block_pairs(sizes: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 1;
    for &s in sizes {
        out.extend(start..start + s.saturating_sub(1));
        start += s;
    }
    out
}

/// Permutations longest in their coset for the row blocks of `pi` (acting on positions)
/// and shortest for the blocks `sizes` (acting on values), by brute force.
///
/// `w` qualifies iff `w⁻¹(k+1) < w⁻¹(k)` whenever `k, k+1` share a row block and
/// `w(k) < w(k+1)` whenever they share a value block.
pub fn enumerate_ps(pi: &[usize], sizes: &[usize]) -> Result<Vec<Permutation>, Error> {
    let n: usize = pi.iter().sum();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch(format!("{pi:?} and {sizes:?} have different totals")));
    }
    if n > PS_LIMIT {
        return Err(Error::TooLarge(format!("N = {n} > {PS_LIMIT}")));
    }
    let rows = block_pairs(pi);
    let values = block_pairs(sizes);
    let mut out = Vec::new();
    let mut w: Permutation = (1..=n).collect();
    loop {
        let mut inv = vec![0; n + 1];
        for (pos, &v) in w.iter().enumerate() {
            inv[v] = pos + 1;
        }
        if rows.iter().all(|&k| inv[k + 1] < inv[k]) && values.iter().all(|&k| w[k - 1] < w[k]) {
            out.push(w.clone());
        }
        if !next_permutation(&mut w) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("exists");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// The reference tuple: c-blocks ordered by `(c, i)`, each listed in decreasing order,
/// together with the block sizes.
pub fn reference_tuple(r: &ParameterSet) -> (Vec<Rational>, Vec<usize>) {
    let mut vertices = r.vertices();
    vertices.sort_by(|(i, c), (j, d)| c.cmp(d).then(i.cmp(j)));
    let mut values = Vec::new();
    let mut sizes = Vec::new();
    for (i, c) in vertices {
        let block = c_block_descending(r.n, i, &c);
        sizes.push(block.len());
        values.extend(block);
    }
    (values, sizes)
}

/// `T_w`: row `r` holds `x_{w⁻¹(j)}` for the positions `j` of row `r`.
pub fn ps_to_tableau(w: &[usize], r: &ParameterSet, pi: &[usize]) -> Result<RowTableau, Error> {
    let (x, _) = reference_tuple(r);
    if w.len() != x.len() || pi.iter().sum::<usize>() != x.len() {
        return Err(Error::SizeMismatch(format!("permutation of {} letters for N = {}", w.len(), x.len())));
    }
    let mut inv = vec![0; w.len() + 1];
    for (pos, &v) in w.iter().enumerate() {
        inv[v] = pos + 1;
    }
    let mut rows = Vec::with_capacity(pi.len());
    let mut start = 1;
    for &p in pi {
        rows.push((start..start + p).map(|j| x[inv[j] - 1].clone()).collect());
        start += p;
    }
    RowTableau::new(pi, rows)
}

/// Rows (1-based, top first) holding the block of one vertex, largest entry first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlacement {
    pub i: usize,
    pub c: Rational,
    pub rows: Vec<usize>,
}

pub type RColoring = Vec<BlockPlacement>;

/// First coloring of `T` by the c-blocks of `𝐑` with each block strictly descending down the rows.
pub fn overshadowing_check(t: &RowTableau, r: &ParameterSet) -> Result<RColoring, Error> {
    if t.content() != expand_parameters(r) {
        return Err(Error::AlphabetMismatch);
    }
    let vertices = r.vertices();
    let blocks: Vec<Vec<Rational>> = vertices.iter().map(|(i, c)| c_block_descending(r.n, *i, c)).collect();
    let mut remaining: Vec<Multiset> = t.rows.clone();
    let mut placements = Vec::new();
    if color(&blocks, 0, &mut remaining, &mut placements) {
        Ok(vertices.into_iter().zip(placements).map(|((i, c), rows)| BlockPlacement { i, c, rows }).collect())
    } else {
        Err(Error::NotOvershadowing)
    }
}

fn color(blocks: &[Vec<Rational>], depth: usize, remaining: &mut [Multiset], placements: &mut Vec<Vec<usize>>) -> bool {
    if depth == blocks.len() {
        return true;
    }
    let mut rows = Vec::new();
    place_block(&blocks[depth], 0, 0, remaining, &mut rows, &mut |rem, rows| {
        placements.push(rows.to_vec());
        if color(blocks, depth + 1, rem, placements) {
            return true;
        }
        placements.pop();
        false
    })
}

fn place_block(
    block: &[Rational],
    k: usize,
    min_row: usize,
    remaining: &mut [Multiset],
    rows: &mut Vec<usize>,
    next: &mut dyn FnMut(&mut [Multiset], &[usize]) -> bool,
) -> bool {
    if k == block.len() {
        return next(remaining, rows);
    }
    for row in min_row..remaining.len() {
        if remaining[row].multiplicity(&block[k]) == 0 {
            continue;
        }
        remaining[row].remove(&block[k]);
        rows.push(row + 1);
        let done = place_block(block, k + 1, row + 1, remaining, rows, next);
        rows.pop();
        remaining[row].insert(block[k].clone());
        if done {
            return true;
        }
    }
    false
}

/// Image of `ℬ(𝐑)_{μ*}` in `Row_π(𝐑̃)` against the overshadowing tableaux, and for
/// distinct parameters the count of parabolic-singular permutations.
pub fn verify_overshadowing_bijection(r: &ParameterSet, mu: &[usize]) -> Result<Report, Error> {
    let n = r.n;
    let r_tilde = expand_parameters(r);
    let mut lambda = vec![0; n - 1];
    lambda[n - 2] = r_tilde.len();
    let big = SliceCombinatorics::derive(n, &lambda, mu)?;
    let big_r = ParameterSet::first_fundamental(n, r_tilde.clone())?;
    let mut image = BTreeSet::new();
    let mut failures = Vec::new();
    for p in enumerate_weight_space(r, mu)? {
        let witness = crystal_membership(&p, r)?;
        let embedded = embed_crystal(n, &witness)?;
        if crate::crystal::assignment_monomial(n, &embedded)? != p {
            failures.push(Failure::described("embedding", p.to_string(), "product of embedded factors"));
        }
        let s = z_factorize(&p, &big_r)?;
        image.insert(tableau_from_flags(&s, &r_tilde, &big)?);
    }
    let shadowed: BTreeSet<RowTableau> = enumerate_row_tableaux(&big.pi, &r_tilde)?
        .into_iter()
        .filter(|t| overshadowing_check(t, r).is_ok())
        .collect();
    if image != shadowed {
        let first = image.symmetric_difference(&shadowed).next().map(ToString::to_string).unwrap_or_default();
        failures.push(Failure::described(
            format!("image vs overshadowing, first difference {first}"),
            image.len().to_string(),
            shadowed.len().to_string(),
        ));
    }
    let distinct = r_tilde.runs().iter().all(|(_, m)| *m == 1);
    if distinct && r_tilde.len() <= PS_LIMIT {
        let (_, sizes) = reference_tuple(r);
        let ps = enumerate_ps(&big.pi, &sizes)?;
        if ps.len() != shadowed.len() {
            failures.push(Failure::described("|PS| vs overshadowing", ps.len().to_string(), shadowed.len().to_string()));
        }
        let from_ps: BTreeSet<RowTableau> = ps.iter().map(|w| ps_to_tableau(w, r, &big.pi)).collect::<Result<_, _>>()?;
        if from_ps != shadowed {
            failures.push(Failure::described("T_w image vs overshadowing", from_ps.len().to_string(), shadowed.len().to_string()));
        }
    }
    Ok(Report::single("overshadowing-bijection", failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{y_r, Monomial};
    use crate::partition::Partition;

    fn ms(v: &[i64]) -> Multiset {
        v.iter().map(|&x| int(x)).collect()
    }

    fn multinomial(parts: &[usize]) -> usize {
        let fact = |k: usize| (1..=k).product::<usize>();
        fact(parts.iter().sum()) / parts.iter().map(|&p| fact(p)).product::<usize>()
    }

    #[test]
    fn sl2_flag_dictionary() {
        let comb = SliceCombinatorics::from_pi(&[1, 1]).unwrap();
        let r_tilde = ms(&[1, 3]);
        let t = tableau_from_flags(&[ms(&[1])], &r_tilde, &comb).unwrap();
        assert_eq!(t.rows(), [ms(&[3]), ms(&[1])]);
        assert_eq!(flags_from_tableau(&t, &r_tilde).unwrap(), [ms(&[1])]);
        assert!(matches!(tableau_from_flags(&[ms(&[5])], &r_tilde, &comb), Err(Error::NotAFlag(_))));
        assert_eq!(flags_from_tableau(&t, &ms(&[1, 4])), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn d_series_examples() {
        let t = RowTableau::new(&[1, 1, 0], vec![ms(&[4]), ms(&[2]), Multiset::new()]).unwrap();
        let d = tableau_d(&t);
        // n = 3: D_1(v) = (v + 2 − 3/2)/v and D_2(v) = (v + 1 + 1 − 3/2)/v.
        assert_eq!(d[0], RationalFunction::new(Poly::linear_root(&frac(-1, 2)), Poly::x()).unwrap());
        assert_eq!(d[1], RationalFunction::new(Poly::linear_root(&frac(-1, 2)), Poly::x()).unwrap());
        assert_eq!(d[2], RationalFunction::one());
        let sl2 = RowTableau::new(&[1, 1], vec![ms(&[3]), ms(&[1])]).unwrap();
        let d = tableau_d(&sl2);
        assert_eq!(d[0], RationalFunction::new(Poly::linear_root(&frac(-1, 2)), Poly::x()).unwrap());
        assert_eq!(d[1], RationalFunction::new(Poly::linear_root(&frac(-1, 2)), Poly::x()).unwrap());
    }

    #[test]
    fn sl2_cross_check() {
        let comb = SliceCombinatorics::from_pi(&[1, 1]).unwrap();
        let r_tilde = ms(&[0, 5]);
        let p = Monomial::from_factors([(1, int(0), 1), (1, int(3), -1)]);
        assert_eq!(cross_check_highest_weight(&p, &comb, &r_tilde, 20), Ok(()));
        let top = SliceCombinatorics::derive(2, &[2], &[2]).unwrap();
        let r = ParameterSet::first_fundamental(2, r_tilde.clone()).unwrap();
        assert_eq!(cross_check_highest_weight(&y_r(&r), &top, &r_tilde, 20), Ok(()));
    }

    #[test]
    fn sl3_members_cross_check_and_round_trip() {
        let comb = SliceCombinatorics::from_pi(&[1, 1, 1]).unwrap();
        let r_tilde = ms(&[-1, 1, 4]);
        let r = ParameterSet::first_fundamental(3, r_tilde.clone()).unwrap();
        let members = enumerate_weight_space(&r, &[0, 0]).unwrap();
        assert_eq!(members.len(), 6);
        for p in &members {
            cross_check_highest_weight(p, &comb, &r_tilde, 20).unwrap();
            let s = z_factorize(p, &r).unwrap();
            let t = tableau_from_flags(&s, &r_tilde, &comb).unwrap();
            assert_eq!(flags_from_tableau(&t, &r_tilde).unwrap(), s);
        }
    }

    #[test]
    fn row_tableaux_counts() {
        assert_eq!(enumerate_row_tableaux(&[1, 1], &ms(&[1, 3])).unwrap().len(), 2);
        assert_eq!(enumerate_row_tableaux(&[1, 2, 3], &ms(&[1, 2, 3, 4, 5, 6])).unwrap().len(), multinomial(&[1, 2, 3]));
        assert_eq!(enumerate_row_tableaux(&[1, 1], &ms(&[2, 2])).unwrap().len(), 1);
        assert_eq!(enumerate_row_tableaux(&[0, 2], &ms(&[2, 3])).unwrap().len(), 1);
    }

    #[test]
    fn ps_examples() {
        let ps = enumerate_ps(&[2, 2], &[1, 1, 1, 1]).unwrap();
        assert!(ps.contains(&vec![2, 4, 1, 3]));
        assert!(ps.contains(&vec![2, 4, 3, 1]));
        assert_eq!(enumerate_ps(&[3], &[1, 1, 1]).unwrap(), [vec![3, 2, 1]]);
        assert!(enumerate_ps(&[3], &[2, 1]).unwrap().is_empty());
        assert!(matches!(enumerate_ps(&[10], &[10]), Err(Error::TooLarge(_))));
    }

    #[test]
    fn ps_nonempty_iff_dominated_by_transpose() {
        for n in 1..=5 {
            for pi in Partition::all(n) {
                for tau in Partition::all(n) {
                    let nonempty = !enumerate_ps(pi.parts(), tau.parts()).unwrap().is_empty();
                    assert_eq!(nonempty, tau.dominance_leq(&pi.transpose()).unwrap(), "{pi:?} {tau:?}");
                }
            }
        }
    }

    #[test]
    fn row_sum_fixture_tableaux_stay_distinct() {
        let r = ParameterSet::first_fundamental(2, ms(&[2, 4, 6, 8])).unwrap();
        let a = ps_to_tableau(&[2, 4, 1, 3], &r, &[2, 2]).unwrap();
        let b = ps_to_tableau(&[2, 4, 3, 1], &r, &[2, 2]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.content(), b.content());
    }

    #[test]
    fn ps_tableaux_in_sl2() {
        let r = ParameterSet::new(2, vec![ms(&[1, 3])]).unwrap();
        let ps = enumerate_ps(&[1, 1], &[1, 1]).unwrap();
        let tableaux: BTreeSet<RowTableau> = ps.iter().map(|w| ps_to_tableau(w, &r, &[1, 1]).unwrap()).collect();
        let expected: BTreeSet<RowTableau> = [
            RowTableau::new(&[1, 1], vec![ms(&[1]), ms(&[3])]).unwrap(),
            RowTableau::new(&[1, 1], vec![ms(&[3]), ms(&[1])]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(tableaux, expected);
    }

    #[test]
    fn overshadowing_examples() {
        let single = ParameterSet::new(4, vec![ms(&[7]), Multiset::new(), Multiset::new()]).unwrap();
        let down = RowTableau::new(&[1, 1, 1], vec![ms(&[9]), ms(&[7]), ms(&[5])]).unwrap();
        let coloring = overshadowing_check(&down, &single).unwrap();
        assert_eq!(coloring[0].rows, [1, 2, 3]);
        let up = RowTableau::new(&[1, 1, 1], vec![ms(&[5]), ms(&[7]), ms(&[9])]).unwrap();
        assert_eq!(overshadowing_check(&up, &single), Err(Error::NotOvershadowing));
        let same_row = RowTableau::new(&[0, 3], vec![Multiset::new(), ms(&[5, 7, 9])]).unwrap();
        assert_eq!(overshadowing_check(&same_row, &single), Err(Error::NotOvershadowing));
        let sl2 = ParameterSet::new(2, vec![ms(&[1, 3])]).unwrap();
        for t in enumerate_row_tableaux(&[1, 1], &ms(&[1, 3])).unwrap() {
            assert!(overshadowing_check(&t, &sl2).is_ok());
        }
        assert_eq!(overshadowing_check(&up, &sl2), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn bijection_on_sl3_instances() {
        let r = ParameterSet::new(3, vec![ms(&[0]), ms(&[4])]).unwrap();
        let report = verify_overshadowing_bijection(&r, &[0, 0]).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let repeated = ParameterSet::new(3, vec![ms(&[0]), ms(&[1])]).unwrap();
        let report = verify_overshadowing_bijection(&repeated, &[0, 0]).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }
}
