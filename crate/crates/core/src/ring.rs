//! A minimal commutative-ring interface and determinants over it.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Commutative ring operations needed by minors and elimination.
///
/// Constants are produced from an existing element so that truncated series can carry
/// their variable and precision along.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
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
        Zero::is_zero(self)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

/// Determinant of a square matrix; `None` for an empty matrix.
///
/// Cofactor expansion below dimension 4, fraction-free Bareiss elimination from 4 on
/// (falling back to cofactors if an exact division is unavailable).
pub fn det<R: Ring>(m: &[Vec<R>]) -> Option<R> {
    let n = m.len();
    let first = m.first()?.first()?;
    if n < 4 {
        return Some(cofactor(m, first));
    }
    bareiss(m).or_else(|| Some(cofactor(m, first)))
}

fn cofactor<R: Ring>(m: &[Vec<R>], template: &R) -> R {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    cofactor_rec(m, 0, &cols, template)
}

fn cofactor_rec<R: Ring>(m: &[Vec<R>], row: usize, cols: &[usize], template: &R) -> R {
    if cols.is_empty() {
        return template.one_like();
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = template.zero_like();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero_element() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&cofactor_rec(m, row + 1, &rest, template));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn bareiss<R: Ring>(m: &[Vec<R>]) -> Option<R> {
    let n = m.len();
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = m[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero_element() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero_element());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Some(m[0][0].zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Minor on the given (0-based) rows and columns; `None` for empty index sets.
pub fn minor<R: Ring>(m: &[Vec<R>], rows: &[usize], cols: &[usize]) -> Option<R> {
    let sub: Vec<Vec<R>> =
        rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
    det(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn mat(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_and_large_agree() {
        let m = mat(&[&[2, -1, 0, 3, 1], &[1, 0, 4, -2, 0], &[0, 5, 1, 1, 2], &[3, 3, -1, 0, 1], &[1, 1, 1, 1, 1]]);
        let bareiss_value = det(&m).unwrap();
        assert_eq!(bareiss_value, cofactor(&m, &int(0)));
    }

    #[test]
    fn pivot_swap_keeps_sign() {
        let m = mat(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(det(&m).unwrap(), int(-1));
        let singular = mat(&[&[0, 1, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(det(&singular).unwrap(), int(0));
    }

    #[test]
    fn minors() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(minor(&m, &[0, 1], &[0, 1]).unwrap(), int(-3));
        assert_eq!(minor(&m, &[1], &[0]).unwrap(), int(4));
        assert_eq!(minor(&m, &[], &[]), None);
        assert_eq!(det(&[vec![int(7)]]).unwrap(), int(7));
    }
}
