//! Dense exact linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type QMatrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> QMatrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> QMatrix {
    let mut m = zeros(n, n);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = Rational::one();
    }
    m
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate().take(inner) {
            if x.is_zero() {
                continue;
            }
            for j in 0..cols {
                let y = &b[k][j];
                if !y.is_zero() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn is_zero_matrix(a: &QMatrix) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

pub fn trace(a: &QMatrix) -> Rational {
    a.iter().enumerate().fold(Rational::zero(), |acc, (k, row)| acc + &row[k])
}

/// Rank by fraction-based Gaussian elimination.
pub fn rank(a: &QMatrix) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..cols {
                let sub = &f * &m[r][j];
                m[i][j] -= sub;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Reduced row echelon form of a set of row vectors, choosing pivot columns in the given
/// priority order. Zero rows are dropped; each kept row is paired with its pivot column.
pub struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new(mut vectors: Vec<Vec<Rational>>, priority: &[usize]) -> Self {
        let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
        for &c in priority {
            let Some(p) = vectors.iter().position(|v| !v[c].is_zero()) else {
                continue;
            };
            let mut pivot_row = vectors.swap_remove(p);
            let inv = Rational::one() / &pivot_row[c];
            for x in pivot_row.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            for v in vectors.iter_mut().chain(rows.iter_mut().map(|(_, r)| r)) {
                eliminate(v, &pivot_row, c);
            }
            rows.push((c, pivot_row));
        }
        Self { rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(c, _)| *c)
    }

    /// Clears every pivot coordinate of `v` using the stored rows.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (c, row) in &self.rows {
            eliminate(v, row, *c);
        }
    }
}

fn eliminate(v: &mut [Rational], pivot_row: &[Rational], c: usize) {
    if v[c].is_zero() {
        return;
    }
    let f = v[c].clone();
    for (x, y) in v.iter_mut().zip(pivot_row) {
        if !y.is_zero() {
            *x -= &f * y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(v: &[&[i64]]) -> QMatrix {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(&zeros(3, 3)), 0);
    }

    #[test]
    fn echelon_respects_priority() {
        let e = Echelon::new(m(&[&[1, 1, 0], &[0, 1, 1]]), &[2, 1, 0]);
        let pivots: Vec<usize> = e.pivots().collect();
        assert_eq!(pivots, [2, 1]);
        let mut v = vec![int(0), int(0), int(1)];
        e.reduce(&mut v);
        // e3 ≡ −e2 ≡ e1 modulo the span.
        assert_eq!(v, [int(1), int(0), int(0)]);
    }

    #[test]
    fn products() {
        let a = m(&[&[0, 1], &[0, 0]]);
        assert!(is_zero_matrix(&mat_mul(&a, &a)));
        assert_eq!(mat_mul(&identity(2), &a), a);
        assert_eq!(trace(&m(&[&[1, 5], &[3, 2]])), int(3));
    }
}
