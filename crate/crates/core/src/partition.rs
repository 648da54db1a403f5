//! Integer partitions, conjugation and the dominance order.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Non-increasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zero parts.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `k` (0-based), zero past the end.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Dominance order: every partial sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, Error> {
        if self.total() != other.total() {
            return Err(Error::SizeMismatch(format!(
                "partitions of {} and {}",
                self.total(),
                other.total()
            )));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for k in 0..len {
            a += self.part(k);
            b += other.part(k);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cells `(row, column)`, both 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::in_box_of_size(n, usize::MAX, n)
    }

    /// Partitions with at most `rows` parts, each at most `cols`, in lexicographic order
    /// (starting from the empty partition).
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        box_rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    fn in_box_of_size(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sized_rec(n, rows, cols, &mut cur, &mut out);
        out
    }
}

fn box_rec(rows: usize, cols: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if cur.len() == rows {
        return;
    }
    let max = cur.last().copied().unwrap_or(cols);
    for p in 1..=max {
        cur.push(p);
        box_rec(rows, cols, cur, out);
        cur.pop();
    }
}

fn sized_rec(n: usize, rows: usize, cols: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == rows {
        return;
    }
    let max = cur.last().copied().unwrap_or(cols).min(n);
    for p in (1..=max).rev() {
        cur.push(p);
        sized_rec(n - p, rows, cols, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[4, 2]).transpose(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(!p(&[2, 1]).dominance_leq(&p(&[1, 1, 1])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(matches!(p(&[2]).dominance_leq(&p(&[3])), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_parts([0, 1, 3, 0, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // Partitions in an i x (n-i) box number C(n, i).
        assert_eq!(Partition::in_box(3, 4).len(), 35);
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(1, 3)[0], Partition::empty());
    }

    #[test]
    fn cells_are_row_major() {
        let cells: Vec<_> = p(&[2, 1]).cells().collect();
        assert_eq!(cells, vec![(1, 1), (1, 2), (2, 1)]);
    }
}
