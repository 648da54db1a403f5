//! Finite multisets of rationals as sorted run-length sequences.

use alloc::vec::Vec;
use core::fmt;

use crate::rational::{pretty, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multiset {
    runs: Vec<(Rational, usize)>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_runs(runs: impl IntoIterator<Item = (Rational, usize)>) -> Self {
        let mut out = Self::new();
        for (v, k) in runs {
            out.insert_many(v, k);
        }
        out
    }

    pub fn singleton(v: Rational) -> Self {
        Self { runs: alloc::vec![(v, 1)] }
    }

    pub fn insert(&mut self, v: Rational) {
        self.insert_many(v, 1);
    }

    pub fn insert_many(&mut self, v: Rational, k: usize) {
        if k == 0 {
            return;
        }
        match self.runs.binary_search_by(|(x, _)| x.cmp(&v)) {
            Ok(pos) => self.runs[pos].1 += k,
            Err(pos) => self.runs.insert(pos, (v, k)),
        }
    }

    /// Removes one copy of `v`; returns false if absent.
    pub fn remove(&mut self, v: &Rational) -> bool {
        match self.runs.binary_search_by(|(x, _)| x.cmp(v)) {
            Ok(pos) => {
                self.runs[pos].1 -= 1;
                if self.runs[pos].1 == 0 {
                    self.runs.remove(pos);
                }
                true
            }
            Err(_) => false,
        }
    }

    pub fn multiplicity(&self, v: &Rational) -> usize {
        self.runs
            .binary_search_by(|(x, _)| x.cmp(v))
            .map(|pos| self.runs[pos].1)
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.runs.iter().map(|(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn runs(&self) -> &[(Rational, usize)] {
        &self.runs
    }

    /// Elements in increasing order, repeated by multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.runs.iter().flat_map(|(v, k)| core::iter::repeat_n(v, *k))
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (v, k) in &other.runs {
            out.insert_many(v.clone(), *k);
        }
        out
    }

    /// Every element translated by `c`.
    pub fn shift(&self, c: &Rational) -> Multiset {
        Multiset { runs: self.runs.iter().map(|(v, k)| (v + c, *k)).collect() }
    }

    pub fn is_subset(&self, other: &Multiset) -> bool {
        self.runs.iter().all(|(v, k)| other.multiplicity(v) >= *k)
    }

    /// `self ∖ other`, or `None` when `other` is not contained in `self`.
    pub fn difference(&self, other: &Multiset) -> Option<Multiset> {
        let mut out = self.clone();
        for v in other.iter() {
            if !out.remove(v) {
                return None;
            }
        }
        Some(out)
    }
}

impl FromIterator<Rational> for Multiset {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut v: Vec<Rational> = iter.into_iter().collect();
        v.sort();
        let mut runs: Vec<(Rational, usize)> = Vec::new();
        for x in v {
            match runs.last_mut() {
                Some((y, k)) if *y == x => *k += 1,
                _ => runs.push((x, 1)),
            }
        }
        Multiset { runs }
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            f.write_str(&pretty(v))?;
        }
        f.write_str("}")
    }
}
