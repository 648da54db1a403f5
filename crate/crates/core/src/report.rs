//! Pass/fail records shared by every verifier.

use alloc::string::String;
use alloc::vec::Vec;

use crate::rational::{encode, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub seed: Option<u64>,
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(location: impl Into<String>, lhs: &Rational, rhs: &Rational) -> Self {
        Self { seed: None, location: location.into(), lhs: encode(lhs), rhs: encode(rhs) }
    }

    /// A failure whose sides are not single coefficients.
    pub fn described(location: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Self { seed: None, location: location.into(), lhs: lhs.into(), rhs: rhs.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Self { check: check.into(), instances: 0, failures: Vec::new() }
    }

    /// A report for one instance carrying the given failures.
    pub fn single(check: impl Into<String>, failures: Vec<Failure>) -> Self {
        Self { check: check.into(), instances: 1, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        for f in &mut self.failures {
            f.seed = Some(seed);
        }
        self
    }

    /// Appends `other`'s counts and failures, keeping order.
    pub fn absorb(&mut self, other: Report) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}
