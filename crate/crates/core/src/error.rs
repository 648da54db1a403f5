use alloc::string::String;
use core::fmt;

/// Every failure the core can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    BadDimensions(String),
    NotDominated(String),
    NotInRootLattice(String),
    SizeMismatch(String),
    InvalidPartition(String),
    ZeroDenominator,
    Parse(String),
    IndeterminateComparison { requested: i64, order: i64 },
    IndexOutOfRange(String),
    SingularPrincipalMinor { index: usize },
    ShapeViolation(String),
    NotInSlice(String),
    OrderTooLarge { requested: i64, order: i64 },
    NotABasis(String),
    NotNilpotent,
    NotFactorizable(String),
    BoxViolation(String),
    NotMember,
    NotAFlag(String),
    AlphabetMismatch,
    ConventionMismatch { node: usize, side: &'static str, lhs: String, rhs: String },
    TooLarge(String),
    NotOvershadowing,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadDimensions(s) => write!(f, "bad dimensions: {s}"),
            Error::NotDominated(s) => write!(f, "not dominated: {s}"),
            Error::NotInRootLattice(s) => write!(f, "difference not in the coroot lattice: {s}"),
            Error::SizeMismatch(s) => write!(f, "size mismatch: {s}"),
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::IndeterminateComparison { requested, order } => write!(
                f,
                "coefficient of exponent {requested} requested beyond truncation order {order}"
            ),
            Error::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            Error::SingularPrincipalMinor { index } => {
                write!(f, "leading principal minor {index} is not a unit")
            }
            Error::ShapeViolation(s) => write!(f, "shape violation: {s}"),
            Error::NotInSlice(s) => write!(f, "lattice not in the slice: {s}"),
            Error::OrderTooLarge { requested, order } => {
                write!(f, "coefficient {requested} requested but truncation order is {order}")
            }
            Error::NotABasis(s) => write!(f, "pyramid basis does not descend to the quotient: {s}"),
            Error::NotNilpotent => write!(f, "matrix is not nilpotent"),
            Error::NotFactorizable(s) => write!(f, "monomial does not factor over the parameters: {s}"),
            Error::BoxViolation(s) => write!(f, "partition does not fit its box: {s}"),
            Error::NotMember => write!(f, "monomial is not in the crystal"),
            Error::NotAFlag(s) => write!(f, "not a flag: {s}"),
            Error::AlphabetMismatch => write!(f, "tableau entries do not match the alphabet"),
            Error::ConventionMismatch { node, side, lhs, rhs } => {
                write!(f, "{side} series disagree at node {node}: {lhs} vs {rhs}")
            }
            Error::TooLarge(s) => write!(f, "instance too large: {s}"),
            Error::NotOvershadowing => write!(f, "tableau admits no overshadowing coloring"),
        }
    }
}
