//! Exact arithmetic and combinatorics for the classical limit of the
//! isomorphism between affine Grassmannian slices and nilpotent slices.
//!
//! Everything here works over the rationals and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod combinatorics;
pub mod crystal;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod multiset;
pub mod nilpotent;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod series;
pub mod slice;
pub mod tableau;
pub mod verify;

pub use error::Error;
pub use laurent::{Laurent, LaurentT};
pub use multiset::Multiset;
pub use partition::Partition;
pub use poly::{Poly, PolyT, PolyU, RationalFunction, RationalFunctionU};
pub use rational::Rational;
pub use series::{gauss_decompose, Gauss, Series, SeriesMatrix, Var};
pub use combinatorics::{c_block, expand_parameters, shift_polynomials_f, ParameterSet, SliceCombinatorics};
pub use slice::{sample_point, Family, LatticeGens, SlicePoint};
pub use nilpotent::{jordan_type, mv_inverse, mv_map, mv_map_oracle, pyramid_nilpotent, Pyramid, SliceMatrix};
pub use report::{Failure, Report};
pub use crystal::{FlagConvention, Monomial};
pub use tableau::{Permutation, RowTableau};
