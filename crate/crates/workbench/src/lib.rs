//! Batch front end over `mvwb-core`: verification suites, enumerations, JSON formats
//! and the table renderer used by `mvwb convert`.
//!
//! Weights are entered with `λ_i` the coefficient of `ϖ_{n−i}`. For `sl₃`,
//! `--lambda 1,1 --mu 0,0` gives `N = 3`, `τ = (2,1)` and `π = (1,1,1)`.

pub mod config;
pub mod convert;
pub mod json;
pub mod parse;
pub mod suites;
