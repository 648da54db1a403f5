//! Validated run configuration.

use std::path::PathBuf;

use mvwb_core::combinatorics::{ParameterSet, SliceCombinatorics};
use mvwb_core::verify::default_order;
use mvwb_core::Multiset;

/// Overrides the default series order when `--order` is absent.
pub const ORDER_ENV: &str = "MVWB_ORDER";
pub const DEFAULT_SAMPLES: u64 = 20;
pub const DEFAULT_SEED: u64 = 0;

/// One slice instance with optional spectral parameters.
#[derive(Debug, Clone)]
pub struct Instance {
    pub comb: SliceCombinatorics,
    pub parameters: Option<ParameterSet>,
}

impl Instance {
    /// Builds the instance from raw flags. `λ` defaults to the weight of the parameters;
    /// `R̃` stands for all parameters at node `n − 1`.
    pub fn resolve(
        n: usize,
        lambda: Option<Vec<usize>>,
        mu: Vec<usize>,
        parameters: Option<ParameterSet>,
        r_tilde: Option<Multiset>,
    ) -> Result<Self, String> {
        let parameters = match (parameters, r_tilde) {
            (Some(_), Some(_)) => return Err("give at most one of --R and --Rtilde".into()),
            (Some(r), None) => Some(r),
            (None, Some(rt)) => Some(ParameterSet::first_fundamental(n, rt).map_err(|e| e.to_string())?),
            (None, None) => None,
        };
        let lambda = match (lambda, &parameters) {
            (Some(l), Some(r)) if l != r.weight() => {
                return Err(format!("λ = {l:?} but the parameters have weight {:?}", r.weight()))
            }
            (Some(l), _) => l,
            (None, Some(r)) => r.weight(),
            (None, None) => return Err("--lambda is required without parameters".into()),
        };
        let comb = SliceCombinatorics::derive(n, &lambda, &mu).map_err(|e| e.to_string())?;
        Ok(Self { comb, parameters })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub instance: Instance,
    pub seed: u64,
    pub samples: u64,
    pub order: i64,
    pub out: Option<PathBuf>,
    pub mutate_block_sign: bool,
}

/// `--order`, then `MVWB_ORDER`, then `max(2N + 5, 20)`.
pub fn resolve_order(flag: Option<i64>, env: Option<&str>, big_n: usize) -> Result<i64, String> {
    let order = match (flag, env) {
        (Some(o), _) => o,
        (None, Some(text)) => text.trim().parse().map_err(|_| format!("{ORDER_ENV}={text:?} is not an integer"))?,
        (None, None) => default_order(big_n),
    };
    if order < 1 {
        return Err(format!("series order must be positive, got {order}"));
    }
    Ok(order)
}
