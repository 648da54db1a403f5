//! Verification suites. Samples and crystal members are checked in parallel; each check's
//! per-item reports are merged in input order so output never depends on scheduling.

use mvwb_core::combinatorics::{expand_parameters, ParameterSet, SliceCombinatorics};
use mvwb_core::crystal::{crystal_membership, embed_crystal, enumerate_weight_space, verify_j_consistency};
use mvwb_core::nilpotent::{mv_map_with_sign, SliceMatrix};
use mvwb_core::rational::{frac, int};
use mvwb_core::series::{Series, SeriesMatrix, Var};
use mvwb_core::tableau::{cross_check_highest_weight, verify_overshadowing_bijection};
use mvwb_core::verify::{
    verify_classical_ae, verify_classical_ae_mutated, verify_f_identities, verify_gauss_minor, verify_s_identities,
    verify_truncation_vanishing,
};
use mvwb_core::{
    jordan_type, mv_inverse, mv_map_oracle, pyramid_nilpotent, sample_point, Error, Failure, Family, Partition, Report,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Mv,
    Classical,
    Series,
    Crystal,
    All,
}

const DET_ONE_FAMILIES: [Family; 3] = [Family::Upper, Family::Lower, Family::ReducedProduct];
const GAUSS_ORDER: i64 = 12;

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Upper => "upper",
        Family::Lower => "lower",
        Family::Free => "free",
        Family::ReducedProduct => "reduced-product",
    }
}

fn error_report(check: &str, e: &Error) -> Report {
    Report::single(check, vec![Failure::described("error", e.to_string(), "")])
}

/// Runs `item` on every seed in parallel and merges the results in seed order.
fn over_seeds(check: &str, cfg: &RunConfig, item: impl Fn(u64) -> Result<Report, Error> + Sync) -> Report {
    let reports: Vec<Report> = (cfg.seed..cfg.seed + cfg.samples)
        .into_par_iter()
        .map(|seed| item(seed).unwrap_or_else(|e| error_report(check, &e)).with_seed(seed))
        .collect();
    merge(check, reports)
}

fn merge(check: &str, reports: Vec<Report>) -> Report {
    let mut total = Report::new(check);
    for r in reports {
        total.absorb(r);
    }
    total
}

fn matrix_failures(lhs: &SliceMatrix, rhs: &SliceMatrix) -> Vec<Failure> {
    let mut out = Vec::new();
    for (i, (a, b)) in lhs.entries.iter().zip(&rhs.entries).enumerate() {
        for (j, (x, y)) in a.iter().zip(b).enumerate() {
            if x != y {
                out.push(Failure::new(format!("entry ({},{})", i + 1, j + 1), x, y));
            }
        }
    }
    out
}

fn base_point(comb: &SliceCombinatorics) -> Report {
    let x = pyramid_nilpotent(&comb.pi);
    let mut failures = Vec::new();
    match mv_map_oracle(&mvwb_core::SlicePoint::zero(comb.clone())) {
        Ok(y) => failures.extend(matrix_failures(&x, &y)),
        Err(e) => failures.push(Failure::described("oracle", e.to_string(), "")),
    }
    match jordan_type(&x.entries) {
        Ok(jt) if jt == Partition::from_parts(comb.pi.iter().copied()) => {}
        Ok(jt) => failures.push(Failure::described("jordan type", format!("{:?}", jt.parts()), format!("{:?}", comb.pi))),
        Err(e) => failures.push(Failure::described("jordan type", e.to_string(), "")),
    }
    Report::single("base-point", failures)
}

fn mv_suite(cfg: &RunConfig) -> Vec<Report> {
    let comb = &cfg.instance.comb;
    let mut out = vec![base_point(comb)];
    for family in DET_ONE_FAMILIES {
        let check = format!("mv-oracle/{}", family_name(family));
        out.push(over_seeds(&check, cfg, |seed| {
            let g = sample_point(comb, seed, family);
            let x = mv_map_with_sign(&g, cfg.mutate_block_sign)?;
            Ok(Report::single(&check, matrix_failures(&x, &mv_map_oracle(&g)?)))
        }));
        let check = format!("mv-round-trip/{}", family_name(family));
        out.push(over_seeds(&check, cfg, |seed| {
            let g = sample_point(comb, seed, family);
            let back = mv_inverse(&mv_map_with_sign(&g, cfg.mutate_block_sign)?)?;
            let failures = if back == g {
                Vec::new()
            } else {
                vec![Failure::described("mv_inverse(mv_map(g))", crate::json::slice_point(&back).to_string(), crate::json::slice_point(&g).to_string())]
            };
            Ok(Report::single(&check, failures))
        }));
    }
    out
}

fn classical_suite(cfg: &RunConfig) -> Vec<Report> {
    let comb = &cfg.instance.comb;
    let mut out = Vec::new();
    for family in [Family::Free, Family::ReducedProduct] {
        let check = format!("classical-ae/{}", family_name(family));
        out.push(over_seeds(&check, cfg, |seed| {
            let g = sample_point(comb, seed, family);
            let mut report = if cfg.mutate_block_sign {
                verify_classical_ae_mutated(&g, cfg.order)?
            } else {
                verify_classical_ae(&g, cfg.order)?
            };
            report.check.clone_from(&check);
            Ok(report)
        }));
    }
    for family in [Family::Upper, Family::Lower, Family::Free, Family::ReducedProduct] {
        let check = format!("truncation-vanishing/{}", family_name(family));
        out.push(over_seeds(&check, cfg, |seed| {
            let mut report = verify_truncation_vanishing(&sample_point(comb, seed, family));
            report.check.clone_from(&check);
            Ok(report)
        }));
    }
    out
}

fn random_unit_matrix(seed: u64, order: i64) -> SeriesMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=5);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut coeffs = vec![int(i64::from(i == j))];
                    coeffs.extend((0..4).map(|_| int(rng.random_range(-3..=3))));
                    Series::new(Var::U, 0, coeffs, order)
                })
                .collect()
        })
        .collect();
    SeriesMatrix::new(rows).expect("square")
}

fn random_parameters(comb: &SliceCombinatorics, seed: u64) -> ParameterSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets = comb
        .lambda
        .iter()
        .map(|&l| (0..l).map(|_| frac(rng.random_range(-12..=12), rng.random_range(1..=3))).collect())
        .collect();
    ParameterSet::new(comb.n, sets).expect("n ≥ 2")
}

fn parameter_checks(comb: &SliceCombinatorics, r: &ParameterSet) -> Result<Report, Error> {
    let mut report = verify_f_identities(r);
    let r_tilde = expand_parameters(r);
    if r_tilde.len() != comb.big_n {
        report.failures.push(Failure::described("|R̃| vs N", r_tilde.len().to_string(), comb.big_n.to_string()));
    }
    let mut lambda = vec![0; comb.n - 1];
    lambda[comb.n - 2] = comb.big_n;
    let flat = SliceCombinatorics::derive(comb.n, &lambda, &comb.mu)?;
    report.failures.extend(verify_s_identities(&flat, &r_tilde)?.failures);
    report.check = "parameter-identities".into();
    Ok(report)
}

fn series_suite(cfg: &RunConfig) -> Vec<Report> {
    let comb = &cfg.instance.comb;
    let gauss = over_seeds("gauss-minor", cfg, |seed| verify_gauss_minor(&random_unit_matrix(seed, GAUSS_ORDER), GAUSS_ORDER));
    let params = match &cfg.instance.parameters {
        Some(r) => parameter_checks(comb, r).unwrap_or_else(|e| error_report("parameter-identities", &e)),
        None => over_seeds("parameter-identities", cfg, |seed| parameter_checks(comb, &random_parameters(comb, seed))),
    };
    vec![gauss, params]
}

fn over_members(check: &str, members: &[mvwb_core::Monomial], item: impl Fn(&mvwb_core::Monomial) -> Result<Report, Error> + Sync) -> Report {
    let reports = members
        .par_iter()
        .map(|p| {
            let mut r = item(p).unwrap_or_else(|e| error_report(check, &e));
            for f in &mut r.failures {
                f.location = format!("{p}: {}", f.location);
            }
            r
        })
        .collect();
    merge(check, reports)
}

fn crystal_suite(cfg: &RunConfig) -> Result<Vec<Report>, String> {
    let comb = &cfg.instance.comb;
    let r = cfg.instance.parameters.as_ref().ok_or("the crystal suite needs --R or --Rtilde")?;
    let n = comb.n;
    let members = match enumerate_weight_space(r, &comb.mu) {
        Ok(m) => m,
        Err(e) => return Ok(vec![error_report("crystal-enumeration", &e)]),
    };
    let r_tilde = expand_parameters(r);
    let big_r = ParameterSet::first_fundamental(n, r_tilde.clone()).map_err(|e| e.to_string())?;
    let mut out = vec![
        over_members("j-consistency", &members, |p| verify_j_consistency(p, r, &comb.mu, cfg.order)),
        over_members("embedding", &members, |p| {
            let embedded = embed_crystal(n, &crystal_membership(p, r)?)?;
            let product = mvwb_core::crystal::assignment_monomial(n, &embedded)?;
            let mut failures = Vec::new();
            if product != *p {
                failures.push(Failure::described("embedded product", product.to_string(), p.to_string()));
            }
            if crystal_membership(p, &big_r).is_err() {
                failures.push(Failure::described("membership in B(R̃)", "absent", "present"));
            }
            Ok(Report::single("embedding", failures))
        }),
    ];
    let mut lambda = vec![0; n - 1];
    lambda[n - 2] = comb.big_n;
    let big = SliceCombinatorics::derive(n, &lambda, &comb.mu).map_err(|e| e.to_string())?;
    match enumerate_weight_space(&big_r, &comb.mu) {
        Ok(big_members) => out.push(over_members("highest-weight", &big_members, |p| {
            let failures = match cross_check_highest_weight(p, &big, &r_tilde, cfg.order) {
                Ok(()) => Vec::new(),
                Err(Error::ConventionMismatch { node, side, lhs, rhs }) => {
                    vec![Failure::described(format!("{side} at node {node}"), lhs, rhs)]
                }
                Err(e) => return Err(e),
            };
            Ok(Report::single("highest-weight", failures))
        })),
        Err(e) => out.push(error_report("highest-weight", &e)),
    }
    out.push(verify_overshadowing_bijection(r, &comb.mu).unwrap_or_else(|e| error_report("overshadowing-bijection", &e)));
    Ok(out)
}

/// Runs a suite, handing each finished report to `sink` as soon as it is complete.
///
/// Returns an error only for configuration problems.
pub fn run(suite: Suite, cfg: &RunConfig, sink: &mut dyn FnMut(&Report)) -> Result<Vec<Report>, String> {
    let parts: Vec<Suite> = match suite {
        Suite::All if cfg.instance.parameters.is_some() => vec![Suite::Mv, Suite::Classical, Suite::Series, Suite::Crystal],
        Suite::All => vec![Suite::Mv, Suite::Classical, Suite::Series],
        s => vec![s],
    };
    let mut out = Vec::new();
    for part in parts {
        let reports = match part {
            Suite::Mv => mv_suite(cfg),
            Suite::Classical => classical_suite(cfg),
            Suite::Series => series_suite(cfg),
            Suite::Crystal => crystal_suite(cfg)?,
            Suite::All => unreachable!("expanded above"),
        };
        for r in reports {
            sink(&r);
            out.push(r);
        }
    }
    Ok(out)
}

/// Short human line for one report.
pub fn summary_line(r: &Report) -> String {
    let status = if r.passed() { "ok" } else { "FAILED" };
    let first = r.failures.first().map(|f| format!(" first: {} ({} vs {})", f.location, f.lhs, f.rhs)).unwrap_or_default();
    format!("{status:>6} {} instances={} failures={}{first}", r.check, r.instances, r.failures.len())
}
