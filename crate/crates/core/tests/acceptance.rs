//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mvwb_core::combinatorics::{expand_parameters, shift_polynomials_f, ParameterSet, SliceCombinatorics};
use mvwb_core::crystal::{
    assignment_monomial, crystal_membership, embed_crystal, enumerate_weight_space, fundamental_crystal, hw_series_j, z_factorize, Monomial,
};
use mvwb_core::nilpotent::{jordan_type, mv_map, mv_map_oracle, pyramid_nilpotent};
use mvwb_core::partition::Partition;
use mvwb_core::poly::{Poly, RationalFunction};
use mvwb_core::rational::{frac, int, Rational};
use mvwb_core::series::{Series, SeriesMatrix, Var};
use mvwb_core::slice::{sample_point, Family, SlicePoint};
use mvwb_core::tableau::{cross_check_highest_weight, enumerate_ps, enumerate_row_tableaux, verify_overshadowing_bijection};
use mvwb_core::verify::{
    default_order, verify_classical_ae, verify_f_identities, verify_gauss_minor, verify_s_identities,
    verify_truncation_vanishing,
};
use mvwb_core::Multiset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SHAPES: [&[usize]; 5] = [&[1, 1], &[1, 2], &[1, 1, 2], &[2, 2], &[2, 3, 4]];
const MV_SAMPLES: u64 = 100;
const MV_BUDGET: Duration = Duration::from_secs(60);
const AE_SAMPLES: u64 = 50;
const AE_ORDER: i64 = 12;
const GAUSS_SAMPLES: usize = 50;
const GAUSS_ORDER: i64 = 12;
const PARAMETER_SAMPLES: usize = 20;
const EXPAND_SAMPLES: usize = 50;
const HW_ORDER: i64 = 20;
const PS_MAX_N: usize = 6;
const CARDINALITY_MAX_N: usize = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ms(v: &[i64]) -> Multiset {
    v.iter().map(|&x| int(x)).collect()
}

fn fail<E: std::fmt::Debug>(context: impl std::fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{context}: {e:?}")
}

fn multinomial(parts: &[usize]) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    fact(parts.iter().sum()) / parts.iter().map(|&p| fact(p)).product::<usize>()
}

fn first_fundamental_comb(n: usize, big_n: usize, mu: &[usize]) -> Result<SliceCombinatorics, String> {
    let mut lambda = vec![0; n - 1];
    lambda[n - 2] = big_n;
    SliceCombinatorics::derive(n, &lambda, mu).map_err(fail(format!("n={n} N={big_n} mu={mu:?}")))
}

fn mv_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for pi in SHAPES {
        let comb = SliceCombinatorics::from_pi(pi).map_err(fail("shape"))?;
        for family in [Family::Upper, Family::Lower, Family::ReducedProduct] {
            for seed in 0..MV_SAMPLES {
                let g = sample_point(&comb, seed, family);
                if !g.validate().det_is_one {
                    return Err(format!("{pi:?} {family:?} seed {seed}: det ≠ 1"));
                }
                let fast = mv_map(&g).map_err(fail("mv_map"))?;
                let oracle = mv_map_oracle(&g).map_err(fail("oracle"))?;
                if fast != oracle {
                    return Err(format!("{pi:?} {family:?} seed {seed}: mv_map differs from oracle"));
                }
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > MV_BUDGET {
        return Err(format!("{count} samples agree but took {elapsed:.1?} > {MV_BUDGET:?}"));
    }
    Ok(format!("{count} samples agree in {elapsed:.1?}"))
}

fn base_point() -> Outcome {
    for pi in SHAPES {
        let comb = SliceCombinatorics::from_pi(pi).map_err(fail("shape"))?;
        let x = mv_map(&SlicePoint::zero(comb)).map_err(fail("mv_map"))?;
        if x != pyramid_nilpotent(pi) {
            return Err(format!("{pi:?}: image of 0 is not the pyramid nilpotent"));
        }
        let jt = jordan_type(&x.entries).map_err(fail("jordan"))?;
        if jt != Partition::from_parts(pi.iter().copied()) {
            return Err(format!("{pi:?}: Jordan type {jt:?}"));
        }
    }
    Ok(format!("{} shapes", SHAPES.len()))
}

fn hand_point() -> Result<SlicePoint, String> {
    let mut g = SlicePoint::zero(SliceCombinatorics::from_pi(&[1, 1]).map_err(fail("shape"))?);
    g.set(1, 1, 1, int(1));
    g.set(1, 2, 1, int(1));
    g.set(2, 1, 1, int(-1));
    g.set(2, 2, 1, int(-1));
    Ok(g)
}

fn sign_identities() -> Outcome {
    let g = hand_point()?;
    let expected = vec![vec![int(-1), int(-1)], vec![int(1), int(1)]];
    if mv_map(&g).map_err(fail("mv_map"))?.entries != expected {
        return Err("hand fixture image differs from [[-1,-1],[1,1]]".into());
    }
    if !verify_classical_ae(&g, AE_ORDER).map_err(fail("hand"))?.passed() {
        return Err("hand fixture fails".into());
    }
    let mut checked = 0;
    for pi in SHAPES.iter().filter(|pi| pi.len() <= 4 && pi.iter().sum::<usize>() <= 8) {
        let comb = SliceCombinatorics::from_pi(pi).map_err(fail("shape"))?;
        for seed in 0..AE_SAMPLES {
            let g = sample_point(&comb, seed, Family::Free);
            let report = verify_classical_ae(&g, AE_ORDER).map_err(fail(format!("{pi:?} seed {seed}")))?;
            if let Some(f) = report.failures.first() {
                return Err(format!("{pi:?} seed {seed}: {} {} ≠ {}", f.location, f.lhs, f.rhs));
            }
            checked += 1;
        }
    }
    Ok(format!("hand fixture and {checked} free samples, r ≤ {AE_ORDER}"))
}

fn random_series(rng: &mut ChaCha8Rng, constant: i64) -> Series {
    let mut coeffs = vec![int(constant)];
    coeffs.extend((0..4).map(|_| int(rng.random_range(-3..=3))));
    Series::new(Var::U, 0, coeffs, GAUSS_ORDER)
}

fn gauss_minor() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..GAUSS_SAMPLES {
        let size = 2 + k % 4;
        let rows = (0..size)
            .map(|i| (0..size).map(|j| random_series(&mut rng, i64::from(i == j))).collect())
            .collect();
        let m = SeriesMatrix::new(rows).map_err(fail("matrix"))?;
        let report = verify_gauss_minor(&m, GAUSS_ORDER).map_err(fail(format!("matrix {k}")))?;
        if let Some(f) = report.failures.first() {
            return Err(format!("matrix {k}: {} {} ≠ {}", f.location, f.lhs, f.rhs));
        }
    }
    Ok(format!("{GAUSS_SAMPLES} matrices of sizes 2-5 to order {GAUSS_ORDER}"))
}

fn truncation_vanishing() -> Outcome {
    let mut count = 0;
    for pi in SHAPES {
        let comb = SliceCombinatorics::from_pi(pi).map_err(fail("shape"))?;
        for family in [Family::Upper, Family::Lower, Family::Free, Family::ReducedProduct] {
            for seed in 0..20 {
                let report = verify_truncation_vanishing(&sample_point(&comb, seed, family));
                if let Some(f) = report.failures.first() {
                    return Err(format!("{pi:?} {family:?} seed {seed}: {}", f.location));
                }
                count += 1;
            }
        }
    }
    let mut mutated = SlicePoint::zero(SliceCombinatorics::from_pi(&[1, 1, 1]).map_err(fail("shape"))?);
    mutated.set(1, 1, 2, int(1));
    if verify_truncation_vanishing(&mutated).passed() {
        return Err("mutation control passed".into());
    }
    Ok(format!("{count} samples vanish, mutation control fails"))
}

fn random_parameter(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.random_range(-12..=12), rng.random_range(1..=3))
}

fn random_parameter_set(rng: &mut ChaCha8Rng, n: usize, max_size: usize) -> ParameterSet {
    let sets = (1..n)
        .map(|_| (0..rng.random_range(0..=max_size)).map(|_| random_parameter(rng)).collect())
        .collect();
    ParameterSet::new(n, sets).expect("n ≥ 2")
}

fn dominated_mu(n: usize, big_n: usize) -> Vec<usize> {
    let mut mu = vec![0; n - 1];
    if !big_n.is_multiple_of(n) {
        mu[n - 1 - big_n % n] = 1;
    }
    mu
}

fn parameter_ledger() -> Outcome {
    let hand = ParameterSet::new(3, vec![ms(&[0]), ms(&[4])]).map_err(fail("hand"))?;
    let f2 = &shift_polynomials_f(&hand)[1];
    if *f2 != Poly::new(vec![frac(1, 2), int(1)]) || expand_parameters(&hand) != ms(&[-1, 1, 4]) {
        return Err(format!("hand instance: f_2 = {f2}, R̃ = {}", expand_parameters(&hand)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut count = 0;
    for n in 2..=4 {
        for k in 0..PARAMETER_SAMPLES {
            let r = random_parameter_set(&mut rng, n, 2);
            let report = verify_f_identities(&r);
            if let Some(f) = report.failures.first() {
                return Err(format!("n={n} sample {k}: {}", f.location));
            }
            let r_tilde = expand_parameters(&r);
            if !r_tilde.is_empty() {
                let comb = first_fundamental_comb(n, r_tilde.len(), &dominated_mu(n, r_tilde.len()))?;
                let order = default_order(comb.big_n);
                let report = verify_s_identities(&comb, &r_tilde).map_err(fail(format!("n={n} order {order}")))?;
                if let Some(f) = report.failures.first() {
                    return Err(format!("n={n} sample {k}: {}", f.location));
                }
            }
            count += 1;
        }
    }
    Ok(format!("hand instance and {count} random parameter sets"))
}

/// Distinct-parameter instances `(n, R̃, μ)` with `λ = Nϖ₁`.
fn distinct_instances() -> Vec<(usize, Multiset, Vec<usize>)> {
    [
        (2, ms(&[1, 3])),
        (2, ms(&[0, 10, 20, 30])),
        (2, ms(&[0, 10, 20])),
        (3, ms(&[-1, 1, 4])),
        (3, ms(&[0, 10, 20, 30])),
        (3, ms(&[0, 10, 20, 30, 40, 50])),
        (4, ms(&[0, 10, 20, 30])),
        (4, ms(&[0, 10, 20, 30, 40])),
    ]
    .into_iter()
    .map(|(n, r)| {
        let mu = dominated_mu(n, r.len());
        (n, r, mu)
    })
    .collect()
}

fn crystal_cardinalities() -> Outcome {
    for n in 2..=CARDINALITY_MAX_N {
        for i in 1..n {
            let size = fundamental_crystal(n, i, &int(0)).map_err(fail("fundamental"))?.len();
            let expected = (1..=i).fold(1, |acc, k| acc * (n - i + k) / k);
            if size != expected {
                return Err(format!("|B(y_{i})| = {size} ≠ C({n},{i}) = {expected}"));
            }
        }
    }
    let mut sizes = Vec::new();
    for (n, r_tilde, mu) in distinct_instances() {
        let comb = first_fundamental_comb(n, r_tilde.len(), &mu)?;
        let r = ParameterSet::first_fundamental(n, r_tilde.clone()).map_err(fail("parameters"))?;
        let members = enumerate_weight_space(&r, &mu).map_err(fail("crystal"))?.len();
        let rows = enumerate_row_tableaux(&comb.pi, &r_tilde).map_err(fail("tableaux"))?.len();
        let expected = multinomial(&comb.pi);
        if members != rows || rows != expected {
            return Err(format!("n={n} R̃={r_tilde}: {members} members, {rows} tableaux, {expected} expected"));
        }
        sizes.push(members.to_string());
    }
    Ok(format!("fundamental crystals for n ≤ {CARDINALITY_MAX_N}; weight spaces {}", sizes.join(", ")))
}

fn highest_weight_cross_check() -> Outcome {
    let fixture = Monomial::from_factors([(1, int(1), 1), (1, int(1), -1)]);
    let j = &hw_series_j(&fixture, 2, &[0], HW_ORDER)[0];
    let closed = RationalFunction::new(Poly::linear_root(&frac(1, 2)), Poly::linear_root(&frac(1, 2)))
        .map_err(fail("fixture"))?
        .expand(Var::U, HW_ORDER);
    if j.first_difference(&closed, HW_ORDER).map_err(fail("fixture"))?.is_some() {
        return Err(format!("sl2 fixture J = {j}"));
    }
    let mut count = 0;
    let mut instances = distinct_instances();
    instances.push((3, ms(&[-1, 1, 1]), vec![0, 0]));
    for (n, r_tilde, mu) in instances {
        let comb = first_fundamental_comb(n, r_tilde.len(), &mu)?;
        let r = ParameterSet::first_fundamental(n, r_tilde.clone()).map_err(fail("parameters"))?;
        for p in enumerate_weight_space(&r, &mu).map_err(fail("crystal"))? {
            cross_check_highest_weight(&p, &comb, &r_tilde, HW_ORDER).map_err(fail(format!("n={n} p={p}")))?;
            count += 1;
        }
    }
    let sl3 = ParameterSet::new(3, vec![ms(&[0]), ms(&[4])]).map_err(fail("parameters"))?;
    let big = first_fundamental_comb(3, 3, &[0, 0])?;
    let big_r = ParameterSet::first_fundamental(3, expand_parameters(&sl3)).map_err(fail("parameters"))?;
    for p in enumerate_weight_space(&sl3, &[0, 0]).map_err(fail("crystal"))? {
        let embedded = embed_crystal(3, &crystal_membership(&p, &sl3).map_err(fail("membership"))?).map_err(fail("embed"))?;
        if assignment_monomial(3, &embedded).map_err(fail("embed"))? != p {
            return Err(format!("embedding changes {p}"));
        }
        crystal_membership(&p, &big_r).map_err(fail("embedded membership"))?;
        z_factorize(&p, &big_r).map_err(fail("flags"))?;
        cross_check_highest_weight(&p, &big, &expand_parameters(&sl3), HW_ORDER).map_err(fail(format!("embedded p={p}")))?;
        count += 1;
    }
    Ok(format!("sl2 fixture and {count} members to order {HW_ORDER}"))
}

fn overshadowing_bijection() -> Outcome {
    let mut notes = Vec::new();
    for r in [vec![ms(&[0]), ms(&[4])], vec![ms(&[0]), ms(&[1])]] {
        let r = ParameterSet::new(3, r).map_err(fail("parameters"))?;
        let report = verify_overshadowing_bijection(&r, &[0, 0]).map_err(fail("bijection"))?;
        if let Some(f) = report.failures.first() {
            return Err(format!("R = {:?}: {} {} ≠ {}", r.sets(), f.location, f.lhs, f.rhs));
        }
        let size = enumerate_weight_space(&r, &[0, 0]).map_err(fail("crystal"))?.len();
        notes.push(format!("R̃ = {} gives {size}", expand_parameters(&r)));
    }
    Ok(notes.join("; "))
}

fn ps_criterion() -> Outcome {
    let mut pairs = 0;
    for n in 1..=PS_MAX_N {
        for pi in Partition::all(n) {
            for tau in Partition::all(n) {
                let nonempty = !enumerate_ps(pi.parts(), tau.parts()).map_err(fail("ps"))?.is_empty();
                let dominated = tau.dominance_leq(&pi.transpose()).map_err(fail("dominance"))?;
                if nonempty != dominated {
                    return Err(format!("π={pi:?} τ={tau:?}: nonempty {nonempty}, τ ≤ πᵗ {dominated}"));
                }
                pairs += 1;
            }
        }
    }
    let named: BTreeSet<Vec<usize>> = enumerate_ps(&[2, 2], &[1, 1, 1, 1]).map_err(fail("ps"))?.into_iter().collect();
    for w in [vec![2, 4, 1, 3], vec![2, 4, 3, 1]] {
        if !named.contains(&w) {
            return Err(format!("{w:?} missing from PS((2,2),(1^4))"));
        }
    }
    Ok(format!("{pairs} pairs with N ≤ {PS_MAX_N}; named permutations present"))
}

fn expand_size() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..EXPAND_SAMPLES {
        let n = rng.random_range(2..=6);
        let r = random_parameter_set(&mut rng, n, 3);
        let lambda = r.weight();
        let big_n: usize = lambda.iter().enumerate().map(|(l, &x)| (n - l - 1) * x).sum();
        let size = expand_parameters(&r).len();
        if size != big_n {
            return Err(format!("sample {k}: |R̃| = {size}, N = {big_n}"));
        }
    }
    Ok(format!("{EXPAND_SAMPLES} random instances"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("mv oracle equivalence", mv_oracle_equivalence),
        ("base point", base_point),
        ("sign identities", sign_identities),
        ("gauss minors", gauss_minor),
        ("truncation vanishing", truncation_vanishing),
        ("parameter ledger", parameter_ledger),
        ("crystal cardinalities", crystal_cardinalities),
        ("highest-weight cross-check", highest_weight_cross_check),
        ("overshadowing bijection", overshadowing_bijection),
        ("ps criterion", ps_criterion),
        ("expanded parameter count", expand_size),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.1?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{elapsed:.1?}]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
