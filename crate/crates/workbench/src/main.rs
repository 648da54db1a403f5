use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvwb_core::combinatorics::ParameterSet;
use mvwb_core::crystal::enumerate_weight_space;
use mvwb_core::tableau::{enumerate_ps, enumerate_row_tableaux};
use mvwb_core::Multiset;
use mvwb::config::{resolve_order, Instance, RunConfig, DEFAULT_SAMPLES, DEFAULT_SEED, ORDER_ENV};
use mvwb::suites::{self, Suite};
use mvwb::{convert, json, parse};
use serde_json::Value;

const VERIFICATION_FAILED: u8 = 1;
const USAGE: u8 = 2;
/// Largest product of fundamental crystal sizes searched by `enumerate --kind crystal`.
const CRYSTAL_SEARCH_LIMIT: u128 = 10_000_000;

#[derive(Parser)]
#[command(name = "mvwb", version, about = "Workbench for affine Grassmannian and nilpotent slices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the combinatorial data of a slice as JSON.
    SliceData {
        #[command(flatten)]
        weights: Weights,
    },
    /// Run a verification suite; writes one JSON report per line.
    Verify(VerifyArgs),
    /// List crystal members, row tableaux or parabolic-singular permutations as JSON.
    Enumerate(EnumerateArgs),
    /// Render JSON or JSON-lines output as plain tables.
    Convert {
        /// Input file; standard input when absent.
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Weights {
    #[arg(long)]
    n: usize,
    /// Coefficients of ϖ_{n−1}, …, ϖ_1, comma separated.
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    /// Parameters per node, e.g. "1:{0};2:{4}".
    #[arg(long = "R")]
    r: Option<String>,
    /// All parameters at the last node, e.g. "{1,3}".
    #[arg(long = "Rtilde")]
    r_tilde: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutation {
    BlockSign,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    /// Series order; defaults to MVWB_ORDER, then max(2N+5, 20).
    #[arg(long)]
    order: Option<i64>,
    /// Report file (JSON lines); standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, hide = true)]
    mutate: Option<Mutation>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Crystal,
    Tableaux,
    Ps,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long)]
    pi: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    #[arg(long)]
    alphabet: Option<String>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<mvwb_core::Error> for Failure {
    fn from(e: mvwb_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn instance(args: &InstanceArgs) -> Result<Instance, Failure> {
    let n = required(args.n, "n")?;
    let lambda = args.lambda.as_deref().map(parse::usize_list).transpose()?;
    let mu = parse::usize_list(required(args.mu.as_deref(), "mu")?)?;
    let r = args.r.as_deref().map(|t| parse::parameter_set(t, n)).transpose()?;
    let r_tilde = args.r_tilde.as_deref().map(parse::multiset).transpose()?;
    Ok(Instance::resolve(n, lambda, mu, r, r_tilde)?)
}

fn print_json(v: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn slice_data(w: &Weights) -> Result<(), Failure> {
    let lambda = parse::usize_list(&w.lambda)?;
    let mu = parse::usize_list(&w.mu)?;
    let comb = mvwb_core::SliceCombinatorics::derive(w.n, &lambda, &mu)?;
    print_json(&json::combinatorics(&comb))
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let instance = instance(&args.instance)?;
    let env = std::env::var(ORDER_ENV).ok();
    let order = resolve_order(args.order, env.as_deref(), instance.comb.big_n)?;
    let cfg = RunConfig {
        instance,
        seed: args.seed,
        samples: args.samples,
        order,
        out: args.out.clone(),
        mutate_block_sign: matches!(args.mutate, Some(Mutation::BlockSign)),
    };
    let mut sink: Box<dyn Write> = match &cfg.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut write_error = None;
    let reports = suites::run(args.suite, &cfg, &mut |r| {
        let line = json::report(r).to_string();
        if let Err(e) = writeln!(sink, "{line}").and_then(|()| sink.flush()) {
            write_error.get_or_insert(e);
        }
        eprintln!("{}", suites::summary_line(r));
    })?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn crystal_search_size(r: &ParameterSet) -> u128 {
    let n = r.n as u128;
    let choose = |i: u128| (1..=i).fold(1u128, |acc, k| acc * (n - i + k) / k);
    r.weight()
        .iter()
        .enumerate()
        .fold(1u128, |acc, (k, &l)| acc.saturating_mul(choose(k as u128 + 1).saturating_pow(l as u32)))
}

fn sorted(mut items: Vec<Value>) -> Value {
    items.sort_by_cached_key(Value::to_string);
    Value::Array(items)
}

fn enumerate(args: &EnumerateArgs) -> Result<(), Failure> {
    let list = match args.kind {
        Kind::Crystal => {
            let inst = instance(&args.instance)?;
            let r = required(inst.parameters, "R or --Rtilde")?;
            let size = crystal_search_size(&r);
            if size > CRYSTAL_SEARCH_LIMIT {
                return Err(mvwb_core::Error::TooLarge(format!("search space {size} > {CRYSTAL_SEARCH_LIMIT}")).into());
            }
            sorted(enumerate_weight_space(&r, &inst.comb.mu)?.iter().map(json::monomial).collect())
        }
        Kind::Tableaux => {
            let pi = parse::usize_list(required(args.pi.as_deref(), "pi")?)?;
            let alphabet: Multiset = parse::multiset(required(args.alphabet.as_deref(), "alphabet")?)?;
            sorted(enumerate_row_tableaux(&pi, &alphabet)?.iter().map(json::tableau).collect())
        }
        Kind::Ps => {
            let pi = parse::usize_list(required(args.pi.as_deref(), "pi")?)?;
            let tau = parse::usize_list(required(args.tau.as_deref(), "tau")?)?;
            sorted(enumerate_ps(&pi, &tau)?.into_iter().map(|w| serde_json::json!(w)).collect())
        }
    };
    print_json(&list)
}

fn convert(input: Option<&PathBuf>) -> Result<(), Failure> {
    let mut text = String::new();
    match input {
        Some(path) => File::open(path)?.read_to_string(&mut text)?,
        None => io::stdin().read_to_string(&mut text)?,
    };
    let rendered = convert::render_text(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))?;
    io::stdout().lock().write_all(rendered.as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::SliceData { weights } => slice_data(weights),
        Command::Verify(args) => verify(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Convert { input } => convert(input.as_ref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(VERIFICATION_FAILED),
        Err(Failure::Usage(message)) => {
            eprintln!("mvwb: {message}");
            ExitCode::from(USAGE)
        }
    }
}
