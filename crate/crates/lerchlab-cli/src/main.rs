//! `lerchlab`: evaluate Lerch functions, run the identity suite, characterize
//! candidate eigenfunctions, and re-render reports.
//!
//! Exit codes: 0 success, 1 a check or evaluation failed, 2 bad usage or config.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use lerchlab::eigenspace::{characterize, CharPath};
use lerchlab::harness::{plan, run_checks, Group, SuiteConfig, SuiteOutcome};
use lerchlab::lerch::{completed_l_with, hurwitz, l_pm, lerch_star, lerch_zeta, EvalResult, LerchParams};
use lerchlab::report::{from_json, to_csv, to_json};
use lerchlab::special_functions::Parity;
use lerchlab::twisted::TwistedFn;
use lerchlab::LerchError;

#[derive(Parser)]
#[command(name = "lerchlab", version, about = "Lerch zeta functions and their operator identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function value and print it as JSON
    Eval(EvalArgs),
    /// Run the identity suite and write a JSON report
    Verify(VerifyArgs),
    /// Recover (A, B) for a candidate eigenfunction
    Characterize(CharArgs),
    /// Re-render a JSON report as CSV
    Report(ReportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Zeta,
    ZetaStar,
    #[value(name = "L")]
    L,
    #[value(name = "L-hat")]
    LHat,
    Hurwitz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sign {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<Sign> for Parity {
    fn from(s: Sign) -> Parity {
        match s {
            Sign::Plus => Parity::Plus,
            Sign::Minus => Parity::Minus,
        }
    }
}

/// `re,im` or a plain real.
fn parse_s(text: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("'{t}' is not a number"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re,im, got '{text}'")),
    }
}

#[derive(clap::Args)]
struct EvalArgs {
    /// s as re,im
    #[arg(long, value_parser = parse_s, allow_hyphen_values = true)]
    s: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    /// c (the argument x for hurwitz)
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, value_enum, default_value = "+")]
    parity: Sign,
    #[arg(long, value_enum, default_value = "zeta")]
    function: Function,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Flat key = value config file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Restrict to these groups (repeatable or comma-separated)
    #[arg(long, value_delimiter = ',')]
    group: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Zero every runtime_ms so reports are byte-identical across runs
    #[arg(long)]
    no_timings: bool,
    /// Write the JSON report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a CSV summary
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Print the planned checks without running them
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Candidate {
    ZetaStar,
    #[value(name = "L+")]
    LPlus,
    #[value(name = "L-")]
    LMinus,
    #[value(name = "R+")]
    RPlus,
    #[value(name = "R-")]
    RMinus,
    /// c^(−s) extended periodically instead of twisted
    Untwisted,
}

#[derive(clap::Args)]
struct CharArgs {
    #[arg(long, value_enum)]
    function: Candidate,
    #[arg(long, value_parser = parse_s, allow_hyphen_values = true)]
    s: Complex64,
    /// a or c; defaults to a when Re s > 0
    #[arg(long)]
    path: Option<String>,
    /// Coefficients are taken for |n| ≤ N
    #[arg(long, default_value_t = 32)]
    n: i64,
}

#[derive(clap::Args)]
struct ReportArgs {
    /// JSON report produced by `verify`
    input: PathBuf,
    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<LerchError> for Failure {
    fn from(e: LerchError) -> Self {
        match e {
            LerchError::Config(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn write_or_print(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn eval(args: EvalArgs) -> Result<(), Failure> {
    let cfg = SuiteConfig::from_env()?.strategy;
    let p = LerchParams::new(args.s, args.a, args.c);
    let parity = Parity::from(args.parity);
    let r: EvalResult = match args.function {
        Function::Zeta => lerch_zeta(&p, &cfg)?,
        Function::ZetaStar => lerch_star(&p, &cfg)?,
        Function::L => l_pm(&p, parity, &cfg)?,
        Function::LHat => completed_l_with(&p, parity, &cfg)?,
        Function::Hurwitz => hurwitz(args.s, args.c, &cfg)?,
    };
    println!("{}", serde_json::to_string_pretty(&r).expect("EvalResult serializes"));
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool, Failure> {
    let mut cfg = match &args.config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::from_env()?,
    };
    if !args.group.is_empty() {
        cfg.groups = args.group.iter().map(|g| g.trim().parse()).collect::<Result<Vec<Group>, _>>()?;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if args.no_timings {
        cfg.timings = false;
    }
    let checks = plan(&cfg);
    if args.list {
        for c in &checks {
            println!("{}", c.plan_line());
        }
        return Ok(true);
    }
    let outcome = SuiteOutcome { records: run_checks(&checks, &cfg) };
    write_or_print(args.out.as_ref(), &to_json(&outcome.records))?;
    if let Some(csv) = &args.csv {
        write_or_print(Some(csv), &to_csv(&outcome.records))?;
    }
    let failed: Vec<_> = outcome.records.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        eprintln!("FAIL {} [{}]: residual {:e} > {:e}", r.identity, r.params, r.residual, r.tolerance);
    }
    eprintln!("{} checks, {} failed", outcome.records.len(), failed.len());
    Ok(outcome.all_passed())
}

fn characterize_cmd(args: CharArgs) -> Result<(), Failure> {
    let s = args.s;
    let cfg = SuiteConfig::from_env()?.strategy;
    let f = match args.function {
        Candidate::ZetaStar => TwistedFn::lerch_star_with(s, cfg),
        Candidate::LPlus => TwistedFn::l_pm_with(s, Parity::Plus, cfg),
        Candidate::LMinus => TwistedFn::l_pm_with(s, Parity::Minus, cfg),
        Candidate::RPlus => TwistedFn::r_pm_with(s, Parity::Plus, cfg),
        Candidate::RMinus => TwistedFn::r_pm_with(s, Parity::Minus, cfg),
        Candidate::Untwisted => TwistedFn::periodic("c^-s", move |_, c| Ok((-s * c.ln()).exp())),
    };
    let path = match &args.path {
        Some(p) => p.parse::<CharPath>()?,
        None => CharPath::for_s(s),
    };
    let r = characterize(&f, s, path, args.n)?;
    let out = json!({
        "function": f.label(),
        "path": path,
        "a": [r.a.re, r.a.im],
        "b": [r.b.re, r.b.im],
        "residual": r.residual,
        "spread": r.spread,
        "relation_residual": r.relation_residual,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json value serializes"));
    Ok(())
}

fn report(args: ReportArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.input.display())))?;
    let records = from_json(&text)?;
    write_or_print(args.out.as_ref(), &to_csv(&records))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a).map(|_| true),
        Command::Verify(a) => verify(a),
        Command::Characterize(a) => characterize_cmd(a).map(|_| true),
        Command::Report(a) => report(a).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
