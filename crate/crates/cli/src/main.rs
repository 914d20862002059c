//! `weyl`: command-line front-end for exact differential-operator algebra.
//!
//! Exit status: 0 on success, 1 when `check` finds a failing law, 2 on a
//! usage, parse or evaluation error. Diagnostics go to stderr only.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weyl_core::constructions::from_jet_map;
use weyl_core::expr::{parse, parse_jet_map, parse_with, Expr};
use weyl_core::grothendieck::{grothendieck_order, split_order_one};
use weyl_core::laws::{self, GenConfig, LawReport};
use weyl_core::symbols::{principal_symbol, quantize};
use weyl_core::{QDiffOp, QJetMap, QPoly, QSymbol};

#[derive(Parser)]
#[command(
    name = "weyl",
    version,
    about = "Exact algebra of differential operators on Q[t1..tn]"
)]
struct Cli {
    /// Number of variables (default: largest index used).
    #[arg(long, global = true, value_name = "N")]
    vars: Option<usize>,

    /// Prefix for symbol variables.
    #[arg(long, global = true, default_value = "x", value_name = "P")]
    xi_prefix: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an operator expression.
    Normalize { expr: String },
    /// Apply an operator to a polynomial.
    Apply { expr: String, poly: String },
    /// Commutator [A, B] = AB - BA.
    Comm { a: String, b: String },
    /// Order read off the normal form.
    Order { expr: String },
    /// Order computed by the commutator recursion.
    Gorder { expr: String },
    /// Principal symbol in the given grade.
    Symbol {
        expr: String,
        /// Grade; defaults to the operator's order.
        #[arg(long)]
        grade: Option<usize>,
    },
    /// Normal-ordered operator with the given principal symbol.
    Quantize { symbol: String },
    /// Split an operator of order <= 1 into derivation + multiplier.
    Split1 { expr: String },
    /// Operator of order <= k with prescribed values on monomials of degree <= k.
    Construct {
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        #[arg(long, value_name = "K")]
        degree: usize,
    },
    /// Run the randomized law harness.
    Check(CheckArgs),
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Run a single law (default: all).
    #[arg(long)]
    law: Option<String>,
    #[arg(long, conflicts_with = "ci")]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Variable count for generated instances.
    #[arg(long = "n", value_name = "N", conflicts_with = "ci")]
    n: Option<usize>,
    #[arg(long, conflicts_with = "ci")]
    max_order: Option<usize>,
    #[arg(long, conflicts_with = "ci")]
    max_coeff_degree: Option<usize>,
    #[arg(long, conflicts_with = "ci")]
    coeff_bound: Option<u32>,
    /// Pin all generator settings to their defaults; requires --seed.
    #[arg(long, requires = "seed")]
    ci: bool,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    /// List the registered laws and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `<law> <trials> <failures> <status>`, counterexamples indented below.
    Lines,
    /// Human-readable summary with timings.
    Text,
}

/// A user-facing failure: message for stderr, exit status 2.
struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<(String, ExitCode), UsageError>;

fn variable_count(vars: Option<usize>, exprs: &[&Expr]) -> Result<usize, UsageError> {
    let used = exprs.iter().map(|e| e.max_index()).max().unwrap_or(0);
    match vars {
        Some(0) => Err(UsageError("--vars must be at least 1".into())),
        Some(v) if v < used => Err(UsageError(format!("expression uses index {used} but --vars is {v}"))),
        Some(v) => Ok(v),
        None => Ok(used.max(1)),
    }
}

fn operator_expr(text: &str) -> Result<Expr, UsageError> {
    Ok(parse(text)?)
}

fn success(out: impl Into<String>) -> CmdResult {
    Ok((out.into(), ExitCode::SUCCESS))
}

fn run(cli: Cli) -> CmdResult {
    let prefix = cli.xi_prefix.as_str();
    if prefix.is_empty() || !prefix.bytes().all(|b| b.is_ascii_alphabetic()) || prefix == "t" || prefix == "d" {
        return Err(UsageError(format!("invalid --xi-prefix `{prefix}`")));
    }
    match cli.command {
        Command::Normalize { expr } => {
            let e = operator_expr(&expr)?;
            let n = variable_count(cli.vars, &[&e])?;
            success(e.eval_op::<weyl_core::Q>(n).to_string())
        }
        Command::Apply { expr, poly } => {
            let (e, p) = (operator_expr(&expr)?, operator_expr(&poly)?);
            let n = variable_count(cli.vars, &[&e, &p])?;
            let p: QPoly = p.eval_poly(n)?;
            let d: QDiffOp = e.eval_op(n);
            success(d.apply(&p)?.to_string())
        }
        Command::Comm { a, b } => {
            let (a, b) = (operator_expr(&a)?, operator_expr(&b)?);
            let n = variable_count(cli.vars, &[&a, &b])?;
            let (a, b): (QDiffOp, QDiffOp) = (a.eval_op(n), b.eval_op(n));
            success(a.commutator(&b)?.to_string())
        }
        Command::Order { expr } => {
            let e = operator_expr(&expr)?;
            let n = variable_count(cli.vars, &[&e])?;
            success(e.eval_op::<weyl_core::Q>(n).syntactic_order().to_string())
        }
        Command::Gorder { expr } => {
            let e = operator_expr(&expr)?;
            let n = variable_count(cli.vars, &[&e])?;
            success(grothendieck_order(&e.eval_op::<weyl_core::Q>(n)).to_string())
        }
        Command::Symbol { expr, grade } => {
            let e = operator_expr(&expr)?;
            let n = variable_count(cli.vars, &[&e])?;
            let d: QDiffOp = e.eval_op(n);
            let grade = grade.unwrap_or_else(|| d.syntactic_order().finite().unwrap_or(0));
            success(principal_symbol(&d, grade)?.render_with("t", prefix))
        }
        Command::Quantize { symbol } => {
            let e = parse_with(&symbol, Some(prefix))?;
            if e.has_deriv() {
                return Err(UsageError(
                    "symbol expressions use t<i> and the symbol prefix, not d<i>".into(),
                ));
            }
            let n = variable_count(cli.vars, &[&e])?;
            let s: QSymbol = e.eval_symbol(n)?;
            success(quantize(&s).to_string())
        }
        Command::Split1 { expr } => {
            let e = operator_expr(&expr)?;
            let n = variable_count(cli.vars, &[&e])?;
            let (x, a) = split_order_one(&e.eval_op::<weyl_core::Q>(n))?;
            success(format!("derivation: {x}\nmultiplier: {a}"))
        }
        Command::Construct { map, degree } => {
            let text = std::fs::read_to_string(&map).map_err(|e| UsageError(format!("{}: {e}", map.display())))?;
            let jets: QJetMap = parse_jet_map(&text, degree, cli.vars)?;
            success(from_jet_map(&jets).to_string())
        }
        Command::Check(args) => check(args),
    }
}

fn check(args: CheckArgs) -> CmdResult {
    if args.list {
        let lines: Vec<String> = laws::LAWS
            .iter()
            .map(|l| format!("{}  {}", l.name, l.statement))
            .collect();
        return success(lines.join("\n"));
    }
    let defaults = GenConfig::default();
    let cfg = GenConfig {
        n: args.n.unwrap_or(defaults.n),
        max_order: args.max_order.unwrap_or(defaults.max_order),
        max_coeff_degree: args.max_coeff_degree.unwrap_or(defaults.max_coeff_degree),
        coeff_bound: args.coeff_bound.unwrap_or(defaults.coeff_bound),
        trials: args.trials.unwrap_or(defaults.trials),
        seed: args.seed.unwrap_or(defaults.seed),
    };
    let reports = match &args.law {
        Some(name) => vec![laws::run_law(name, &cfg)?],
        None => laws::run_all(&cfg)?,
    };
    let out: Vec<String> = reports.iter().map(|r| render_report(r, args.format)).collect();
    let code = if reports.iter().all(LawReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((out.join("\n"), code))
}

fn render_report(r: &LawReport, format: Format) -> String {
    let mut s = match format {
        Format::Lines => r.line(),
        Format::Text => format!(
            "{}: {} ({} trials, {} failures, {:.1} ms)",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.trials,
            r.failed,
            r.elapsed.as_secs_f64() * 1e3
        ),
    };
    for c in &r.counterexamples {
        s.push_str("\n  ");
        s.push_str(c);
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            code
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
