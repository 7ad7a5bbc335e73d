//! Command implementations behind the `normality` binary.
//!
//! Each `cmd_*` function returns the JSON document the binary prints, so the
//! commands can be driven directly from tests. Exit codes: 0 success,
//! 2 parse/usage, 3 I/O, 4 internal-consistency violation.

pub mod fixtures;
pub mod sweep;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error;
use crate::ilambda::{congruence_reduce, ilambda_generators, is_normal_lambda, LambdaSpec};
use crate::lattice::{ExponentVector, MonomialIdeal};
use crate::monoid::{almost_quasinormal, default_bound, quasinormal_status, FractionalMonoid};
use crate::newton::{integral_closure, is_normal, power_closure, NewtonPolyhedron};
use crate::rees::{build_semigroup, primes_json, r1_satisfied};

pub use sweep::{cmd_sweep, sweep_rows, SweepOptions, SweepRow, CSV_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Io(_) => 3,
            Self::Internal(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(_) => Self::Internal(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "normality",
    version,
    about = "Integral closure and normality of monomial ideals",
    subcommand_required = false,
    arg_required_else_help = true
)]
pub struct Cli {
    /// Emit JSON (the default and only machine format).
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to this path instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Window bound for quasinormality checks (defaults per λ).
    #[arg(long, global = true)]
    pub bound: Option<u64>,

    /// Skip the normality fast paths and enumerate the full criterion.
    #[arg(long, global = true)]
    pub force_enumeration: bool,

    /// Worker threads for sweeps (defaults to available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Record brute-force reference values into this directory and exit.
    #[arg(long, value_name = "DIR")]
    pub seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the integral closure.
    Closure(GensArg),
    /// Minimal generators of the integral closure of the m-th power.
    PowerClosure {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        power: u32,
    },
    /// Normality of a monomial ideal (--gens) or of I(λ) (--lambda).
    Normal {
        #[arg(long)]
        gens: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Minimal generators of I(λ).
    IlambdaGens(LambdaArg),
    /// The monoid ⟨1/λ₁, …, 1/λₙ⟩.
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// The Rees semigroup of I(λ).
    #[command(subcommand)]
    Rees(ReesCommand),
    /// Shift λᵢ by the lcm of the other entries.
    Reduce {
        #[command(flatten)]
        lambda: LambdaArg,
        /// 1-based index to shift (defaults to the last entry).
        #[arg(long)]
        index: Option<usize>,
    },
    /// Certified Newton polyhedron membership.
    Certify {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        point: String,
    },
    /// CSV table of verdicts over all nondecreasing λ in [1, max]ⁿ.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_lambda: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum MonoidCommand {
    /// Whether L + 1 ∈ ⟨ω⟩.
    AlmostQn(LambdaArg),
    /// Windowed quasinormality check.
    Quasinormal(LambdaArg),
}

#[derive(Debug, Subcommand)]
pub enum ReesCommand {
    /// Condition R₁ of Serre for the Rees algebra.
    R1(LambdaArg),
    /// Height-one monomial primes.
    Primes(LambdaArg),
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Generators as `a,b;c,d;…`.
    #[arg(long)]
    pub gens: String,
}

#[derive(Debug, Args)]
pub struct LambdaArg {
    /// Comma-separated positive integers, e.g. `2,3,7`.
    #[arg(long)]
    pub lambda: String,
}

pub fn parse_ideal(s: &str) -> CliResult<MonomialIdeal> {
    s.parse()
        .map_err(|e: Error| CliError::Usage(format!("--gens {s:?}: {e}")))
}

pub fn parse_lambda(s: &str) -> CliResult<LambdaSpec> {
    s.parse()
        .map_err(|e: Error| CliError::Usage(format!("--lambda {s:?}: {e}")))
}

pub fn cmd_closure(gens: &str) -> CliResult<Value> {
    let ideal = parse_ideal(gens)?;
    let closure = integral_closure(&ideal)?;
    Ok(json!({ "ideal": ideal, "closure": closure }))
}

pub fn cmd_power_closure(gens: &str, power: u32) -> CliResult<Value> {
    let ideal = parse_ideal(gens)?;
    let closure = power_closure(&ideal, power)?;
    Ok(json!({ "ideal": ideal, "power": power, "closure": closure }))
}

pub fn cmd_normal(gens: Option<&str>, lambda: Option<&str>, force_enumeration: bool) -> CliResult<Value> {
    match (gens, lambda) {
        (Some(g), None) => {
            let ideal = parse_ideal(g)?;
            let v = is_normal(&ideal)?;
            let mut out = json!({ "ideal": ideal });
            merge(&mut out, serde_json::to_value(v).expect("serializable"));
            Ok(out)
        }
        (None, Some(l)) => {
            let spec = parse_lambda(l)?;
            let v = is_normal_lambda(&spec, force_enumeration)?;
            Ok(serde_json::to_value(v).expect("serializable"))
        }
        _ => Err(CliError::Usage(
            "normal: give exactly one of --gens or --lambda".into(),
        )),
    }
}

pub fn cmd_ilambda_gens(lambda: &str) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    let ideal = ilambda_generators(&spec)?;
    Ok(json!({
        "lambda": spec,
        "L": spec.lcm(),
        "omega": spec.omega(),
        "generators": ideal,
    }))
}

pub fn cmd_almost_qn(lambda: &str) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    let mon = FractionalMonoid::new(spec.clone());
    let aqn = almost_quasinormal(&mon)?;
    Ok(json!({
        "lambda": spec,
        "L": spec.lcm(),
        "omega": spec.omega(),
        "target": spec.lcm() + 1,
        "almost_quasinormal": aqn,
    }))
}

pub fn cmd_quasinormal(lambda: &str, bound: Option<u64>) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    let mon = FractionalMonoid::new(spec.clone());
    let bound = match bound {
        Some(b) => b,
        None => default_bound(&mon)?,
    };
    let (status, window) = quasinormal_status(&mon, bound)?;
    Ok(json!({
        "lambda": spec,
        "L": spec.lcm(),
        "status": status,
        "window": window,
    }))
}

pub fn cmd_r1(lambda: &str) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    Ok(serde_json::to_value(r1_satisfied(&spec)?).expect("serializable"))
}

pub fn cmd_primes(lambda: &str) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    Ok(primes_json(&build_semigroup(&spec)?))
}

pub fn cmd_reduce(lambda: &str, index: Option<usize>) -> CliResult<Value> {
    let spec = parse_lambda(lambda)?;
    let i = index.unwrap_or(spec.dim());
    if i == 0 || i > spec.dim() {
        return Err(CliError::Usage(format!(
            "--index must be in 1..={}, got {i}",
            spec.dim()
        )));
    }
    let c = congruence_reduce(&spec, i - 1)?;
    Ok(json!({
        "lambda": c.lambda,
        "index": i,
        "ell": c.ell,
        "lambda_prime": c.lambda_prime,
        "relation": c.relation,
    }))
}

pub fn cmd_certify(gens: &str, point: &str) -> CliResult<Value> {
    let ideal = parse_ideal(gens)?;
    let point: ExponentVector = point
        .parse()
        .map_err(|e: Error| CliError::Usage(format!("--point {point:?}: {e}")))?;
    let cert = NewtonPolyhedron::new(ideal.clone()).contains(&point)?;
    if !cert.verify(&ideal)? {
        return Err(CliError::Internal(format!(
            "certificate for {point} failed re-verification"
        )));
    }
    Ok(serde_json::to_value(cert).expect("serializable"))
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Runs a parsed command line, returning the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<()> {
    if let Some(dir) = &cli.seed_fixtures {
        let written = fixtures::seed_fixtures(dir)?;
        for p in written {
            eprintln!("wrote {}", p.display());
        }
        return Ok(());
    }
    let Some(command) = cli.command else {
        return Err(CliError::Usage("no subcommand given".into()));
    };
    let out = cli.out.as_deref();
    let value = match command {
        Command::Closure(g) => cmd_closure(&g.gens)?,
        Command::PowerClosure { gens, power } => cmd_power_closure(&gens.gens, power)?,
        Command::Normal { gens, lambda } => {
            cmd_normal(gens.as_deref(), lambda.as_deref(), cli.force_enumeration)?
        }
        Command::IlambdaGens(l) => cmd_ilambda_gens(&l.lambda)?,
        Command::Monoid(MonoidCommand::AlmostQn(l)) => cmd_almost_qn(&l.lambda)?,
        Command::Monoid(MonoidCommand::Quasinormal(l)) => cmd_quasinormal(&l.lambda, cli.bound)?,
        Command::Rees(ReesCommand::R1(l)) => cmd_r1(&l.lambda)?,
        Command::Rees(ReesCommand::Primes(l)) => cmd_primes(&l.lambda)?,
        Command::Reduce { lambda, index } => cmd_reduce(&lambda.lambda, index)?,
        Command::Certify { gens, point } => cmd_certify(&gens.gens, &point)?,
        Command::Sweep { n, max_lambda } => {
            let opts = SweepOptions {
                n,
                max_lambda,
                bound: cli.bound,
                force_enumeration: cli.force_enumeration,
                workers: cli.workers,
            };
            let csv = cmd_sweep(&opts)?;
            return emit(out, &csv);
        }
    };
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    emit(out, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_outputs() {
        assert_eq!(cmd_closure("2,0;0,2").unwrap()["closure"], "2,0;1,1;0,2");
        assert_eq!(cmd_closure("1,0").unwrap()["closure"], "1,0");
        assert_eq!(cmd_closure("3,0;0,3").unwrap()["closure"], "3,0;2,1;1,2;0,3");
        assert_eq!(cmd_closure("2,x").unwrap_err().exit_code(), 2);
        assert_eq!(cmd_closure("").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn normal_routing() {
        assert_eq!(cmd_normal(None, Some("2,2,2"), false).unwrap()["normal"], true);
        let v = cmd_normal(None, Some("2,3,7"), false).unwrap();
        assert_eq!(v["normal"], false);
        assert_eq!(v["witness"]["p"], 2);
        assert_eq!(v["lambda"], json!([2, 3, 7]));
        let v = cmd_normal(Some("2,0;0,2"), None, false).unwrap();
        assert_eq!(v["normal"], false);
        assert_eq!(v["failing_power"], 1);
        assert_eq!(cmd_normal(Some("1,0"), Some("2,3"), false).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_normal(None, None, false).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn certify_outputs() {
        let v = cmd_certify("2,0;0,2", "1,1").unwrap();
        assert_eq!(v["verdict"], "inside");
        assert_eq!(v["denominator"], 2);
        let v = cmd_certify("2,0;0,2", "1,0").unwrap();
        assert_eq!(v["verdict"], "outside");
        assert_eq!(v["w"], json!(["1/2", "1/2"]));
        assert_eq!(cmd_certify("1,0", "0,1").unwrap()["verdict"], "outside");
        assert_eq!(cmd_certify("1,0", "0,1,1").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn monoid_and_rees_outputs() {
        assert_eq!(cmd_almost_qn("2,3,7").unwrap()["almost_quasinormal"], false);
        let v = cmd_quasinormal("2,3,7", Some(85)).unwrap();
        assert_eq!(v["status"], "not-quasinormal");
        assert_eq!(v["window"]["s"], 85);
        assert_eq!(cmd_quasinormal("2,3", None).unwrap()["status"], "quasinormal");
        assert_eq!(cmd_r1("2,3,5").unwrap()["r1"], true);
        assert_eq!(
            cmd_primes("2,2").unwrap()["P_sigma"],
            json!({"ring_vars": [1, 2], "t_generators": []})
        );
        let v = cmd_reduce("2,3,7", None).unwrap();
        assert_eq!(v["lambda_prime"], json!([2, 3, 13]));
        assert_eq!(v["relation"], "equivalent");
        assert_eq!(cmd_reduce("2,3", Some(3)).unwrap_err().exit_code(), 2);
    }
}
