//! Tabulation of every verdict over nondecreasing `λ ∈ [1, max]ⁿ`.
//!
//! Normality of `I(λ)` is invariant under permuting `λ`, so only the sorted
//! representative of each orbit is listed. Rows are computed on a worker
//! pool and written in lexicographic order of `λ`.

use rayon::prelude::*;
use serde::Serialize;

use super::{CliError, CliResult};
use crate::ilambda::{congruence_reduce, is_normal_lambda, LambdaSpec};
use crate::monoid::{almost_quasinormal, default_bound, quasinormal_window, FractionalMonoid};
use crate::rees::r1_satisfied;

pub const CSV_HEADER: [&str; 10] = [
    "lambda",
    "gcd",
    "normal",
    "witness",
    "almost_qn",
    "r1",
    "qn_window",
    "qn_bound",
    "lambda_prime",
    "relation",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    pub n: usize,
    pub max_lambda: u64,
    /// Overrides the per-row default window bound.
    pub bound: Option<u64>,
    pub force_enumeration: bool,
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub lambda: String,
    pub gcd: u64,
    pub normal: bool,
    pub witness: String,
    pub almost_qn: bool,
    pub r1: bool,
    pub qn_window: String,
    pub qn_bound: u64,
    pub lambda_prime: String,
    pub relation: String,
}

/// All nondecreasing tuples in `[1, max]ⁿ`, lexicographically.
pub fn nondecreasing_tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    fn go(n: usize, lo: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(n, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && max > 0 {
        go(n, 1, max, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

pub fn sweep_row(spec: &LambdaSpec, bound: Option<u64>, force_enumeration: bool) -> CliResult<SweepRow> {
    let verdict = is_normal_lambda(spec, force_enumeration)?;
    let mon = FractionalMonoid::new(spec.clone());
    let aqn = almost_quasinormal(&mon)?;
    let r1 = r1_satisfied(spec)?;
    let qn_bound = match bound {
        Some(b) => b,
        None => default_bound(&mon)?,
    };
    let window = quasinormal_window(&mon, qn_bound)?;
    if verdict.normal && (!aqn || window.is_failure()) {
        return Err(CliError::Internal(format!(
            "lambda {spec}: normal but almost_qn={aqn}, window={}",
            window.label()
        )));
    }
    let cong = congruence_reduce(spec, spec.dim() - 1)?;
    Ok(SweepRow {
        lambda: spec.to_string(),
        gcd: spec.lambda_gcd(),
        normal: verdict.normal,
        witness: verdict.witness.map(|w| w.to_string()).unwrap_or_default(),
        almost_qn: aqn,
        r1: r1.r1,
        qn_window: window.label().to_string(),
        qn_bound,
        lambda_prime: cong.lambda_prime.to_string(),
        relation: cong.relation.as_str().to_string(),
    })
}

pub fn sweep_rows(opts: &SweepOptions) -> CliResult<Vec<SweepRow>> {
    if opts.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let specs = nondecreasing_tuples(opts.n, opts.max_lambda)
        .into_iter()
        .map(LambdaSpec::new)
        .collect::<crate::Result<Vec<_>>>()?;
    let work = || -> CliResult<Vec<SweepRow>> {
        specs
            .par_iter()
            .map(|s| sweep_row(s, opts.bound, opts.force_enumeration))
            .collect()
    };
    match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| CliError::Internal(format!("worker pool: {e}")))?
            .install(work),
        None => work(),
    }
}

/// The sweep as CSV text with the fixed header.
pub fn cmd_sweep(opts: &SweepOptions) -> CliResult<String> {
    let rows = sweep_rows(opts)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in &rows {
        w.write_record([
            r.lambda.as_str(),
            &r.gcd.to_string(),
            &r.normal.to_string(),
            &r.witness,
            &r.almost_qn.to_string(),
            &r.r1.to_string(),
            &r.qn_window,
            &r.qn_bound.to_string(),
            &r.lambda_prime,
            &r.relation,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
