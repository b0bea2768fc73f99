//! Command-line front end. [`run_command`] is the whole program minus process
//! I/O, so it can be driven from tests.

use std::fmt::Display;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::additive::{
    distinct_multiple_order, multiplicative_complete_mapping, sumset_bound_check, triple_power_distinct,
    verify_conj41_cyclic, AdditiveError, SumsetContext,
};
use crate::config::Limits;
use crate::constructor::{build_involution, mersenne_perm, ConstructError};
use crate::counting::{sequence_counts_capped, CountKind};
use crate::linalg::{
    determinant, indicator_matrix, permanent_capped, permanent_mod_capped, power_matrix, CellPredicate, ExactMatrix,
    LinalgError,
};
use crate::perm::Permutation;
use crate::search::problems::{lookup, solve, ProblemResult};
use crate::search::{Certificate, SearchError, SearchLimits, Verdict};
use crate::sequences::DoublingSequence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Environment variable that sets the worker count when `--threads` is absent.
pub const THREADS_ENV: &str = "PERMKIT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "permkit", version, about = "Exact permanents, constrained permutations, counts and searches")]
struct Cli {
    /// TOML file overriding the default limits.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for parallel sections (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Add elapsed wall time to JSON output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the involution whose sums k + pi(k) lie in a doubling sequence.
    Construct {
        #[arg(long)]
        n: usize,
        /// pow2, fib, lucas, tri, custom:<a1,a2,...> or mersenne.
        #[arg(long, default_value = "pow2")]
        sequence: String,
        #[arg(long, value_enum, default_value_t = ConstructFormat::Cycles)]
        format: ConstructFormat,
    },
    /// Exact or modular permanent of a named matrix.
    Permanent {
        /// power, or a cell predicate: prime-sum, pow2-sum, mersenne-sum, seq-sum:<seq>, ...
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Also report the determinant.
        #[arg(long)]
        det: bool,
    },
    /// Count constrained permutations for n = 1..n-max.
    Count {
        /// fib, prime-sum, pow2 or chen-even.
        #[arg(long)]
        kind: CountKind,
        #[arg(long)]
        n_max: usize,
        /// Emit "n a(n)" lines instead of JSON.
        #[arg(long)]
        bfile: bool,
    },
    /// Search for the smallest witness of a named problem.
    Search {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Seconds.
        #[arg(long)]
        timeout: Option<f64>,
    },
    /// Group-theoretic and sumset checks: 41, 13i, 14i, 14ii, 410.
    Verify {
        #[arg(long)]
        conjecture: String,
        /// Modulus (41, 14ii), prime (13i) or field characteristic (410).
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated elements (14i, 14ii, 410); rationals as a/b.
        #[arg(long)]
        set: Option<String>,
        /// Skip the dilation reduction (41).
        #[arg(long)]
        full: bool,
        /// Enumeration budget.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructFormat {
    Oneline,
    Cycles,
    Json,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<AdditiveError> for CliError {
    fn from(e: AdditiveError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::CertificateRejected(_) => Self::Internal(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BfileError {
    #[error("index {index} does not exceed the previous index {previous}")]
    NonMonotonicIndex { index: u64, previous: u64 },
}

/// OEIS b-file text: one "n value" line per term, indices strictly increasing.
pub fn emit_bfile<V: Display>(terms: &[(u64, V)]) -> Result<String, BfileError> {
    let mut out = String::new();
    let mut previous = None;
    for (index, value) in terms {
        if let Some(previous) = previous.filter(|&p| *index <= p) {
            return Err(BfileError::NonMonotonicIndex { index: *index, previous });
        }
        previous = Some(*index);
        out.push_str(&format!("{index} {value}\n"));
    }
    Ok(out)
}

/// Run one invocation. `args` excludes the program name.
pub fn run_command<S: AsRef<str>>(args: &[S]) -> CommandOutput {
    let argv = std::iter::once("permkit").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let threads = match thread_count(cli.threads) {
        Ok(t) => t,
        Err(e) => return failure(EXIT_USAGE, &e),
    };
    let result = match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Internal(e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok((code, stdout)) => CommandOutput { code, stdout, stderr: String::new() },
        Err(CliError::Usage(m)) => failure(EXIT_USAGE, &m),
        Err(CliError::Internal(m)) => failure(EXIT_INTERNAL, &m),
    }
}

fn failure(code: i32, message: &str) -> CommandOutput {
    CommandOutput { code, stdout: String::new(), stderr: format!("error: {message}\n") }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, String> {
    let value = match flag {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| format!("{THREADS_ENV}={v} is not a thread count"))?),
            Err(_) => None,
        },
    };
    match value {
        Some(0) => Err("thread count must be positive".into()),
        v => Ok(v),
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let limits = match &cli.config {
        Some(path) => Limits::from_file(path).map_err(CliError::Usage)?,
        None => Limits::default(),
    };
    let start = Instant::now();
    let (code, mut value) = match &cli.command {
        Command::Construct { n, sequence, format } => return construct(*n, sequence, *format),
        Command::Permanent { kind, n, modulus, det } => (EXIT_OK, permanent_cmd(kind, *n, *modulus, *det, &limits)?),
        Command::Count { kind, n_max, bfile } => {
            let reports = sequence_counts_capped(*kind, *n_max, limits.count_max_n)?;
            if *bfile {
                let terms: Vec<(u64, String)> = reports.iter().map(|r| (r.n as u64, r.value().to_string())).collect();
                let text = emit_bfile(&terms).map_err(|e| CliError::Internal(e.to_string()))?;
                return Ok((EXIT_OK, text));
            }
            (EXIT_OK, json!({ "kind": kind.label(), "n_max": n_max, "reports": reports }))
        }
        Command::Search { problem, n, budget_nodes, timeout } => {
            let mut search_limits = SearchLimits::from(&limits);
            if let Some(b) = budget_nodes {
                search_limits.max_nodes = *b;
            }
            if let Some(t) = timeout {
                if !t.is_finite() || *t < 0.0 {
                    return Err(CliError::Usage(format!("invalid timeout {t}")));
                }
                search_limits.timeout = std::time::Duration::from_secs_f64(*t);
            }
            search_cmd(problem, *n, &search_limits)?
        }
        Command::Verify { conjecture, m, n, set, full, budget } => {
            (EXIT_OK, verify_cmd(conjecture, *m, *n, set.as_deref(), *full, *budget, &limits)?)
        }
    };
    if cli.timing {
        value["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    let text = serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok((code, text + "\n"))
}

#[derive(Serialize)]
struct WitnessJson {
    one_line: Vec<usize>,
    cycles: String,
    parity: &'static str,
}

impl From<&Permutation> for WitnessJson {
    fn from(p: &Permutation) -> Self {
        Self {
            one_line: p.one_line(),
            cycles: p.cycle_string(),
            parity: if p.is_even() { "even" } else { "odd" },
        }
    }
}

fn construct(n: usize, sequence: &str, format: ConstructFormat) -> Result<(i32, String), CliError> {
    let perm = if sequence == "mersenne" {
        mersenne_perm(n)?
    } else {
        let seq: DoublingSequence = sequence.parse().map_err(|e: crate::sequences::SequenceError| CliError::Usage(e.to_string()))?;
        build_involution(n, &seq)?
    };
    let text = match format {
        ConstructFormat::Oneline => perm.one_line().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        ConstructFormat::Cycles => perm.cycle_string(),
        ConstructFormat::Json => {
            let value = json!({
                "n": n,
                "sequence": sequence,
                "one_line": perm.one_line(),
                "cycles": perm.cycle_string(),
                "involution": perm.is_involution(),
                "sums": (1..=n).map(|k| k + perm.apply(k)).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?
        }
    };
    Ok((EXIT_OK, text + "\n"))
}

/// Matrix kinds accepted by `permanent --kind`.
pub fn matrix_for(kind: &str, n: usize) -> Result<ExactMatrix, String> {
    if kind == "power" {
        return power_matrix(n).map_err(|e| e.to_string());
    }
    let fixed = [
        CellPredicate::SumPrime,
        CellPredicate::SumPowerOfTwo,
        CellPredicate::SumMersenne,
        CellPredicate::ProductPlusOnePrime,
        CellPredicate::ProductMinusOnePrime,
        CellPredicate::NormFormPrime,
        CellPredicate::SumOfSquaresPrime,
        CellPredicate::PrimeSumPlusOnePrime,
        CellPredicate::PrimeProductMinusTwoPrime,
    ];
    let predicate = match fixed.into_iter().find(|p| p.label() == kind) {
        Some(p) => p,
        None => {
            let seq = kind.strip_prefix("seq-sum:").ok_or_else(|| format!("unknown matrix kind `{kind}`"))?;
            CellPredicate::SumInSequence(seq.parse().map_err(|e: crate::sequences::SequenceError| e.to_string())?)
        }
    };
    indicator_matrix(n, &predicate).map_err(|e| e.to_string())
}

fn permanent_cmd(kind: &str, n: usize, modulus: Option<u64>, det: bool, limits: &Limits) -> Result<Value, CliError> {
    let m = matrix_for(kind, n).map_err(CliError::Usage)?;
    let mut value = match modulus {
        Some(q) => json!({
            "n": n,
            "kind": kind,
            "residue": permanent_mod_capped(&m, q, limits.permanent_mod_max_n)?,
            "modulus": q,
        }),
        None => json!({
            "n": n,
            "kind": kind,
            "value": permanent_capped(&m, limits.permanent_max_n)?.to_string(),
        }),
    };
    if det {
        value["determinant"] = json!(determinant(&m).to_string());
    }
    Ok(value)
}

fn certificate_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

fn search_cmd(problem: &str, n: usize, limits: &SearchLimits) -> Result<(i32, Value), CliError> {
    let spec = lookup(problem)?;
    let mut value = json!({
        "problem": spec.name,
        "summary": spec.summary,
        "n": n,
        "expected": spec.expected(n),
    });
    let code = match solve(problem, n, limits)? {
        ProblemResult::Search(outcome) => {
            value["verdict"] = json!(outcome.verdict.label());
            value["nodes"] = json!(outcome.nodes);
            if let Verdict::Witness { perm, certificate } = &outcome.verdict {
                value["witness"] = json!(WitnessJson::from(perm));
                value["certificate"] = certificate_json(certificate);
            }
            if outcome.verdict == Verdict::Unknown { EXIT_UNKNOWN } else { EXIT_OK }
        }
        ProblemResult::Powers(report) => {
            value["verdict"] = json!(match report.unique() {
                Some(true) => "unique",
                Some(false) => "not-unique",
                None => "unknown",
            });
            value["nodes"] = json!(report.nodes);
            value["candidates"] = json!(report.candidates);
            value["undecided"] = json!(report.undecided);
            value["achievable"] = report
                .achievable
                .iter()
                .map(|(power, perm, cert)| json!({ "power": power, "witness": WitnessJson::from(perm), "certificate": certificate_json(cert) }))
                .collect();
            if report.unique().is_none() { EXIT_UNKNOWN } else { EXIT_OK }
        }
    };
    Ok((code, value))
}

fn parse_set(text: Option<&str>) -> Result<Vec<BigRational>, CliError> {
    let text = text.ok_or_else(|| CliError::Usage("--set is required".into()))?;
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let parsed = match t.split_once('/') {
                Some((a, b)) => match (a.trim().parse::<BigInt>(), b.trim().parse::<BigInt>()) {
                    (Ok(a), Ok(b)) if b != BigInt::from(0) => Some(BigRational::new(a, b)),
                    _ => None,
                },
                None => t.parse::<BigInt>().ok().map(BigRational::from_integer),
            };
            parsed.ok_or_else(|| CliError::Usage(format!("cannot parse `{t}` as a rational")))
        })
        .collect()
}

fn integers(set: &[BigRational]) -> Result<Vec<i64>, CliError> {
    set.iter()
        .map(|x| {
            use num_traits::ToPrimitive;
            x.is_integer()
                .then(|| x.to_integer().to_i64())
                .flatten()
                .ok_or_else(|| CliError::Usage(format!("{x} is not a 64-bit integer")))
        })
        .collect()
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn verify_cmd(
    conjecture: &str,
    m: Option<u64>,
    n: Option<usize>,
    set: Option<&str>,
    full: bool,
    budget: Option<u64>,
    limits: &Limits,
) -> Result<Value, CliError> {
    let value = match conjecture {
        "41" => {
            let report = verify_conj41_cyclic(require(m, "m")?, require(n, "n")?, !full, budget.unwrap_or(limits.subset_budget))?;
            json!({
                "conjecture": "41",
                "verdict": if report.counterexample.is_some() { "counterexample" } else { "ok" },
                "report": report,
            })
        }
        "13i" => {
            let report = multiplicative_complete_mapping(require(m, "m")?)?;
            let verdict = match report.exists {
                Some(true) => "mapping-found",
                Some(false) => "no-mapping",
                None => "certificate-only",
            };
            json!({ "conjecture": "13i", "verdict": verdict, "report": report })
        }
        "14i" => {
            let a = integers(&parse_set(set)?)?;
            let perm = distinct_multiple_order(&a)?;
            let values: Vec<String> = (1..=a.len()).map(|k| (k as i128 * a[perm.apply(k) - 1] as i128).to_string()).collect();
            json!({
                "conjecture": "14i",
                "verdict": "ordering-found",
                "report": { "elements": a, "witness": WitnessJson::from(&perm), "values": values },
            })
        }
        "14ii" => {
            let a = integers(&parse_set(set)?)?;
            let [x, y, z] = a[..] else {
                return Err(CliError::Usage("14ii takes exactly three elements".into()));
            };
            let modulus = require(m, "m")?;
            let residue = |v: i64| v.rem_euclid(modulus as i64) as u64;
            let report = triple_power_distinct(modulus, residue(x), residue(y), residue(z))?;
            json!({ "conjecture": "14ii", "verdict": "ok", "report": report })
        }
        "410" => {
            let a = parse_set(set)?;
            let context = match m {
                Some(p) => SumsetContext::PrimeField(p),
                None => SumsetContext::Rationals,
            };
            let report = sumset_bound_check(context, &a, require(n, "n")?, budget.unwrap_or(limits.injection_budget))?;
            json!({
                "conjecture": "410",
                "verdict": if report.satisfied { "bound-met" } else { "bound-not-met" },
                "report": report,
            })
        }
        other => return Err(CliError::Usage(format!("unknown conjecture `{other}` (expected 41, 13i, 14i, 14ii or 410)"))),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfile_lines() {
        assert_eq!(emit_bfile(&[(1, 1), (2, 1)]).unwrap(), "1 1\n2 1\n");
        assert_eq!(emit_bfile::<u8>(&[]).unwrap(), "");
        assert_eq!(
            emit_bfile(&[(1, 1), (1, 2)]),
            Err(BfileError::NonMonotonicIndex { index: 1, previous: 1 })
        );
        assert_eq!(
            emit_bfile(&[(3, 1), (2, 2)]),
            Err(BfileError::NonMonotonicIndex { index: 2, previous: 3 })
        );
    }

    #[test]
    fn set_parsing() {
        let s = parse_set(Some("1, -2, 3/6")).unwrap();
        assert_eq!(s[2], BigRational::new(1.into(), 2.into()));
        assert!(parse_set(Some("1/0")).is_err());
        assert!(parse_set(Some("x")).is_err());
        assert!(integers(&s).is_err());
    }

    #[test]
    fn matrix_kinds() {
        assert_eq!(matrix_for("prime-sum", 2).unwrap().to_i64_rows().unwrap(), vec![vec![1, 1], vec![1, 0]]);
        assert!(matrix_for("seq-sum:fib", 5).is_ok());
        assert!(matrix_for("nope", 3).is_err());
    }

    #[test]
    fn thread_flag_validation() {
        assert_eq!(thread_count(Some(2)), Ok(Some(2)));
        assert!(thread_count(Some(0)).is_err());
    }
}
