//! The `terwilliger` command line: `decompose`, `verify` and `matrices`.
//!
//! Exit codes: 0 when every check passed, 1 on a verification failure and
//! 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::binary::{BitVector, Family, GraphContext};
use crate::error::{Error, Result};
use crate::graph::{adjacency, distance_matrices, dual_adjacency, primitive_idempotents};
use crate::linalg::{QMatrix, Rational};
use crate::terwilliger::{
    algebra_dimension, classify_modules, decompose_halved, halved_classes, hypercube_classes, Classification,
    DecompositionReport, ModuleFamily, ModuleTally, TridiagonalModel, DEFAULT_CLOSURE_CAP,
};
use crate::verify::{run_suite, Check, SuiteOptions, VerificationSuiteResult};

/// Largest `D` accepted by `decompose`.
pub const DECOMPOSE_MAX_D: usize = 12;
/// Largest `D` accepted by `verify`.
pub const VERIFY_MAX_D: usize = 16;
/// Largest `D` accepted by `matrices`, which prints dense matrices.
pub const MATRICES_MAX_D: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "terwilliger",
    version,
    about = "Exact Terwilliger algebra computations for the hypercube and the halved cube"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose the standard module of the halved cube into irreducible modules.
    Decompose(DecomposeArgs),
    /// Run verification checks over a range of D.
    Verify(VerifyArgs),
    /// Export matrices or module models.
    Matrices(MatricesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub d: usize,
    /// Even-weight base vertex as a bit string of length D.
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Shorthand for `--from D --to D`.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub d: Option<usize>,
    #[arg(long)]
    pub from: Option<usize>,
    #[arg(long)]
    pub to: Option<usize>,
    /// Run every check (the default).
    #[arg(long, conflicts_with = "checks")]
    pub all: bool,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "A")]
    A,
    #[value(name = "Astar")]
    Astar,
    #[value(name = "Ai")]
    Ai,
    #[value(name = "Ei")]
    Ei,
    #[value(name = "models")]
    Models,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Hypercube,
    HalvedCube,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Hypercube => Family::Hypercube,
            FamilyArg::HalvedCube => Family::HalvedCube,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct MatricesArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long, value_enum, default_value = "halved-cube")]
    pub family: FamilyArg,
    /// Base vertex for `Astar`, as a bit string of length D.
    #[arg(long)]
    pub base: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Rendered output of a command and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub passed: bool,
}

fn check_range(d: usize, (max, label): (usize, &'static str)) -> Result<()> {
    if !(3..=max).contains(&d) {
        return Err(Error::DimensionOutOfRange(d, label));
    }
    Ok(())
}

const DECOMPOSE_RANGE: (usize, &str) = (DECOMPOSE_MAX_D, "3 <= D <= 12");
const VERIFY_RANGE: (usize, &str) = (VERIFY_MAX_D, "3 <= D <= 16");
const MATRICES_RANGE: (usize, &str) = (MATRICES_MAX_D, "3 <= D <= 10");

fn context(d: usize, family: Family, base: Option<&str>) -> Result<GraphContext> {
    let base = match base {
        None => BitVector::ZERO,
        Some(s) => {
            let (v, len) = BitVector::from_bit_string(s)?;
            if len != d {
                return Err(Error::InvalidArgument(format!("base vertex {s} has length {len}, expected {d}")));
            }
            v
        }
    };
    GraphContext::with_base(d, family, base)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// JSON form of `decompose`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub paper_check: String,
    #[serde(rename = "D")]
    pub d: usize,
    pub family: Family,
    pub items: Vec<ModuleTally>,
    pub passed: bool,
    pub report: DecompositionReport,
    pub classification: Classification,
}

/// Decomposes `½H(D,2)` at the given base vertex, with classification and
/// algebra dimension.
pub fn decompose_output(d: usize, base: Option<&str>, closure_cap: usize) -> Result<DecomposeOutput> {
    check_range(d, DECOMPOSE_RANGE)?;
    let ctx = context(d, Family::HalvedCube, base)?;
    let mut report = decompose_halved(&ctx)?;
    let classification = classify_modules(&report);
    report.algebra_dimension = Some(algebra_dimension(&ctx, closure_cap, Some(&classification))?);
    let passed = report.passed() && classification.passed();
    Ok(DecomposeOutput {
        paper_check: "decomposition".into(),
        d,
        family: Family::HalvedCube,
        items: report.modules.clone(),
        passed,
        report,
        classification,
    })
}

fn decompose_table(out: &DecomposeOutput) -> String {
    let r = &out.report;
    let mut s = String::new();
    let _ = writeln!(s, "halved cube D={} base vertex {}", r.d, r.base_vertex);
    let _ = writeln!(s, "{:<8}{:>4}{:>6}{:>14}{:>10}", "module", "k", "dim", "multiplicity", "expected");
    for m in &r.modules {
        let _ = writeln!(
            s,
            "{:<8}{:>4}{:>6}{:>14}{:>10}",
            m.label(),
            m.k,
            m.dimension,
            m.multiplicity,
            m.expected_multiplicity.to_string()
        );
    }
    let summary: Vec<String> =
        r.modules.iter().map(|m| format!("{}x{}({})", m.label(), m.multiplicity, m.dimension)).collect();
    let _ = writeln!(s, "{}", summary.join(" "));
    let _ = writeln!(s, "total {} of {}, combined rank {}", r.total_dimension, r.vertex_count, r.combined_rank);
    if let Some(a) = &r.algebra_dimension {
        let computed = a.computed.map_or_else(|| "skipped(closure)".to_string(), |c| c.to_string());
        let squares = a.sum_of_squares.map_or_else(|| "-".to_string(), |c| c.to_string());
        let _ = writeln!(s, "dim T: closure {computed}, formula {}, sum of squares {squares}", a.formula);
    }
    for p in &out.classification.pairs {
        let _ = writeln!(s, "{} vs {}: {:?}", p.first, p.second, p.by);
    }
    for c in &r.checks {
        let _ = writeln!(s, "{:<16}{}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    let _ = writeln!(s, "{}", if out.passed { "PASS" } else { "FAIL" });
    s
}

pub fn cmd_decompose(args: &DecomposeArgs) -> Result<CommandOutput> {
    let out = decompose_output(args.d, args.base.as_deref(), args.closure_cap)?;
    let text = match args.output.format {
        Format::Json => to_json(&out),
        Format::Table => decompose_table(&out),
    };
    Ok(CommandOutput { text, passed: out.passed })
}

fn selected_checks(args: &VerifyArgs) -> Result<Vec<Check>> {
    if args.all || args.checks.is_empty() {
        return Ok(Check::ALL.to_vec());
    }
    let mut checks = Vec::new();
    for name in &args.checks {
        let c: Check = name.trim().parse()?;
        if !checks.contains(&c) {
            checks.push(c);
        }
    }
    Ok(checks)
}

fn verify_table(result: &VerificationSuiteResult) -> String {
    let mut s = String::new();
    for r in result.records() {
        let _ = writeln!(
            s,
            "D={:<3}{:<16}{:<18}{:>8}ms  {}",
            r.d,
            r.check.name(),
            r.status.to_string(),
            r.elapsed_ms,
            r.detail
        );
    }
    let _ = writeln!(s, "{}", if result.passed() { "PASS" } else { "FAIL" });
    s
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<CommandOutput> {
    let (from, to) = match (args.d, args.from, args.to) {
        (Some(d), _, _) => (d, d),
        (None, Some(f), Some(t)) => (f, t),
        (None, Some(f), None) => (f, f),
        (None, None, Some(t)) => (t, t),
        (None, None, None) => return Err(Error::InvalidArgument("give --d or --from/--to".into())),
    };
    check_range(from, VERIFY_RANGE)?;
    check_range(to, VERIFY_RANGE)?;
    if from > to {
        return Err(Error::InvalidArgument(format!("--from {from} is larger than --to {to}")));
    }
    let options = SuiteOptions { checks: selected_checks(args)?, closure_cap: args.closure_cap };
    let result = run_suite(from, to, &options)?;
    let text = match args.output.format {
        Format::Json => to_json(&result),
        Format::Table => verify_table(&result),
    };
    Ok(CommandOutput { text, passed: result.passed() })
}

/// An exported matrix in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixItem {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Rational>>,
}

impl MatrixItem {
    fn new(name: impl Into<String>, m: &QMatrix) -> Self {
        MatrixItem { name: name.into(), rows: m.rows(), cols: m.cols(), entries: m.row_vecs() }
    }
}

/// Entry `i` of a closed-form module model. `beta` is absent at the last
/// index and `gamma` at the first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelEntry {
    pub family: ModuleFamily,
    pub k: usize,
    pub i: usize,
    pub alpha: Rational,
    pub beta: Option<Rational>,
    pub gamma: Option<Rational>,
    pub theta_star: Rational,
}

fn model_entries(m: &TridiagonalModel) -> Vec<ModelEntry> {
    (0..m.dimension())
        .map(|i| ModelEntry {
            family: m.family,
            k: m.k,
            i,
            alpha: m.alpha[i].clone(),
            beta: m.beta.get(i).cloned(),
            gamma: i.checked_sub(1).map(|j| m.gamma[j].clone()),
            theta_star: m.theta_star[i].clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatricesItem {
    Matrix(MatrixItem),
    Model(ModelEntry),
}

/// JSON form of `matrices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatricesOutput {
    pub paper_check: String,
    #[serde(rename = "D")]
    pub d: usize,
    pub family: Family,
    pub items: Vec<MatricesItem>,
    pub passed: bool,
    /// Row and column labels of every matrix.
    pub vertices: Vec<String>,
}

pub fn matrices_output(d: usize, which: Which, family: Family, base: Option<&str>) -> Result<MatricesOutput> {
    check_range(d, MATRICES_RANGE)?;
    let ctx = context(d, family, base)?;
    let items = match which {
        Which::A => vec![MatricesItem::Matrix(MatrixItem::new("A", &adjacency(&ctx)))],
        Which::Astar => vec![MatricesItem::Matrix(MatrixItem::new("Astar", &dual_adjacency(&ctx).to_dense()))],
        Which::Ai => distance_matrices(&ctx)
            .iter()
            .enumerate()
            .map(|(i, m)| MatricesItem::Matrix(MatrixItem::new(format!("A_{i}"), m)))
            .collect(),
        Which::Ei => primitive_idempotents(&ctx)?
            .dense_idempotents(&ctx)
            .iter()
            .enumerate()
            .map(|(i, m)| MatricesItem::Matrix(MatrixItem::new(format!("E_{i}"), m)))
            .collect(),
        Which::Models => {
            let classes = match family {
                Family::Hypercube => hypercube_classes(d),
                Family::HalvedCube => halved_classes(d),
            };
            classes.iter().flat_map(|(m, _)| model_entries(m)).map(MatricesItem::Model).collect()
        }
    };
    let vertices =
        if which == Which::Models { Vec::new() } else { ctx.vertices().iter().map(|v| v.to_bit_string(d)).collect() };
    Ok(MatricesOutput { paper_check: "matrices".into(), d, family, items, passed: true, vertices })
}

fn matrices_table(out: &MatricesOutput) -> String {
    let mut s = String::new();
    for item in &out.items {
        match item {
            MatricesItem::Matrix(m) => {
                let _ = writeln!(s, "{} ({}x{})", m.name, m.rows, m.cols);
                for row in &m.entries {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
                    let _ = writeln!(s, "{}", cells.join(" "));
                }
            }
            MatricesItem::Model(e) => {
                let opt = |x: &Option<Rational>| x.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string());
                let _ = writeln!(
                    s,
                    "{}_{} i={}: alpha={} beta={} gamma={} theta*={}",
                    e.family,
                    e.k,
                    e.i,
                    e.alpha,
                    opt(&e.beta),
                    opt(&e.gamma),
                    e.theta_star
                );
            }
        }
    }
    s
}

pub fn cmd_matrices(args: &MatricesArgs) -> Result<CommandOutput> {
    let out = matrices_output(args.d, args.which, args.family.into(), args.base.as_deref())?;
    let text = match args.output.format {
        Format::Json => to_json(&out),
        Format::Table => matrices_table(&out),
    };
    Ok(CommandOutput { text, passed: true })
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::DimensionOutOfRange(..)
            | Error::InvalidVertex(..)
            | Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::IndexOutOfRange { .. }
    )
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Decompose(a) => &a.output,
        Command::Verify(a) => &a.output,
        Command::Matrices(a) => &a.output,
    }
}

/// Runs a parsed command, writing its output, and returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Decompose(a) => cmd_decompose(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Matrices(a) => cmd_matrices(a),
    };
    match result {
        Ok(out) => {
            let written = match &output_args(&cli.command).out {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return EXIT_FAILED;
            }
            if out.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) if is_usage_error(&e) => {
            eprintln!("usage error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("verification failed: {e}");
            EXIT_FAILED
        }
    }
}

/// Parses arguments and runs; clap reports its own usage errors with exit
/// code 2.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_six() {
        let out = decompose_output(6, None, DEFAULT_CLOSURE_CAP).unwrap();
        assert!(out.passed);
        let table = decompose_table(&out);
        assert!(table.contains("M_0x1(4) M_2x9(2) N_2x5(2)"));
        assert!(table.contains("total 32 of 32"));
        let shifted = decompose_output(6, Some("000011"), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(shifted.report.modules_summary(), out.report.modules_summary());
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(decompose_output(2, None, 8), Err(Error::DimensionOutOfRange(..))));
        assert!(matches!(decompose_output(6, Some("000001"), 8), Err(Error::InvalidVertex(..))));
        assert!(matches!(decompose_output(6, Some("0011"), 8), Err(Error::InvalidArgument(_))));
        assert_eq!(run(["terwilliger", "decompose", "--d", "2"]), EXIT_USAGE);
        assert_eq!(run(["terwilliger", "verify", "--from", "5", "--to", "4"]), EXIT_USAGE);
        assert_eq!(run(["terwilliger", "verify", "--d", "3", "--checks", "bogus"]), EXIT_USAGE);
        assert_eq!(run(["terwilliger", "matrices", "--d", "4", "--which", "B"]), EXIT_USAGE);
    }

    #[test]
    fn matrices_examples() {
        let out = matrices_output(3, Which::A, Family::HalvedCube, None).unwrap();
        let MatricesItem::Matrix(a) = &out.items[0] else { panic!("matrix expected") };
        for (i, row) in a.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x.is_one(), i != j);
            }
        }
        let out = matrices_output(4, Which::Astar, Family::HalvedCube, None).unwrap();
        let MatricesItem::Matrix(s) = &out.items[0] else { panic!("matrix expected") };
        let diag: Vec<i64> = (0..8).map(|i| s.entries[i][i].to_i64().unwrap()).collect();
        assert_eq!(diag, [4, 0, 0, 0, 0, 0, 0, -4]);
        let out = matrices_output(4, Which::Models, Family::HalvedCube, None).unwrap();
        let MatricesItem::Model(first) = &out.items[0] else { panic!("model expected") };
        assert_eq!((first.family, first.k, first.i), (ModuleFamily::M, 0, 0));
        assert_eq!(first.gamma, None);
    }

    #[test]
    fn json_uses_fraction_strings() {
        let out = matrices_output(3, Which::Ei, Family::HalvedCube, None).unwrap();
        let text = to_json(&out);
        assert!(text.contains("\"1/4\""));
        assert!(text.contains("\"D\": 3"));
        let back: MatricesOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&back), text);
    }
}
