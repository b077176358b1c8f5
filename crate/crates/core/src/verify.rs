//! Sweeps of named checks over a range of `D`, with one exact pass/fail
//! record per check and `D`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::binary::{BitVector, Family, GraphContext};
use crate::ensure;
use crate::error::{Error, Result};
use crate::graph::{
    check_adjacency_restriction, check_distance_recurrence, check_distance_schur, check_dual_adjacency,
    check_dual_adjacency_restriction, check_dual_recurrence, check_idempotent_folding, dual_distance_matrices,
    eigenvalues_formula, intersection_numbers, primitive_idempotents, q_polynomial_check,
};
use crate::krawtchouk::{distance_matrix_identity_check, krawtchouk_identity_check, v_eval_identity_check};
use crate::terwilliger::{
    algebra_dimension, classify_modules, decompose_halved, halved_classes, hypercube_classes, hypercube_report,
    DecompositionReport, ModuleFamily,
};

/// Largest `D` at which base-vertex equivariance is checked over every even
/// base vertex; above it a few base vertices are compared.
pub const EQUIVARIANCE_ALL_BASES_MAX_D: usize = 6;

/// The named checks of the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Spectra,
    Intersection,
    Qpoly,
    Krawtchouk,
    DistancePolys,
    Restriction,
    Hypercube,
    Decompose,
    Models,
    Equivariance,
    Classify,
    Dim,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Spectra,
        Check::Intersection,
        Check::Qpoly,
        Check::Krawtchouk,
        Check::DistancePolys,
        Check::Restriction,
        Check::Hypercube,
        Check::Decompose,
        Check::Models,
        Check::Equivariance,
        Check::Classify,
        Check::Dim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Spectra => "spectra",
            Check::Intersection => "intersection",
            Check::Qpoly => "qpoly",
            Check::Krawtchouk => "krawtchouk",
            Check::DistancePolys => "distance-polys",
            Check::Restriction => "restriction",
            Check::Hypercube => "hypercube",
            Check::Decompose => "decompose",
            Check::Models => "models",
            Check::Equivariance => "equivariance",
            Check::Classify => "classify",
            Check::Dim => "dim",
        }
    }

    /// The statement the check verifies.
    pub fn statement(self) -> &'static str {
        match self {
            Check::Spectra => "eigenvalues ((D-2i)^2-D)/2 and D-2i with multiplicity trace E_i; sum E_i = I, A E_i = theta_i E_i, E_i E_j = delta_ij E_i",
            Check::Intersection => "a_i, b_i, c_i counted in the graph equal the closed forms; A_i A = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}; A_i o A_j = delta_ij A_i",
            Check::Qpoly => "|X| E_i o E_1 = b*_{i-1} E_{i-1} + a*_i E_i + c*_{i+1} E_{i+1} with closed-form dual intersection numbers; A*_yy = D - 2w(x-y) = |X| (E_1)_xy; dual three-term relation",
            Check::Krawtchouk => "v_i(t) = C(D,i) K_i((D-t)/2; 2, D) at t = D-2n; v_{D-1}(D-2n) = (-1)^n (D-2n)",
            Check::DistancePolys => "hypercube A_i = v_i(A) and A*_i = v_i(A*)",
            Check::Restriction => "A = A_2 on C^X; E_i = (E_i + E_{D-i}) on C^X; A* = hypercube A* on C^X",
            Check::Hypercube => "hypercube modules L_k with multiplicity (D-2k+1)/(D-k+1) C(D,k) and tridiagonal L_k models, spanning the standard module",
            Check::Decompose => "halved-cube modules M_k and N_k with their multiplicities and tridiagonal models; dimensions sum to 2^(D-1); full-rank combined basis; even/odd split of hypercube modules",
            Check::Models => "M_k and N_k models well formed with spectra inside the halved-cube spectrum; trace of M_0 equals the sum of the eigenvalues",
            Check::Equivariance => "decomposition independent of the even base vertex",
            Check::Classify => "classes pairwise distinct by dimension, A* diagonal or A diagonal; sum of squared dimensions equals the algebra dimension formula",
            Check::Dim => "dim T = C(floor(D/2)+3,3) + C(ceil(D/2)+1,3) and hypercube dim T = C(D+3,3) by closure of {A, A*}",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The closure computation was skipped above the cap; the formula-level
    /// parts of the check still ran and passed.
    #[serde(rename = "skipped(closure)")]
    SkippedClosure,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedClosure => "skipped(closure)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: Check,
    pub statement: String,
    #[serde(rename = "D")]
    pub d: usize,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

/// All records for one `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRun {
    pub paper_check: String,
    #[serde(rename = "D")]
    pub d: usize,
    pub family: Family,
    pub items: Vec<CheckRecord>,
    pub passed: bool,
}

/// Records for a range of `D`, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationSuiteResult {
    pub runs: Vec<SuiteRun>,
}

impl VerificationSuiteResult {
    pub fn passed(&self) -> bool {
        self.runs.iter().all(|r| r.passed)
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.runs.iter().flat_map(|r| &r.items)
    }
}

/// Options for a sweep.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub checks: Vec<Check>,
    pub closure_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { checks: Check::ALL.to_vec(), closure_cap: crate::terwilliger::DEFAULT_CLOSURE_CAP }
    }
}

/// Per-`D` state shared between checks.
struct Workspace {
    d: usize,
    cube: GraphContext,
    halved: GraphContext,
    decomposition: Option<DecompositionReport>,
}

impl Workspace {
    fn new(d: usize) -> Result<Self> {
        Ok(Workspace {
            d,
            cube: GraphContext::new(d, Family::Hypercube)?,
            halved: GraphContext::new(d, Family::HalvedCube)?,
            decomposition: None,
        })
    }

    fn decomposition(&mut self) -> Result<&DecompositionReport> {
        if self.decomposition.is_none() {
            self.decomposition = Some(decompose_halved(&self.halved)?);
        }
        Ok(self.decomposition.as_ref().expect("just computed"))
    }

    fn contexts(&self) -> [&GraphContext; 2] {
        [&self.cube, &self.halved]
    }
}

fn failed_flags(report: &DecompositionReport) -> Vec<&str> {
    report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
}

fn spectra(ws: &mut Workspace) -> Result<String> {
    let mut parts = Vec::new();
    for ctx in ws.contexts() {
        let spectral = primitive_idempotents(ctx)?;
        ensure!(
            spectral.eigenvalues == eigenvalues_formula(ctx.d(), ctx.family()),
            "{}: eigenvalues differ from the closed form",
            ctx.family()
        );
        let mults: Vec<String> = spectral.multiplicities.iter().map(usize::to_string).collect();
        parts.push(format!("{} multiplicities [{}]", ctx.family(), mults.join(", ")));
    }
    Ok(parts.join("; "))
}

fn intersection(ws: &mut Workspace) -> Result<String> {
    for ctx in ws.contexts() {
        let arr = intersection_numbers(ctx)?;
        check_distance_recurrence(ctx, &arr)?;
        check_distance_schur(ctx)?;
    }
    Ok(if ws.d <= crate::graph::EXHAUSTIVE_COUNT_MAX_D {
        "counted over all vertex pairs".into()
    } else {
        "counted from the base vertex".into()
    })
}

fn qpoly(ws: &mut Workspace) -> Result<String> {
    let mut parts = Vec::new();
    for ctx in ws.contexts() {
        let spectral = primitive_idempotents(ctx)?;
        let arr = q_polynomial_check(ctx, &spectral)?;
        check_dual_adjacency(ctx, &spectral)?;
        check_dual_recurrence(&dual_distance_matrices(ctx, &spectral), &arr)?;
        let last = arr.a_star.len() - 1;
        parts.push(format!("{} a*_{last} = {}, c*_{last} = {}", ctx.family(), arr.a_star[last], arr.c_star[last]));
    }
    Ok(parts.join("; "))
}

fn krawtchouk(ws: &mut Workspace) -> Result<String> {
    ensure!(krawtchouk_identity_check(ws.d)?, "D={}: Krawtchouk form of v_i fails", ws.d);
    ensure!(v_eval_identity_check(ws.d), "D={}: v_(D-1)(D-2n) identity fails", ws.d);
    Ok(format!("{} evaluation points", ws.d + 1))
}

fn distance_polys(ws: &mut Workspace) -> Result<String> {
    ensure!(distance_matrix_identity_check(&ws.cube)?, "D={}: A_i = v_i(A) or A*_i = v_i(A*) fails", ws.d);
    Ok(format!("i = 0..{}", ws.d))
}

fn restriction(ws: &mut Workspace) -> Result<String> {
    check_adjacency_restriction(ws.d)?;
    check_idempotent_folding(ws.d)?;
    check_dual_adjacency_restriction(ws.d, BitVector::ZERO)?;
    Ok(if ws.d.is_multiple_of(2) {
        "even D, middle idempotent unpaired".into()
    } else {
        "odd D, all idempotents paired".into()
    })
}

fn hypercube(ws: &mut Workspace) -> Result<String> {
    let (report, _) = hypercube_report(&ws.cube)?;
    ensure!(report.passed(), "D={}: hypercube decomposition flags failed: {:?}", ws.d, failed_flags(&report));
    let mults: Vec<String> = report.modules.iter().map(|m| format!("{}x{}", m.label(), m.multiplicity)).collect();
    Ok(mults.join(" "))
}

fn decompose(ws: &mut Workspace) -> Result<String> {
    let report = ws.decomposition()?;
    ensure!(report.passed(), "D={}: decomposition flags failed: {:?}", report.d, failed_flags(report));
    let mults: Vec<String> =
        report.modules.iter().map(|m| format!("{}x{}({})", m.label(), m.multiplicity, m.dimension)).collect();
    Ok(format!("{}; total {}", mults.join(" "), report.total_dimension))
}

fn models(ws: &mut Workspace) -> Result<String> {
    let thetas = eigenvalues_formula(ws.d, Family::HalvedCube);
    for (m, _) in halved_classes(ws.d) {
        ensure!(m.is_well_formed(), "D={}: {} model is not well formed", ws.d, m.label());
        ensure!(
            m.eigenvalues_among(&thetas).is_some(),
            "D={}: {} model has an eigenvalue outside the halved-cube spectrum",
            ws.d,
            m.label()
        );
        if m.family == ModuleFamily::M && m.k == 0 {
            let trace: crate::Rational = m.alpha.iter().sum();
            let total: crate::Rational = thetas.iter().sum();
            ensure!(trace == total, "D={}: trace of M_0 is {trace}, eigenvalue sum {total}", ws.d);
        }
    }
    let cube_thetas = eigenvalues_formula(ws.d, Family::Hypercube);
    for (m, _) in hypercube_classes(ws.d) {
        ensure!(
            m.is_well_formed() && m.eigenvalues_among(&cube_thetas).is_some(),
            "D={}: {} model is inconsistent with the hypercube spectrum",
            ws.d,
            m.label()
        );
    }
    Ok(format!("{} halved-cube classes", halved_classes(ws.d).len()))
}

fn equivariance(ws: &mut Workspace) -> Result<String> {
    let d = ws.d;
    let reference = ws.decomposition()?.clone();
    let bases: Vec<BitVector> = if d <= EQUIVARIANCE_ALL_BASES_MAX_D {
        ws.halved.vertices().to_vec()
    } else {
        vec![BitVector::new(0b11), BitVector::new((1 << d) - 1 - (d as u32 % 2)), BitVector::new(0b1111 << (d - 4))]
    };
    for &b in &bases {
        let ctx = GraphContext::with_base(d, Family::HalvedCube, b)?;
        let report = decompose_halved(&ctx)?;
        ensure!(report.passed(), "D={d} base {}: decomposition flags failed", b.to_bit_string(d));
        ensure!(
            report.modules == reference.modules,
            "D={d} base {}: decomposition differs from base 0",
            b.to_bit_string(d)
        );
    }
    Ok(format!("{} base vertices", bases.len()))
}

fn classify(ws: &mut Workspace) -> Result<String> {
    let d = ws.d;
    let report = ws.decomposition()?;
    let c = classify_modules(report);
    ensure!(c.consistent_within_groups, "D={d}: instances of one class have different models");
    if let Some(p) = c.pairs.iter().find(|p| p.by == crate::terwilliger::Distinction::None) {
        return Err(Error::Verification(format!("D={d}: {} and {} have identical models", p.first, p.second)));
    }
    let formula = crate::terwilliger::halved_algebra_dimension_formula(d);
    ensure!(
        c.sum_of_squares == formula,
        "D={d}: sum of squared dimensions {} differs from {formula}",
        c.sum_of_squares
    );
    Ok(format!("{} classes, sum of squares {}", c.classes.len(), c.sum_of_squares))
}

fn dim(ws: &mut Workspace, cap: usize) -> Result<(Status, String)> {
    let mut parts = Vec::new();
    for ctx in ws.contexts() {
        let dim = algebra_dimension(ctx, cap, None)?;
        let classes = match ctx.family() {
            Family::Hypercube => hypercube_classes(ws.d),
            Family::HalvedCube => halved_classes(ws.d),
        };
        let squares: u64 = classes.iter().map(|(m, _)| (m.dimension() as u64).pow(2)).sum();
        ensure!(squares == dim.formula, "{}: sum of squares {squares} differs from {}", ctx.family(), dim.formula);
        match dim.computed {
            Some(c) => {
                ensure!(c == dim.formula, "{} D={}: closure {c}, formula {}", ctx.family(), ws.d, dim.formula);
                parts.push(format!("{} computed {c}, formula {}", ctx.family(), dim.formula));
            }
            None => parts.push(format!("{} formula {}", ctx.family(), dim.formula)),
        }
    }
    let status = if ws.d <= cap { Status::Pass } else { Status::SkippedClosure };
    Ok((status, parts.join("; ")))
}

fn run_one(ws: &mut Workspace, check: Check, cap: usize) -> (Status, String) {
    let result = match check {
        Check::Spectra => spectra(ws).map(|s| (Status::Pass, s)),
        Check::Intersection => intersection(ws).map(|s| (Status::Pass, s)),
        Check::Qpoly => qpoly(ws).map(|s| (Status::Pass, s)),
        Check::Krawtchouk => krawtchouk(ws).map(|s| (Status::Pass, s)),
        Check::DistancePolys => distance_polys(ws).map(|s| (Status::Pass, s)),
        Check::Restriction => restriction(ws).map(|s| (Status::Pass, s)),
        Check::Hypercube => hypercube(ws).map(|s| (Status::Pass, s)),
        Check::Decompose => decompose(ws).map(|s| (Status::Pass, s)),
        Check::Models => models(ws).map(|s| (Status::Pass, s)),
        Check::Equivariance => equivariance(ws).map(|s| (Status::Pass, s)),
        Check::Classify => classify(ws).map(|s| (Status::Pass, s)),
        Check::Dim => dim(ws, cap),
    };
    result.unwrap_or_else(|e| (Status::Fail, e.to_string()))
}

/// Runs the selected checks at one `D`.
pub fn run_suite_at(d: usize, options: &SuiteOptions) -> Result<SuiteRun> {
    let mut ws = Workspace::new(d)?;
    let mut items = Vec::new();
    for &check in &options.checks {
        let start = Instant::now();
        let (status, detail) = run_one(&mut ws, check, options.closure_cap);
        items.push(CheckRecord {
            check,
            statement: check.statement().into(),
            d,
            status,
            detail,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(SuiteRun {
        paper_check: "verification-suite".into(),
        d,
        family: Family::HalvedCube,
        passed: items.iter().all(|r| !r.status.is_failure()),
        items,
    })
}

/// Runs the selected checks for every `D` in `from..=to`.
pub fn run_suite(from: usize, to: usize, options: &SuiteOptions) -> Result<VerificationSuiteResult> {
    if from > to {
        return Err(Error::InvalidArgument(format!("empty range {from}..={to}")));
    }
    let runs = (from..=to).map(|d| run_suite_at(d, options)).collect::<Result<Vec<_>>>()?;
    Ok(VerificationSuiteResult { runs })
}
