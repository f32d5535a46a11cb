//! Machine-readable output records.

use bisector_core::{
    BisectorTriple64, BoundReport64, CheckStatus, SideTriple64, SolveReport64, SolvedTriangle64,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

const LABELS: [&str; 3] = ["la", "lb", "lc"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Labeled {
    pub la: f64,
    pub lb: f64,
    pub lc: f64,
}

impl From<[f64; 3]> for Labeled {
    fn from(v: [f64; 3]) -> Self {
        Self {
            la: v[0],
            lb: v[1],
            lc: v[2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Abc<V> {
    pub a: V,
    pub b: V,
    pub c: V,
}

impl<V: Clone> From<[V; 3]> for Abc<V> {
    fn from(v: [V; 3]) -> Self {
        let [a, b, c] = v;
        Self { a, b, c }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalRecord {
    /// `l1 >= l2 >= l3`.
    pub lengths: [f64; 3],
    /// Caller index (0 = la, 1 = lb, 2 = lc) of each canonical slot.
    pub perm: [usize; 3],
    /// Caller label of each canonical slot.
    pub labels: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub sides: Abc<f64>,
    pub angles_deg: Abc<f64>,
    pub vertices: Abc<[f64; 2]>,
    pub bisectors: Labeled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub b0_deg: f64,
    pub outer_iters: usize,
    pub inner_iters_total: usize,
    /// Relative residuals per canonical slot.
    pub final_residuals: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub input: Labeled,
    pub canonical: CanonicalRecord,
    pub solution: SolutionRecord,
    pub residuals: Labeled,
    pub report: ReportRecord,
    pub bounds: Vec<CheckRecord>,
}

pub fn status_str(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::NotApplicable => "not_applicable",
    }
}

pub fn check_records(bounds: &BoundReport64) -> Vec<CheckRecord> {
    bounds
        .checks
        .iter()
        .map(|c| CheckRecord {
            name: c.name.to_string(),
            status: status_str(c.status).to_string(),
            margin: c.margin,
        })
        .collect()
}

impl OutputRecord {
    pub fn new(
        prescribed: &BisectorTriple64,
        solution: &SolvedTriangle64,
        report: &SolveReport64,
        bounds: &BoundReport64,
    ) -> Self {
        let perm = prescribed.perm();
        Self {
            schema_version: SCHEMA_VERSION,
            input: prescribed.labeled().into(),
            canonical: CanonicalRecord {
                lengths: prescribed.canonical(),
                perm,
                labels: perm.map(|i| LABELS[i].to_string()),
            },
            solution: SolutionRecord {
                sides: solution.sides.to_array().into(),
                angles_deg: solution.angles.to_degrees().into(),
                vertices: solution.vertices.map(|p| [p.x, p.y]).into(),
                bisectors: solution.bisectors.into(),
            },
            residuals: solution.residuals.into(),
            report: ReportRecord {
                b0_deg: report.b0.to_degrees(),
                outer_iters: report.outer_iters,
                inner_iters_total: report.inner_iters_total,
                final_residuals: report.final_residuals,
            },
            bounds: check_records(bounds),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForwardRecord {
    pub schema_version: u32,
    pub sides: Abc<f64>,
    pub bisectors: Labeled,
}

impl ForwardRecord {
    pub fn new(sides: &SideTriple64, bisectors: [f64; 3]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            sides: sides.to_array().into(),
            bisectors: bisectors.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub schema_version: u32,
    pub input: Labeled,
    pub checks: Vec<CheckRecord>,
    pub certified: bool,
    pub oracle_basins: Option<usize>,
    pub oracle_best_residual: Option<f64>,
    pub solution_residual: f64,
    pub all_pass: bool,
}
