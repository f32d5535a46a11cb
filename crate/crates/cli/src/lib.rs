//! Command-line front end for the bisector-length triangle solver.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 no convergence, 4 I/O failure.

pub mod record;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use bisector_core::oracle::MIN_RESOLUTION;
use bisector_core::{
    bisector_lengths, certify, solve, trace_path, verify_bounds, BisectorTriple64, CheckStatus,
    Error, SideTriple64, SolverConfig64,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use record::{check_records, status_str, ForwardRecord, OutputRecord, VerifyRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const TRACE_HEADER: &str = "B_deg,A_deg,C_deg,l_a,l_b,l_c";

#[derive(Debug, Parser)]
#[command(name = "bisector", version, about = "Triangles from prescribed angle-bisector lengths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the triangle whose bisectors have the given lengths.
    Solve(SolveArgs),
    /// Bisector lengths of the triangle with the given sides.
    Forward(ForwardArgs),
    /// Sample the continuation path as comma-separated records.
    Trace(TraceArgs),
    /// Solve and draw the triangle with its bisectors as SVG.
    Render(RenderArgs),
    /// Solve, check the angle and side estimates, and cross-check with the grid oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        Ok(_) => Err("must be a positive finite number".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct Lengths {
    /// Bisector length from vertex A.
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub la: f64,
    /// Bisector length from vertex B.
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub lb: f64,
    /// Bisector length from vertex C.
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub lc: f64,
}

#[derive(Debug, Args)]
pub struct SolverFlags {
    /// Relative residual tolerance.
    #[arg(long, default_value_t = 1e-12, value_parser = positive, allow_negative_numbers = true)]
    pub tol: f64,
    /// Iteration cap for each bisection loop.
    #[arg(long = "max-iter", default_value_t = 200)]
    pub max_iter: usize,
}

impl SolverFlags {
    fn config(&self) -> SolverConfig64 {
        SolverConfig64 {
            rel_tol: self.tol,
            max_outer_iters: self.max_iter,
            max_inner_iters: self.max_iter,
            ..SolverConfig64::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub lengths: Lengths,
    #[command(flatten)]
    pub solver: SolverFlags,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ForwardArgs {
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, value_parser = positive, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub lengths: Lengths,
    #[command(flatten)]
    pub solver: SolverFlags,
    /// Number of samples from B0 down to 1e-6 rad.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Write the records here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub lengths: Lengths,
    #[command(flatten)]
    pub solver: SolverFlags,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub lengths: Lengths,
    #[command(flatten)]
    pub solver: SolverFlags,
    /// Grid resolution of the brute-force oracle.
    #[arg(long, default_value_t = 512)]
    pub resolution: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoConvergence { .. } | Error::BracketFailure { .. } => EXIT_NO_CONVERGENCE,
            _ => EXIT_INVALID_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{what}: {e}"),
    }
}

fn prescription(l: &Lengths) -> Result<BisectorTriple64, Failure> {
    Ok(BisectorTriple64::new(l.la, l.lb, l.lc)?)
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a, out),
        Command::Forward(a) => cmd_forward(a, out),
        Command::Trace(a) => cmd_trace(a, out),
        Command::Render(a) => cmd_render(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| io_failure("writing output", e))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let prescribed = prescription(&args.lengths)?;
    let (solution, report) = solve(&prescribed, &args.solver.config())?;
    let bounds = verify_bounds(&solution, &prescribed, report.b0);
    let record = OutputRecord::new(&prescribed, &solution, &report, &bounds);
    let text = match args.format {
        Format::Json => json(&record),
        Format::Text => solve_text(&record),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn solve_text(r: &OutputRecord) -> String {
    let s = &r.solution;
    let c = &r.canonical;
    let mut t = String::new();
    t += &format!(
        "prescribed   l_a = {}  l_b = {}  l_c = {}\n",
        r.input.la, r.input.lb, r.input.lc
    );
    t += &format!(
        "canonical    l1 = {} ({})  l2 = {} ({})  l3 = {} ({})\n",
        c.lengths[0], c.labels[0], c.lengths[1], c.labels[1], c.lengths[2], c.labels[2]
    );
    t += &format!("sides        a = {}  b = {}  c = {}\n", s.sides.a, s.sides.b, s.sides.c);
    t += &format!(
        "angles (deg) A = {}  B = {}  C = {}\n",
        s.angles_deg.a, s.angles_deg.b, s.angles_deg.c
    );
    t += &format!(
        "vertices     A = ({}, {})  B = ({}, {})  C = ({}, {})\n",
        s.vertices.a[0], s.vertices.a[1], s.vertices.b[0], s.vertices.b[1], s.vertices.c[0], s.vertices.c[1]
    );
    t += &format!(
        "bisectors    l_a = {}  l_b = {}  l_c = {}\n",
        s.bisectors.la, s.bisectors.lb, s.bisectors.lc
    );
    t += &format!(
        "residuals    l_a = {:e}  l_b = {:e}  l_c = {:e}\n",
        r.residuals.la, r.residuals.lb, r.residuals.lc
    );
    t += &format!(
        "phase 1      B0 = {} deg\niterations   outer = {}  inner total = {}\n",
        r.report.b0_deg, r.report.outer_iters, r.report.inner_iters_total
    );
    for check in &r.bounds {
        t += &format!("bound        {:<24} {}\n", check.name, check.status);
    }
    t
}

fn cmd_forward(args: &ForwardArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let sides = SideTriple64::new(args.a, args.b, args.c)?;
    let l = bisector_lengths(&sides);
    let text = match args.format {
        Format::Json => json(&ForwardRecord::new(&sides, l)),
        Format::Text => format!("l_a = {}\nl_b = {}\nl_c = {}\n", l[0], l[1], l[2]),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_trace(args: &TraceArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let prescribed = prescription(&args.lengths)?;
    let records = trace_path(&prescribed, args.samples, &args.solver.config())?;
    let mut csv = String::from(TRACE_HEADER);
    csv.push('\n');
    for r in &records {
        csv += &format!(
            "{},{},{},{},{},{}\n",
            r.b.to_degrees(),
            r.a.to_degrees(),
            r.c.to_degrees(),
            r.la,
            r.lb,
            r.lc
        );
    }
    match &args.out {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| io_failure(&format!("writing {}", path.display()), e))?,
        None => emit(out, &csv)?,
    }
    Ok(EXIT_OK)
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let prescribed = prescription(&args.lengths)?;
    let (solution, _) = solve(&prescribed, &args.solver.config())?;
    let doc = svg::render(&solution);
    std::fs::write(&args.out, doc)
        .map_err(|e| io_failure(&format!("writing {}", args.out.display()), e))?;
    emit(out, &format!("wrote {}\n", args.out.display()))?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let prescribed = prescription(&args.lengths)?;
    if args.resolution < MIN_RESOLUTION {
        return Err(Failure {
            code: EXIT_INVALID_INPUT,
            message: format!("--resolution must be at least {MIN_RESOLUTION}"),
        });
    }
    let (solution, report) = solve(&prescribed, &args.solver.config())?;
    let bounds = verify_bounds(&solution, &prescribed, report.b0);
    let cert = certify(&solution, &prescribed, args.resolution);
    let all_pass = bounds.all_pass() && cert.certified;

    let text = match args.format {
        Format::Json => json(&VerifyRecord {
            schema_version: record::SCHEMA_VERSION,
            input: prescribed.labeled().into(),
            checks: check_records(&bounds),
            certified: cert.certified,
            oracle_basins: cert.grid.as_ref().map(|g| g.n_basins),
            oracle_best_residual: cert.grid.as_ref().map(|g| g.best_residual),
            solution_residual: cert.solution_residual,
            all_pass,
        }),
        Format::Text => {
            let mut t = String::new();
            for c in &bounds.checks {
                let margin = c.margin.map_or("-".to_string(), |m| format!("{m:e}"));
                let status = match c.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::NotApplicable => "N/A ",
                };
                t += &format!("{status} {:<24} margin {margin}   [{}]\n", c.name, status_str(c.status));
            }
            let worst = cert.angle_errors.iter().fold(0.0f64, |m, e| m.max(*e));
            t += &format!(
                "{} oracle_certify           basins {}  angle error {worst:e} (limit {:e})  grid residual {:e}  solution residual {:e}\n",
                if cert.certified { "PASS" } else { "FAIL" },
                cert.grid.as_ref().map_or(0, |g| g.n_basins),
                cert.angle_tolerance,
                cert.grid.as_ref().map_or(f64::NAN, |g| g.best_residual),
                cert.solution_residual,
            );
            t += if all_pass { "all checks passed\n" } else { "verification FAILED\n" };
            t
        }
    };
    emit(out, &text)?;
    Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
