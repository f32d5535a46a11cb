//! Two-phase continuation solver for the inverse bisector problem.
//!
//! Work happens in the canonical frame: `l_b = l1 >= l_a = l2 >= l_c = l3`, so
//! that `B <= A <= C`. Every triangle considered is the member of its
//! similarity class whose bisector from `B` equals `l1`, which means a triangle
//! is fully described by the pair `(A, B)`.
//!
//! * Phase 1 follows the isosceles family `A = C = (pi - B)/2` downwards from
//!   the equilateral triangle until `l_a = l_c = l2`. The angle reached is `B0`.
//! * Phase 2 lowers `B` below `B0`. For each `B` the angle `A` is re-solved so
//!   that `l_a` stays at `l2`; along this path `l_c` falls from `l2` towards
//!   zero, and an outer bisection finds the `B` where it equals `l3`.

use crate::bracket::{bisect, Root};
use crate::error::{Error, Result};
use crate::geometry::{BisectorTriple, SideTriple, SolvedTriangle, SLOT_VERTEX};
use crate::scalar::Scalar;

/// Smallest `B` visited by [`trace_path`].
pub const TRACE_MIN_ANGLE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    /// Relative residual tolerance on bisector lengths, measured against `l1`.
    pub rel_tol: T,
    pub max_outer_iters: usize,
    pub max_inner_iters: usize,
    /// Inset (radians) of the outer bracket from the degenerate end `B = 0`.
    pub bracket_eps: T,
}

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::lit(T::DEFAULT_REL_TOL),
            max_outer_iters: 200,
            max_inner_iters: 200,
            bracket_eps: T::lit(1e-9),
        }
    }
}

impl<T: Scalar> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero() && self.rel_tol < T::lit(1e-3)) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol = {} must lie in (0, 1e-3)",
                self.rel_tol
            )));
        }
        if self.max_outer_iters < 50 || self.max_inner_iters < 50 {
            return Err(Error::InvalidConfig(
                "iteration caps must be at least 50".into(),
            ));
        }
        if !(self.bracket_eps > T::zero() && self.bracket_eps < T::lit(1e-2)) {
            return Err(Error::InvalidConfig(format!(
                "bracket_eps = {} must lie in (0, 1e-2)",
                self.bracket_eps
            )));
        }
        Ok(())
    }

    fn inner_tol(&self, l1: T) -> T {
        self.rel_tol / T::lit(10.0) * l1
    }
}

/// One outer-loop evaluation of the Phase-2 family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample<T> {
    pub b: T,
    pub a: T,
    pub c: T,
    pub lc: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<T> {
    /// Phase-1 junction angle.
    pub b0: T,
    pub outer_iters: usize,
    pub inner_iters_total: usize,
    /// Residual over `l1`, per canonical slot.
    pub final_residuals: [T; 3],
    /// Outer bracket endpoints followed by every outer iterate, in capture order.
    pub path_samples: Vec<PathSample<T>>,
}

/// One sample of the Phase-2 family, in canonical labelling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord<T> {
    pub b: T,
    pub a: T,
    pub c: T,
    pub la: T,
    pub lb: T,
    pub lc: T,
    /// Sides `[a, b, c]` of the sampled triangle.
    pub sides: [T; 3],
}

/// Reference angles for the final-triangle estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationBounds<T> {
    /// `arcsin(l3 / (l1 + l3))`.
    pub beta: T,
    pub a0: T,
    pub c0: T,
}

impl<T: Scalar> VerificationBounds<T> {
    pub fn new(prescribed: &BisectorTriple<T>, b0: T) -> Self {
        let [l1, _, l3] = prescribed.canonical();
        let a0 = (T::PI() - b0) / T::lit(2.0);
        Self {
            beta: (l3 / (l1 + l3)).asin(),
            a0,
            c0: a0,
        }
    }
}

/// Triangle with angles `(A, B, pi - A - B)` scaled so that `l_b = l1`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Member<T> {
    pub angles: [T; 3],
    pub sides: [T; 3],
    pub bisectors: [T; 3],
}

/// Evaluates the family directly from its angles. `sin C` is taken as
/// `sin(A + B)` and `cos(C/2)` as `sin((A + B)/2)`, which keep full relative
/// precision when `C` approaches `pi`.
pub(crate) fn family_member<T: Scalar>(angle_a: T, angle_b: T, l1: T) -> Member<T> {
    let two = T::lit(2.0);
    let sum = angle_a + angle_b;
    let (sa, sb, sc) = (angle_a.sin(), angle_b.sin(), sum.sin());
    let hm = |x: T, y: T| two * x * y / (x + y);
    let la = hm(sb, sc) * (angle_a / two).cos();
    let lb = hm(sa, sc) * (angle_b / two).cos();
    let lc = hm(sa, sb) * (sum / two).sin();
    let k = l1 / lb;
    Member {
        angles: [angle_a, angle_b, T::PI() - sum],
        sides: [sa * k, sb * k, sc * k],
        bisectors: [la * k, l1, lc * k],
    }
}

fn check_length<T: Scalar>(label: &'static str, value: T) -> Result<()> {
    if value.is_finite() && value > T::zero() {
        Ok(())
    } else {
        Err(Error::InvalidLength {
            label,
            value: value.as_f64(),
        })
    }
}

/// Phase 1: the apex angle `B0` of the isosceles triangle (`A = C`) with
/// `l_b = l1` and `l_a = l_c = l2`.
pub fn isosceles_b0<T: Scalar>(l1: T, l2: T, config: &SolverConfig<T>) -> Result<T> {
    config.validate()?;
    check_length("l1", l1)?;
    check_length("l2", l2)?;
    if l2 > l1 {
        return Err(Error::InvalidInput(format!(
            "l2 = {l2} exceeds l1 = {l1}"
        )));
    }
    let third = T::FRAC_PI_3();
    if l1 - l2 <= config.rel_tol * l1 {
        return Ok(third);
    }
    let half = T::lit(0.5);
    let residual = |b: T| family_member((T::PI() - b) * half, b, l1).bisectors[0] - l2;
    let lo = config.bracket_eps;
    let root = bisect(
        "isosceles phase",
        |b| Ok(residual(b)),
        (lo, residual(lo)),
        (third, residual(third)),
        config.rel_tol * l1,
        config.max_outer_iters,
    )?;
    Ok(root.x)
}

fn inner_root<T: Scalar>(b: T, l1: T, l2: T, config: &SolverConfig<T>) -> Result<Root<T>> {
    if !(b > T::zero() && b <= T::FRAC_PI_3()) {
        return Err(Error::InvalidInput(format!(
            "angle B = {b} must lie in (0, pi/3]"
        )));
    }
    // at B = pi/3 the bracket is the single point A = B
    let hi = ((T::PI() - b) / T::lit(2.0)).max(b);
    let residual = |a: T| family_member(a, b, l1).bisectors[0] - l2;
    bisect(
        "inner solve for A",
        |a| Ok(residual(a)),
        (b, residual(b)),
        (hi, residual(hi)),
        config.inner_tol(l1),
        config.max_inner_iters,
    )
}

/// Phase 2 inner step: the angle `A` in `[B, (pi - B)/2]` at which the triangle
/// `(A, B, pi - A - B)` scaled to `l_b = l1` has `l_a = l2`.
///
/// Fails with [`Error::BracketFailure`] when `B` lies above the Phase-1
/// junction `B0`, where no such `A` exists.
pub fn inner_solve_a<T: Scalar>(b: T, l1: T, l2: T, config: &SolverConfig<T>) -> Result<T> {
    config.validate()?;
    check_length("l1", l1)?;
    check_length("l2", l2)?;
    if l2 > l1 {
        return Err(Error::InvalidInput(format!(
            "l2 = {l2} exceeds l1 = {l1}"
        )));
    }
    inner_root(b, l1, l2, config).map(|r| r.x)
}

/// Maps canonical vertex data `[A, B, C]` back to caller labels.
fn to_caller<T: Scalar>(prescribed: &BisectorTriple<T>, canonical_vertex_data: [T; 3]) -> [T; 3] {
    let mut out = [T::zero(); 3];
    for (slot, &caller) in prescribed.perm().iter().enumerate() {
        out[caller] = canonical_vertex_data[SLOT_VERTEX[slot]];
    }
    out
}

/// Maps caller-labelled vertex data to the canonical `[A, B, C]`.
pub(crate) fn to_canonical<T: Scalar>(prescribed: &BisectorTriple<T>, caller_data: [T; 3]) -> [T; 3] {
    let mut out = [T::zero(); 3];
    for (slot, &caller) in prescribed.perm().iter().enumerate() {
        out[SLOT_VERTEX[slot]] = caller_data[caller];
    }
    out
}

fn materialize<T: Scalar>(
    prescribed: &BisectorTriple<T>,
    canonical_sides: [T; 3],
    config: &SolverConfig<T>,
    report: &mut SolveReport<T>,
) -> Result<SolvedTriangle<T>> {
    let sides = SideTriple::from_array(to_caller(prescribed, canonical_sides))?;
    let solved = SolvedTriangle::from_sides(sides, prescribed.labeled())?;
    let l1 = prescribed.l1();
    let caller_rel = solved.residuals.map(|r| r / l1);
    report.final_residuals = prescribed.perm().map(|caller| caller_rel[caller]);
    let worst = solved.max_abs_residual();
    if worst > config.rel_tol * l1 {
        return Err(Error::NoConvergence {
            stage: "final residual check",
            best_residual: (worst / l1).as_f64(),
            iterations: report.outer_iters,
        });
    }
    Ok(solved)
}

/// Solves the inverse problem: the triangle whose internal bisectors from
/// `A`, `B`, `C` have the prescribed lengths.
pub fn solve<T: Scalar>(
    prescribed: &BisectorTriple<T>,
    config: &SolverConfig<T>,
) -> Result<(SolvedTriangle<T>, SolveReport<T>)> {
    config.validate()?;
    let [l1, l2, l3] = prescribed.canonical();
    // Work on the normalized problem l1 = 1.
    let (n2, n3) = (l2 / l1, l3 / l1);
    let tol = config.rel_tol;
    let third = T::FRAC_PI_3();
    let mut report = SolveReport {
        b0: third,
        outer_iters: 0,
        inner_iters_total: 0,
        final_residuals: [T::zero(); 3],
        path_samples: Vec::new(),
    };

    if T::one() - n3 <= tol {
        let side = T::lit(2.0) * l1 / T::lit(3.0).sqrt();
        let solved = materialize(prescribed, [side; 3], config, &mut report)?;
        return Ok((solved, report));
    }

    let b0 = isosceles_b0(T::one(), n2, config)?;
    report.b0 = b0;

    if n2 - n3 <= tol {
        let junction = family_member((T::PI() - b0) / T::lit(2.0), b0, T::one());
        let solved = materialize(prescribed, junction.sides.map(|s| s * l1), config, &mut report)?;
        return Ok((solved, report));
    }

    let mut inner_total = 0usize;
    let mut samples = Vec::new();
    let mut g = |b: T| -> Result<(Member<T>, T)> {
        let root = inner_root(b, T::one(), n2, config)?;
        inner_total += root.iterations;
        let m = family_member(root.x, b, T::one());
        samples.push(PathSample {
            b,
            a: m.angles[0],
            c: m.angles[2],
            lc: m.bisectors[2] * l1,
        });
        Ok((m, m.bisectors[2] - n3))
    };

    let lo = config.bracket_eps;
    let f_hi = g(b0)?.1;
    let f_lo = g(lo)?.1;
    let outer = bisect(
        "outer solve for B",
        |b| g(b).map(|(_, r)| r),
        (lo, f_lo),
        (b0, f_hi),
        tol,
        config.max_outer_iters,
    );
    let outer = outer?;
    let (member, _) = g(outer.x)?;
    // the confirming evaluation above is not an outer iterate
    samples.pop();
    report.outer_iters = outer.iterations;
    report.inner_iters_total = inner_total;
    report.path_samples = samples;

    let solved = materialize(prescribed, member.sides.map(|s| s * l1), config, &mut report)?;
    Ok((solved, report))
}

/// Samples the Phase-2 family at `n_samples` values of `B` spaced evenly from
/// `B0` down to [`TRACE_MIN_ANGLE`]. Records are returned in that order.
pub fn trace_path<T: Scalar>(
    prescribed: &BisectorTriple<T>,
    n_samples: usize,
    config: &SolverConfig<T>,
) -> Result<Vec<TraceRecord<T>>> {
    config.validate()?;
    if n_samples < 2 {
        return Err(Error::InvalidInput(format!(
            "at least 2 samples required, got {n_samples}"
        )));
    }
    if !prescribed.is_strictly_ordered(config.rel_tol) {
        return Err(Error::InvalidInput(
            "tracing requires three distinct bisector lengths".into(),
        ));
    }
    let [l1, l2, _] = prescribed.canonical();
    let n2 = l2 / l1;
    let b0 = isosceles_b0(T::one(), n2, config)?;
    let b_min = T::lit(TRACE_MIN_ANGLE);
    let step = (b0 - b_min) / T::from_usize(n_samples - 1).unwrap_or_else(T::one);

    (0..n_samples)
        .map(|i| {
            let b = if i + 1 == n_samples {
                b_min
            } else {
                b0 - step * T::from_usize(i).unwrap_or_else(T::zero)
            };
            let a = inner_root(b, T::one(), n2, config)?.x;
            let m = family_member(a, b, T::one());
            Ok(TraceRecord {
                b,
                a,
                c: m.angles[2],
                la: m.bisectors[0] * l1,
                lb: m.bisectors[1] * l1,
                lc: m.bisectors[2] * l1,
                sides: m.sides.map(|s| s * l1),
            })
        })
        .collect()
}

/// Margin of the side chain `l2/2 < b < a < c < l1 + l2`; positive iff every
/// link holds strictly.
pub fn side_chain_margin<T: Scalar>(sides: [T; 3], l1: T, l2: T) -> T {
    let [a, b, c] = sides;
    (b - l2 / T::lit(2.0))
        .min(a - b)
        .min(c - a)
        .min(l1 + l2 - c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck<T> {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Slack of the inequality; positive when it holds.
    pub margin: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub bounds: Option<VerificationBounds<T>>,
    pub checks: Vec<BoundCheck<T>>,
}

impl<T: Scalar> BoundReport<T> {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck<T>> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 8] = [
    "side_chain",
    "beta_below_A",
    "A_below_A0",
    "B_positive",
    "B_below_B0",
    "B_below_beta",
    "C_above_C0",
    "C_below_pi_minus_2beta",
];

/// Evaluates the side chain and the angle estimates of the final triangle.
/// Reports every check as not applicable unless the prescription is strictly
/// ordered.
pub fn verify_bounds<T: Scalar>(
    solution: &SolvedTriangle<T>,
    prescribed: &BisectorTriple<T>,
    b0: T,
) -> BoundReport<T> {
    if !prescribed.is_strictly_ordered(T::lit(T::DEFAULT_REL_TOL)) {
        return BoundReport {
            bounds: None,
            checks: CHECK_NAMES
                .iter()
                .map(|&name| BoundCheck {
                    name,
                    status: CheckStatus::NotApplicable,
                    margin: None,
                })
                .collect(),
        };
    }
    let [l1, l2, _] = prescribed.canonical();
    let bounds = VerificationBounds::new(prescribed, b0);
    let [a, b, c] = to_canonical(prescribed, solution.angles.to_array());
    let sides = to_canonical(prescribed, solution.sides.to_array());
    let pi = T::PI();
    let two = T::lit(2.0);
    let margins = [
        side_chain_margin(sides, l1, l2),
        a - bounds.beta,
        bounds.a0 - a,
        b,
        b0 - b,
        bounds.beta - b,
        c - bounds.c0,
        pi - two * bounds.beta - c,
    ];
    let checks = CHECK_NAMES
        .iter()
        .zip(margins)
        .map(|(&name, m)| BoundCheck {
            name,
            status: if m > T::zero() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            margin: Some(m),
        })
        .collect();
    BoundReport {
        bounds: Some(bounds),
        checks,
    }
}
