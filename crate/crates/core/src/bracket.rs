//! Bracketed bisection shared by both phases of the solver.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Root<T> {
    pub x: T,
    pub residual: T,
    pub iterations: usize,
}

/// Bisects `f` on `[lo, hi]` given the endpoint values.
///
/// The bracket is halved until it collapses to adjacent floating-point
/// numbers, `f` vanishes, or `max_iters` midpoints have been evaluated. The
/// point with the smallest `|f|` is returned when it is within `tol`.
/// An endpoint already within `tol` is accepted without iterating.
pub(crate) fn bisect<T, F>(
    stage: &'static str,
    mut f: F,
    (mut lo, f_lo): (T, T),
    (mut hi, f_hi): (T, T),
    tol: T,
    max_iters: usize,
) -> Result<Root<T>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let mut best = if f_lo.abs() <= f_hi.abs() {
        Root { x: lo, residual: f_lo, iterations: 0 }
    } else {
        Root { x: hi, residual: f_hi, iterations: 0 }
    };
    if best.residual.abs() <= tol {
        return Ok(best);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure {
            stage,
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }

    let lo_negative = f_lo < T::zero();
    let mut iterations = 0;
    while iterations < max_iters {
        let mid = lo + (hi - lo) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let f_mid = f(mid)?;
        if f_mid.abs() < best.residual.abs() {
            best = Root { x: mid, residual: f_mid, iterations };
        }
        if f_mid == T::zero() {
            break;
        }
        if (f_mid < T::zero()) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    best.iterations = iterations;

    if best.residual.abs() <= tol {
        Ok(best)
    } else {
        Err(Error::NoConvergence {
            stage,
            best_residual: best.residual.abs().as_f64(),
            iterations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let f = |x: f64| Ok(x * x - 2.0);
        let r = bisect("t", f, (0.0, -2.0), (2.0, 2.0), 1e-15, 200).unwrap();
        assert!((r.x - 2f64.sqrt()).abs() < 1e-15);
        assert!(r.iterations <= 60);
    }

    #[test]
    fn decreasing_function() {
        let f = |x: f64| Ok(1.0 - x);
        let r = bisect("t", f, (0.0, 1.0), (3.0, -2.0), 1e-15, 200).unwrap();
        assert!((r.x - 1.0).abs() < 1e-15);
    }

    #[test]
    fn endpoint_root_accepted() {
        let r = bisect("t", |x: f64| Ok(x), (0.0, 0.0), (1.0, 1.0), 1e-15, 200).unwrap();
        assert_eq!(r.x, 0.0);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn same_sign_is_bracket_failure() {
        let err = bisect("t", |x: f64| Ok(x * x + 1.0), (-1.0, 2.0), (1.0, 2.0), 1e-12, 200);
        assert!(matches!(err, Err(Error::BracketFailure { .. })));
    }

    #[test]
    fn unreachable_tolerance_reports_best() {
        let err = bisect("t", |x: f64| Ok(x * x - 2.0), (0.0, -2.0), (2.0, 2.0), 1e-30, 200);
        match err {
            Err(Error::NoConvergence { best_residual, .. }) => assert!(best_residual < 1e-14),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn iteration_cap_respected() {
        let err = bisect("t", |x: f64| Ok(x - 0.3), (0.0, -0.3), (1.0, 0.7), 1e-15, 5);
        assert!(matches!(err, Err(Error::NoConvergence { iterations: 5, .. })));
    }
}
