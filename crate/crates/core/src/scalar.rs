use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point type the geometry and solvers are written against.
///
/// The associated constants carry the precision-dependent thresholds so that
/// the generic code never hard-codes a double-precision literal.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Default relative residual tolerance for the solver.
    const DEFAULT_REL_TOL: f64;
    /// Smallest admissible angle (radians) and triangle-inequality margin.
    const DEGENERATE_EPS: f64;
    /// Allowed deviation of an angle sum from the straight angle.
    const ANGLE_SUM_TOL: f64;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const DEFAULT_REL_TOL: f64 = 1e-12;
    const DEGENERATE_EPS: f64 = 1e-13;
    const ANGLE_SUM_TOL: f64 = 1e-12;
}

impl Scalar for f32 {
    const DEFAULT_REL_TOL: f64 = 1e-5;
    const DEGENERATE_EPS: f64 = 1e-6;
    const ANGLE_SUM_TOL: f64 = 1e-5;
}
