//! Reconstruction of a triangle from the lengths of its three internal angle
//! bisectors.
//!
//! The inverse problem is solved by a two-phase continuation. Phase 1 walks the
//! isosceles family with the longest bisector held fixed until the two equal
//! bisectors reach the middle prescribed length. Phase 2 then keeps two
//! bisectors fixed and lowers the smallest angle until the third bisector hits
//! its target. Both phases are bracketed bisections, so convergence does not
//! depend on a starting guess.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`). The `*64` aliases
//! at the crate root are the double-precision instantiations that the CLI and
//! the test-suites use.

mod bracket;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{
    angles_from_sides, bisector_lengths, canonical_vertices, canonicalize, sides_from_angles_scaled,
    triangles_congruent, AngleTriple, BisectorTriple, Point2, SideTriple, SolvedTriangle,
};
pub use oracle::{certify, grid_solve, Certification, GridSearchResult};
pub use scalar::Scalar;
pub use solver::{
    inner_solve_a, isosceles_b0, solve, trace_path, verify_bounds, BoundCheck, BoundReport,
    CheckStatus, PathSample, SolveReport, SolverConfig, TraceRecord, VerificationBounds,
};

pub type SideTriple64 = SideTriple<f64>;
pub type AngleTriple64 = AngleTriple<f64>;
pub type BisectorTriple64 = BisectorTriple<f64>;
pub type SolvedTriangle64 = SolvedTriangle<f64>;
pub type Point64 = Point2<f64>;
pub type SolverConfig64 = SolverConfig<f64>;
pub type SolveReport64 = SolveReport<f64>;
pub type TraceRecord64 = TraceRecord<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type GridSearchResult64 = GridSearchResult<f64>;

pub type SideTriple32 = SideTriple<f32>;
pub type AngleTriple32 = AngleTriple<f32>;
pub type BisectorTriple32 = BisectorTriple<f32>;
pub type SolvedTriangle32 = SolvedTriangle<f32>;
pub type SolverConfig32 = SolverConfig<f32>;
