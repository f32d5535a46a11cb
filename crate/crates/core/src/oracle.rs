//! Brute-force cross-check for the continuation solver.
//!
//! The oracle scans the angle simplex on a regular `(A, B)` grid in the
//! canonical frame, scales each candidate so that `l_b = l1`, and measures
//! `max(|l_a - l2|, |l_c - l3|) / l1`. Candidates come from the discrete local
//! minima of that field; each is polished by a pattern search over
//! successively 10x finer stencils. The residual is evaluated through the
//! side-based forward map, not through the solver's angle-based family.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{bisectors_of_raw, unit_sides, AngleTriple, BisectorTriple, SolvedTriangle};
use crate::scalar::Scalar;
use crate::solver::to_canonical;

/// Distance (radians) kept from the edges of the angle simplex.
pub const SIMPLEX_MARGIN: f64 = 1e-3;
/// Polished residual below which a candidate counts as a solution basin.
pub const BASIN_THRESHOLD: f64 = 1e-3;
pub const MIN_RESOLUTION: usize = 64;

const MIN_REFINE_ROUNDS: usize = 3;
const REFINE_FACTOR: usize = 10;
/// Refinement continues past the minimum round count until the stencil
/// spacing is at most this many radians.
const TARGET_SPACING: f64 = 1e-6;
const MAX_PATTERN_MOVES: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSearchResult<T> {
    /// Best angles, canonical labelling.
    pub best_angles: AngleTriple<T>,
    pub best_residual: T,
    pub n_basins: usize,
    pub grid_resolution: usize,
    /// Number of discrete local minima that were polished.
    pub n_candidates: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certification<T> {
    pub certified: bool,
    pub grid: Option<GridSearchResult<T>>,
    /// Largest labelled residual of the checked solution, over `l1`.
    pub solution_residual: T,
    /// `|solution - grid|` per canonical angle `[A, B, C]`.
    pub angle_errors: [T; 3],
    pub angle_tolerance: T,
}

struct Field<T> {
    l1: T,
    l2: T,
    l3: T,
}

impl<T: Scalar> Field<T> {
    fn residual(&self, a: T, b: T) -> T {
        let c = T::PI() - a - b;
        if !(a > T::zero() && b > T::zero() && c > T::zero()) {
            return T::infinity();
        }
        let l = bisectors_of_raw(unit_sides([a, b, c]));
        let k = self.l1 / l[1];
        let r = (l[0] * k - self.l2).abs().max((l[2] * k - self.l3).abs()) / self.l1;
        if r.is_finite() {
            r
        } else {
            T::infinity()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate<T> {
    node: (usize, usize),
    a: T,
    b: T,
    residual: T,
}

/// Exhaustive grid search for the triangle with the prescribed bisectors.
pub fn grid_solve<T: Scalar>(
    prescribed: &BisectorTriple<T>,
    resolution: usize,
) -> Result<GridSearchResult<T>> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::InvalidInput(format!(
            "grid resolution {resolution} is below {MIN_RESOLUTION}"
        )));
    }
    let [l1, l2, l3] = prescribed.canonical();
    let field = Field { l1, l2, l3 };
    let margin = T::lit(SIMPLEX_MARGIN);
    let pi = T::PI();
    let step = (pi - T::lit(2.0) * margin) / T::from_usize(resolution).unwrap_or_else(T::one);
    let coord = |i: usize| margin + (T::from_usize(i).unwrap_or_else(T::zero) + T::lit(0.5)) * step;

    // residuals[i * resolution + j] at A = coord(i), B = coord(j)
    let mut residuals = vec![T::infinity(); resolution * resolution];
    residuals
        .par_chunks_mut(resolution)
        .enumerate()
        .for_each(|(i, row)| {
            let a = coord(i);
            for (j, r) in row.iter_mut().enumerate() {
                let b = coord(j);
                if a + b < pi - margin {
                    *r = field.residual(a, b);
                }
            }
        });

    let n = resolution as isize;
    let at = |i: isize, j: isize| residuals[(i * n + j) as usize];
    let mut minima = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let r = at(i, j);
            if !r.is_finite() {
                continue;
            }
            let idx = i * n + j;
            let is_min = neighbours(i, j, n).all(|(p, q)| {
                let rn = at(p, q);
                r < rn || (r == rn && idx < p * n + q)
            });
            if is_min {
                minima.push((i as usize, j as usize));
            }
        }
    }

    let polished: Vec<Candidate<T>> = minima
        .par_iter()
        .map(|&(i, j)| {
            let (a, b, residual) = pattern_search(&field, coord(i), coord(j), step);
            Candidate {
                node: (i, j),
                a,
                b,
                residual,
            }
        })
        .collect();

    let best = polished
        .iter()
        .fold(None::<&Candidate<T>>, |acc, c| match acc {
            Some(b) if b.residual <= c.residual => Some(b),
            _ => Some(c),
        })
        .ok_or_else(|| Error::InvalidInput("grid contains no admissible triangle".into()))?;

    let threshold = T::lit(BASIN_THRESHOLD);
    let cell_of = |x: T| ((x - margin) / step).floor().to_isize().unwrap_or(-1);
    let basins: Vec<(isize, isize, isize, isize)> = polished
        .iter()
        .filter(|c| c.residual < threshold)
        .map(|c| (c.node.0 as isize, c.node.1 as isize, cell_of(c.a), cell_of(c.b)))
        .collect();
    let n_basins = count_clusters(&basins);

    Ok(GridSearchResult {
        best_angles: AngleTriple::from_two(best.a, best.b)?,
        best_residual: best.residual,
        n_basins,
        grid_resolution: resolution,
        n_candidates: polished.len(),
    })
}

fn neighbours(i: isize, j: isize, n: isize) -> impl Iterator<Item = (isize, isize)> {
    (-1..=1)
        .flat_map(move |di| (-1..=1).map(move |dj| (i + di, j + dj)))
        .filter(move |&(p, q)| (p, q) != (i, j) && p >= 0 && q >= 0 && p < n && q < n)
}

/// Compass search on successively finer stencils (at least three rounds of
/// 10x subdivision, more until the spacing reaches `TARGET_SPACING`). At each scale the centre
/// moves to the best point of a `(2F+1)^2` stencil until the centre itself is
/// best, so the search can follow a narrow valley beyond the starting cell.
fn pattern_search<T: Scalar>(field: &Field<T>, a0: T, b0: T, coarse: T) -> (T, T, T) {
    let (mut a, mut b) = (a0, b0);
    let mut best = field.residual(a, b);
    let mut step = coarse;
    let reach = REFINE_FACTOR as isize;
    let mut round = 0;
    while round < MIN_REFINE_ROUNDS || step > T::lit(TARGET_SPACING) {
        round += 1;
        step = step / T::from_usize(REFINE_FACTOR).unwrap_or_else(T::one);
        for _ in 0..MAX_PATTERN_MOVES {
            let mut moved = false;
            let (ca, cb) = (a, b);
            for di in -reach..=reach {
                for dj in -reach..=reach {
                    let pa = ca + T::from_isize(di).unwrap_or_else(T::zero) * step;
                    let pb = cb + T::from_isize(dj).unwrap_or_else(T::zero) * step;
                    let r = field.residual(pa, pb);
                    if r < best {
                        best = r;
                        a = pa;
                        b = pb;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
    }
    (a, b, best)
}

/// Groups basins that share or touch a grid cell, either by their starting
/// node or by their polished location (8-neighbourhood).
fn count_clusters(basins: &[(isize, isize, isize, isize)]) -> usize {
    let mut parent: Vec<usize> = (0..basins.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let touch = |p: isize, q: isize, r: isize, s: isize| (p - r).abs() <= 1 && (q - s).abs() <= 1;
    for x in 0..basins.len() {
        for y in (x + 1)..basins.len() {
            let (u, v) = (basins[x], basins[y]);
            if touch(u.0, u.1, v.0, v.1) || touch(u.2, u.3, v.2, v.3) {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[ry] = rx;
                }
            }
        }
    }
    (0..basins.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}

/// Checks a solution against the grid oracle: the oracle must find exactly
/// one basin and its best angles must lie within `3 / resolution` radians of
/// the solution's, per angle.
pub fn certify<T: Scalar>(
    solution: &SolvedTriangle<T>,
    prescribed: &BisectorTriple<T>,
    resolution: usize,
) -> Certification<T> {
    let angle_tolerance = T::lit(3.0) / T::from_usize(resolution.max(1)).unwrap_or_else(T::one);
    let solution_residual = solution.max_abs_residual() / prescribed.l1();
    let canonical = to_canonical(prescribed, solution.angles.to_array());
    match grid_solve(prescribed, resolution) {
        Ok(grid) => {
            let found = grid.best_angles.to_array();
            let angle_errors = [0, 1, 2].map(|i| (canonical[i] - found[i]).abs());
            let certified =
                grid.n_basins == 1 && angle_errors.iter().all(|e| *e <= angle_tolerance);
            Certification {
                certified,
                grid: Some(grid),
                solution_residual,
                angle_errors,
                angle_tolerance,
            }
        }
        Err(_) => Certification {
            certified: false,
            grid: None,
            solution_residual,
            angle_errors: [T::infinity(); 3],
            angle_tolerance,
        },
    }
}
