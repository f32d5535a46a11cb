#![allow(dead_code)]

use std::f64::consts::PI;

use bisector_core::{bisector_lengths, sides_from_angles_scaled, AngleTriple, BisectorTriple, SideTriple};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Angles drawn uniformly from the simplex A + B + C = pi, each at least
/// `min_angle`.
pub fn random_angles(rng: &mut impl Rng, min_angle: f64) -> AngleTriple<f64> {
    loop {
        let (u, v): (f64, f64) = (rng.gen(), rng.gen());
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let a = PI * lo;
        let b = PI * (hi - lo);
        let c = PI - a - b;
        if a >= min_angle && b >= min_angle && c >= min_angle {
            return AngleTriple::new(a, b, c).unwrap();
        }
    }
}

pub fn random_triangle(rng: &mut impl Rng, min_angle: f64) -> SideTriple<f64> {
    let angles = random_angles(rng, min_angle);
    let scale = rng.gen_range(0.5..2.0);
    sides_from_angles_scaled(&angles, scale).unwrap()
}

pub fn forward_image(sides: &SideTriple<f64>) -> BisectorTriple<f64> {
    let l = bisector_lengths(sides);
    BisectorTriple::new(l[0], l[1], l[2]).unwrap()
}

/// Bisector lengths measured on an explicit vertex placement, with the foot of
/// each bisector found from the angle-bisector ratio theorem.
pub fn coordinate_bisectors(s: &SideTriple<f64>) -> [f64; 3] {
    let [a, b, c] = s.to_array();
    let pb = (0.0, 0.0);
    let pc = (a, 0.0);
    let x = (a * a + c * c - b * b) / (2.0 * a);
    let pa = (x, (c * c - x * x).max(0.0).sqrt());
    let lerp = |p: (f64, f64), q: (f64, f64), t: f64| (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1));
    let dist = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
    [
        dist(pa, lerp(pb, pc, c / (b + c))),
        dist(pb, lerp(pc, pa, a / (a + c))),
        dist(pc, lerp(pa, pb, b / (a + b))),
    ]
}

pub fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs())
}
