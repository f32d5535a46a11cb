#![allow(dead_code)]

use std::f64::consts::PI;
use std::process::{Command, Output};

use bisector_core::{bisector_lengths, sides_from_angles_scaled, AngleTriple, BisectorTriple64, SideTriple64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn bisector(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisector"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_triangle(rng: &mut impl Rng, min_angle: f64) -> SideTriple64 {
    loop {
        let (u, v): (f64, f64) = (rng.gen(), rng.gen());
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let (a, b) = (PI * lo, PI * (hi - lo));
        let c = PI - a - b;
        if a >= min_angle && b >= min_angle && c >= min_angle {
            let angles = AngleTriple::new(a, b, c).unwrap();
            return sides_from_angles_scaled(&angles, rng.gen_range(0.5..2.0)).unwrap();
        }
    }
}

pub fn forward_image(s: &SideTriple64) -> BisectorTriple64 {
    let l = bisector_lengths(s);
    BisectorTriple64::new(l[0], l[1], l[2]).unwrap()
}

pub fn random_strict(rng: &mut impl Rng) -> BisectorTriple64 {
    loop {
        let p = forward_image(&random_triangle(rng, 0.05));
        if p.is_strictly_ordered(1e-6) {
            return p;
        }
    }
}

/// `(x1, y1, x2, y2)` of every `<line>` with the given class.
pub fn svg_lines(doc: &str, class: &str) -> Vec<[f64; 4]> {
    let attr = |line: &str, name: &str| -> f64 {
        let key = format!(" {name}=\"");
        let start = line.find(&key).unwrap() + key.len();
        let end = start + line[start..].find('"').unwrap();
        line[start..end].parse().unwrap()
    };
    doc.lines()
        .filter(|l| l.trim_start().starts_with("<line") && l.contains(&format!("class=\"{class}\"")))
        .map(|l| [attr(l, "x1"), attr(l, "y1"), attr(l, "x2"), attr(l, "y2")])
        .collect()
}

pub fn seg_len(s: &[f64; 4]) -> f64 {
    (s[2] - s[0]).hypot(s[3] - s[1])
}

/// Largest pairwise distance between the intersections of the three lines
/// through the given segments.
pub fn concurrency_spread(segs: &[[f64; 4]]) -> f64 {
    let meet = |p: &[f64; 4], q: &[f64; 4]| {
        let (d1, d2) = ((p[2] - p[0], p[3] - p[1]), (q[2] - q[0], q[3] - q[1]));
        let den = d1.0 * d2.1 - d1.1 * d2.0;
        let t = ((q[0] - p[0]) * d2.1 - (q[1] - p[1]) * d2.0) / den;
        (p[0] + t * d1.0, p[1] + t * d1.1)
    };
    let pts = [meet(&segs[0], &segs[1]), meet(&segs[1], &segs[2]), meet(&segs[0], &segs[2])];
    let mut spread: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            spread = spread.max((pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1));
        }
    }
    spread
}
