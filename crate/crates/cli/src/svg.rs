//! Static SVG drawing of a solved triangle and its three bisectors.
//!
//! Coordinates are written in solution units (the y axis is negated so that
//! the triangle appears with `A` above `BC`), so segment lengths measured in
//! user units equal the solution's lengths.

use std::fmt::Write;

use bisector_core::{Point64, SolvedTriangle64};

/// Foot of the bisector from each vertex on the opposite side.
pub fn bisector_feet(t: &SolvedTriangle64) -> [Point64; 3] {
    let [pa, pb, pc] = t.vertices;
    let [a, b, c] = t.sides.to_array();
    let lerp = |p: Point64, q: Point64, s: f64| Point64::new(p.x + s * (q.x - p.x), p.y + s * (q.y - p.y));
    [
        lerp(pb, pc, c / (b + c)),
        lerp(pc, pa, a / (a + c)),
        lerp(pa, pb, b / (a + b)),
    ]
}

pub fn render(t: &SolvedTriangle64) -> String {
    let v = t.vertices;
    let feet = bisector_feet(t);
    let flip = |p: Point64| (p.x, -p.y);

    let xs = v.iter().map(|p| p.x);
    let ys = v.iter().map(|p| -p.y);
    let (min_x, max_x) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let (min_y, max_y) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| (lo.min(y), hi.max(y)));
    let extent = (max_x - min_x).max(max_y - min_y);
    let pad = 0.12 * extent;
    let font = 0.04 * extent;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="640" height="640" viewBox="{} {} {} {}">"#,
        min_x - pad,
        min_y - pad,
        max_x - min_x + 2.0 * pad,
        max_y - min_y + 2.0 * pad
    );
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke-linecap="round">"#
    );

    // edge a = BC, edge b = CA, edge c = AB
    let edges = [("a", v[1], v[2]), ("b", v[2], v[0]), ("c", v[0], v[1])];
    for (name, p, q) in edges {
        let ((x1, y1), (x2, y2)) = (flip(p), flip(q));
        let _ = writeln!(
            out,
            r##"<line class="edge" id="edge-{name}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#222" stroke-width="1.5" vector-effect="non-scaling-stroke"/>"##
        );
    }
    for (i, name) in ["a", "b", "c"].iter().enumerate() {
        let ((x1, y1), (x2, y2)) = (flip(v[i]), flip(feet[i]));
        let _ = writeln!(
            out,
            r##"<line class="bisector" id="bisector-{name}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#c0392b" stroke-width="1" stroke-dasharray="4 3" vector-effect="non-scaling-stroke"/>"##
        );
    }
    let _ = writeln!(out, "</g>");

    let centroid = Point64::new(
        (v[0].x + v[1].x + v[2].x) / 3.0,
        (v[0].y + v[1].y + v[2].y) / 3.0,
    );
    let _ = writeln!(out, r##"<g font-family="sans-serif" font-size="{font}" fill="#222">"##);
    for (i, name) in ["A", "B", "C"].iter().enumerate() {
        // nudge each label away from the centroid
        let dx = v[i].x - centroid.x;
        let dy = v[i].y - centroid.y;
        let norm = dx.hypot(dy).max(f64::MIN_POSITIVE);
        let (x, y) = flip(Point64::new(v[i].x + 0.6 * font * dx / norm, v[i].y + 0.6 * font * dy / norm));
        let _ = writeln!(
            out,
            r#"<text class="vertex-label" x="{x}" y="{y}" text-anchor="middle" dominant-baseline="middle">{name}</text>"#
        );
    }
    for (i, name) in ["a", "b", "c"].iter().enumerate() {
        let mid = Point64::new((v[i].x + feet[i].x) / 2.0, (v[i].y + feet[i].y) / 2.0);
        let (x, y) = flip(mid);
        let _ = writeln!(
            out,
            r##"<text class="bisector-label" x="{x}" y="{y}" fill="#c0392b">l_{name} = {:.6}</text>"##,
            t.bisectors[i]
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
