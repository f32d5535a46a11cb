//! Triangle representations and the forward bisector-length map.
//!
//! Vertex and side labels follow the usual convention: side `a` is opposite
//! vertex `A`, and the bisector `l_a` starts at vertex `A`. Every array of three
//! values in this module is ordered `[A, B, C]` (or `[a, b, c]`).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Labels used in error messages for caller-ordered bisector inputs.
pub const BISECTOR_LABELS: [&str; 3] = ["la", "lb", "lc"];
const SIDE_LABELS: [&str; 3] = ["a", "b", "c"];

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Self) -> T {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Side lengths of a non-degenerate triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideTriple<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> SideTriple<T> {
    /// Validates positivity and the strict triangle inequalities. A triangle
    /// whose inequality margin falls below `T::DEGENERATE_EPS` relative to its
    /// longest side is rejected as degenerate.
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let sides = [a, b, c];
        for (value, label) in sides.iter().zip(SIDE_LABELS) {
            if !value.is_finite() || *value <= T::zero() {
                return Err(Error::InvalidLength {
                    label,
                    value: value.as_f64(),
                });
            }
        }
        let longest = a.max(b).max(c);
        let margin = (b + c - a).min(a + c - b).min(a + b - c);
        if margin < T::lit(T::DEGENERATE_EPS) * longest {
            return Err(Error::DegenerateTriangle(format!(
                "sides ({a}, {b}, {c}) violate the triangle inequality (margin {margin})"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn from_array(sides: [T; 3]) -> Result<Self> {
        Self::new(sides[0], sides[1], sides[2])
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    /// Side lengths in ascending order.
    pub fn sorted(&self) -> [T; 3] {
        let mut s = self.to_array();
        s.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
        s
    }

    pub fn scaled(&self, k: T) -> Result<Self> {
        Self::new(self.a * k, self.b * k, self.c * k)
    }
}

/// Interior angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> AngleTriple<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let pi = T::PI();
        for (value, label) in [a, b, c].iter().zip(["A", "B", "C"]) {
            if !value.is_finite() || *value <= T::zero() || *value >= pi {
                return Err(Error::DegenerateAngle(format!(
                    "angle {label} = {value} is outside (0, pi)"
                )));
            }
        }
        let sum = a + b + c;
        if (sum - pi).abs() > T::lit(T::ANGLE_SUM_TOL) {
            return Err(Error::DegenerateAngle(format!(
                "angles sum to {sum}, not pi"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Builds the triple from `A` and `B`, closing it with `C = pi - A - B`.
    pub fn from_two(a: T, b: T) -> Result<Self> {
        Self::new(a, b, T::PI() - a - b)
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    pub fn to_degrees(&self) -> [T; 3] {
        self.to_array().map(|x| x.to_degrees())
    }
}

/// Prescribed bisector lengths together with their descending canonical
/// ordering.
///
/// `canonical()[k] == labeled()[perm()[k]]` for every slot `k`. In the
/// canonical frame slot 0 (the longest bisector) belongs to vertex `B`, slot 1
/// to vertex `A` and slot 2 to vertex `C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorTriple<T> {
    labeled: [T; 3],
    canonical: [T; 3],
    perm: [usize; 3],
}

impl<T: Scalar> BisectorTriple<T> {
    pub fn new(la: T, lb: T, lc: T) -> Result<Self> {
        canonicalize([la, lb, lc])
    }

    /// Lengths in caller order `(l_a, l_b, l_c)`.
    pub fn labeled(&self) -> [T; 3] {
        self.labeled
    }

    /// Lengths sorted descending `(l1, l2, l3)`.
    pub fn canonical(&self) -> [T; 3] {
        self.canonical
    }

    /// `perm[k]` is the caller index of canonical slot `k`.
    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn l1(&self) -> T {
        self.canonical[0]
    }

    pub fn l2(&self) -> T {
        self.canonical[1]
    }

    pub fn l3(&self) -> T {
        self.canonical[2]
    }

    /// True when `l3 < l2 < l1` with gaps larger than `rel_tol * l1`.
    pub fn is_strictly_ordered(&self, rel_tol: T) -> bool {
        let gap = rel_tol * self.l1();
        self.l1() - self.l2() > gap && self.l2() - self.l3() > gap
    }

    /// Rebuilds caller order from canonical order.
    pub fn uncanonicalize(&self, canonical: [T; 3]) -> [T; 3] {
        let mut out = [T::zero(); 3];
        for (slot, &caller) in self.perm.iter().enumerate() {
            out[caller] = canonical[slot];
        }
        out
    }

    pub fn scaled(&self, k: T) -> Result<Self> {
        canonicalize(self.labeled.map(|x| x * k))
    }
}

/// Maps a canonical slot to the vertex index `[A, B, C]` it is attached to.
pub(crate) const SLOT_VERTEX: [usize; 3] = [1, 0, 2];

/// Full solution of the inverse problem in caller labelling.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvedTriangle<T> {
    pub sides: SideTriple<T>,
    pub angles: AngleTriple<T>,
    /// Achieved bisector lengths `(l_a, l_b, l_c)`.
    pub bisectors: [T; 3],
    /// Vertices `[A, B, C]` in canonical placement.
    pub vertices: [Point2<T>; 3],
    /// Achieved minus prescribed bisector length, per label.
    pub residuals: [T; 3],
}

impl<T: Scalar> SolvedTriangle<T> {
    /// Materializes every derived field from the side lengths.
    pub fn from_sides(sides: SideTriple<T>, prescribed: [T; 3]) -> Result<Self> {
        let angles = angles_from_sides(&sides)?;
        let bisectors = bisector_lengths(&sides);
        let vertices = canonical_vertices(&sides);
        let residuals = [0, 1, 2].map(|i| bisectors[i] - prescribed[i]);
        Ok(Self {
            sides,
            angles,
            bisectors,
            vertices,
            residuals,
        })
    }

    pub fn max_abs_residual(&self) -> T {
        self.residuals
            .iter()
            .fold(T::zero(), |m, r| m.max(r.abs()))
    }
}

/// Internal bisector lengths `(l_a, l_b, l_c)` of a valid triangle.
///
/// Uses `l_a = 2bc/(b+c) * cos(A/2)` with the half-angle cosine squared taken as
/// `(b+c-a)(a+b+c)/(4bc)`, which is `(1 + cos A)/2` written without the
/// cancellation near `A = pi`, clamped to `[0, 1]`.
pub fn bisector_lengths<T: Scalar>(sides: &SideTriple<T>) -> [T; 3] {
    bisectors_of_raw(sides.to_array())
}

/// Forward map on unvalidated side lengths.
pub(crate) fn bisectors_of_raw<T: Scalar>(s: [T; 3]) -> [T; 3] {
    let [a, b, c] = s;
    let perimeter = a + b + c;
    let one = |opp: T, y: T, z: T| {
        let cos2 = ((y + z - opp) * perimeter / (T::lit(4.0) * y * z))
            .max(T::zero())
            .min(T::one());
        T::lit(2.0) * y * z / (y + z) * cos2.sqrt()
    };
    [one(a, b, c), one(b, c, a), one(c, a, b)]
}

/// Interior angles from side lengths.
///
/// The two angles opposite the shorter sides come from the half-angle tangent
/// `tan(A/2) = r/(s-a)`; the largest angle closes the sum to `pi`.
pub fn angles_from_sides<T: Scalar>(sides: &SideTriple<T>) -> Result<AngleTriple<T>> {
    let s = sides.to_array();
    let two = T::lit(2.0);
    let semi = (s[0] + s[1] + s[2]) / two;
    let excess = [
        (s[1] + s[2] - s[0]) / two,
        (s[0] + s[2] - s[1]) / two,
        (s[0] + s[1] - s[2]) / two,
    ];
    let inradius = (excess[0] * excess[1] * excess[2] / semi).sqrt();
    let mut angles = excess.map(|e| two * (inradius / e).atan());

    let largest = (0..3)
        .max_by(|&i, &j| s[i].partial_cmp(&s[j]).unwrap_or(Ordering::Equal))
        .unwrap_or(2);
    let others: T = (0..3).filter(|&i| i != largest).map(|i| angles[i]).fold(T::zero(), |x, y| x + y);
    angles[largest] = T::PI() - others;

    let smallest = angles.iter().fold(T::infinity(), |m, &x| m.min(x));
    if smallest < T::lit(T::DEGENERATE_EPS) {
        return Err(Error::DegenerateTriangle(format!(
            "smallest angle {smallest} rad is below the degeneracy threshold"
        )));
    }
    AngleTriple::new(angles[0], angles[1], angles[2])
}

/// Unit-circumdiameter sides `sin A, sin B, sin C`, with the sine of the
/// largest angle taken as the sine of the sum of the other two.
pub(crate) fn unit_sides<T: Scalar>(angles: [T; 3]) -> [T; 3] {
    let largest = (0..3)
        .max_by(|&i, &j| angles[i].partial_cmp(&angles[j]).unwrap_or(Ordering::Equal))
        .unwrap_or(2);
    let mut s = angles.map(|x| x.sin());
    let rest: T = (0..3).filter(|&i| i != largest).map(|i| angles[i]).fold(T::zero(), |x, y| x + y);
    s[largest] = rest.sin();
    s
}

/// The member of the similarity class of `angles` whose bisector from `B` has
/// length `lb_target`.
pub fn sides_from_angles_scaled<T: Scalar>(
    angles: &AngleTriple<T>,
    lb_target: T,
) -> Result<SideTriple<T>> {
    let eps = T::lit(T::DEGENERATE_EPS);
    let pi = T::PI();
    for (value, label) in angles.to_array().iter().zip(["A", "B", "C"]) {
        if *value <= eps || *value >= pi - eps {
            return Err(Error::DegenerateAngle(format!(
                "angle {label} = {value} is within {eps} of 0 or pi"
            )));
        }
    }
    if !lb_target.is_finite() || lb_target <= T::zero() {
        return Err(Error::InvalidLength {
            label: "lb_target",
            value: lb_target.as_f64(),
        });
    }
    let [a, b, c] = unit_sides(angles.to_array());
    let two = T::lit(2.0);
    let lb_unit = two * a * c / (a + c) * (angles.b() / two).cos();
    let k = lb_target / lb_unit;
    SideTriple::new(a * k, b * k, c * k)
}

/// Sorts three bisector lengths descending, remembering where each came from.
/// Ties keep caller order.
pub fn canonicalize<T: Scalar>(lengths: [T; 3]) -> Result<BisectorTriple<T>> {
    for (value, label) in lengths.iter().zip(BISECTOR_LABELS) {
        if !value.is_finite() || *value <= T::zero() {
            return Err(Error::InvalidLength {
                label,
                value: value.as_f64(),
            });
        }
    }
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&i, &j| {
        lengths[j]
            .partial_cmp(&lengths[i])
            .unwrap_or(Ordering::Equal)
    });
    Ok(BisectorTriple {
        labeled: lengths,
        canonical: perm.map(|i| lengths[i]),
        perm,
    })
}

/// Places the triangle with `B` at the origin, `C` on the positive x-axis and
/// `A` in the upper half-plane. Returns `[A, B, C]`.
pub fn canonical_vertices<T: Scalar>(sides: &SideTriple<T>) -> [Point2<T>; 3] {
    let [a, b, c] = sides.to_array();
    let x = (a * a + c * c - b * b) / (T::lit(2.0) * a);
    let y = T::lit(2.0) * triangle_area(sides) / a;
    [
        Point2::new(x, y),
        Point2::new(T::zero(), T::zero()),
        Point2::new(a, T::zero()),
    ]
}

/// Heron's formula in the ordering that stays accurate for needle triangles.
pub(crate) fn triangle_area<T: Scalar>(sides: &SideTriple<T>) -> T {
    let s = sides.sorted();
    let (r, q, p) = (s[0], s[1], s[2]);
    let prod = (p + (q + r)) * (r - (p - q)) * (r + (p - q)) * (p + (q - r));
    prod.max(T::zero()).sqrt() / T::lit(4.0)
}

/// Congruence up to isometry: sorted side lengths agree element-wise within
/// `rel_tol`.
pub fn triangles_congruent<T: Scalar>(
    t1: &SolvedTriangle<T>,
    t2: &SolvedTriangle<T>,
    rel_tol: T,
) -> bool {
    t1.sides
        .sorted()
        .iter()
        .zip(t2.sides.sorted().iter())
        .all(|(x, y)| (*x - *y).abs() <= rel_tol * x.abs().max(y.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn sides(a: f64, b: f64, c: f64) -> SideTriple<f64> {
        SideTriple::new(a, b, c).unwrap()
    }

    /// Bisector lengths measured on a coordinate placement: the foot of the
    /// bisector from a vertex divides the opposite side in the ratio of the
    /// adjacent sides.
    fn coordinate_bisectors(a: f64, b: f64, c: f64) -> [f64; 3] {
        let pb = (0.0, 0.0);
        let pc = (a, 0.0);
        let x = (a * a + c * c - b * b) / (2.0 * a);
        let pa = (x, (c * c - x * x).sqrt());
        let foot = |from: (f64, f64), to: (f64, f64), t: f64| {
            (from.0 + t * (to.0 - from.0), from.1 + t * (to.1 - from.1))
        };
        let dist = |p: (f64, f64), q: (f64, f64)| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
        // foot on BC from A: BD/DC = c/b
        let da = foot(pb, pc, c / (b + c));
        // foot on CA from B: CE/EA = a/c
        let db = foot(pc, pa, a / (a + c));
        // foot on AB from C: AF/FB = b/a
        let dc = foot(pa, pb, b / (a + b));
        [dist(pa, da), dist(pb, db), dist(pc, dc)]
    }

    #[test]
    fn equilateral_bisectors() {
        let l = bisector_lengths(&sides(1.0, 1.0, 1.0));
        for x in l {
            assert_relative_eq!(x, 3f64.sqrt() / 2.0, max_relative = 1e-15);
        }
        let l2 = bisector_lengths(&sides(2.0, 2.0, 2.0));
        for (x, y) in l.iter().zip(l2) {
            assert_eq!(2.0 * x, y);
        }
    }

    #[test]
    fn right_triangle_bisectors_match_coordinate_oracle() {
        let oracle = coordinate_bisectors(3.0, 4.0, 5.0);
        assert_relative_eq!(oracle[0], 120.0 / (9.0 * 10f64.sqrt()), max_relative = 1e-14);
        let l = bisector_lengths(&sides(3.0, 4.0, 5.0));
        // frozen from the coordinate oracle
        let golden = [4.216_370_213_557_839, 3.354_101_966_249_684_6, 2.424_366_106_925_305_8];
        for i in 0..3 {
            assert_relative_eq!(oracle[i], golden[i], max_relative = 1e-14);
            assert_relative_eq!(l[i], golden[i], max_relative = 1e-14);
        }
    }

    #[test]
    fn bisector_shorter_than_adjacent_sum() {
        let s = sides(1.0, 1.0, 1.9);
        let l = bisector_lengths(&s);
        assert!(l[0] < s.b() + s.c());
        assert!(l[1] < s.a() + s.c());
        assert!(l[2] < s.a() + s.b());
    }

    #[test]
    fn angles_of_known_triangles() {
        let eq = angles_from_sides(&sides(1.0, 1.0, 1.0)).unwrap();
        for x in eq.to_array() {
            assert_relative_eq!(x, FRAC_PI_3, max_relative = 1e-15);
        }
        let right = angles_from_sides(&sides(3.0, 4.0, 5.0)).unwrap();
        assert!((right.c() - FRAC_PI_2).abs() < 1e-12);
        assert!((right.to_array().iter().sum::<f64>() - PI).abs() < 1e-12);
    }

    #[test]
    fn obtuse_angles_cross_checked_against_coordinates() {
        let s = sides(1.0, 1.0, 1.9);
        let ang = angles_from_sides(&s).unwrap();
        assert!(ang.c() > ang.a() && ang.c() > ang.b());
        assert!((ang.a() + ang.b() + ang.c() - PI).abs() < 1e-12);
        // law of cosines directly
        let cos_c: f64 = (1.0 + 1.0 - 1.9 * 1.9) / 2.0;
        assert_relative_eq!(ang.c(), cos_c.acos(), max_relative = 1e-13);
        // angle at C measured between vertex vectors
        let [pa, pb, pc] = canonical_vertices(&s);
        let (u, v) = ((pa.x - pc.x, pa.y - pc.y), (pb.x - pc.x, pb.y - pc.y));
        let measured = (u.0 * v.1 - u.1 * v.0).abs().atan2(u.0 * v.0 + u.1 * v.1);
        assert_relative_eq!(ang.c(), measured, max_relative = 1e-13);
    }

    #[test]
    fn degenerate_sides_rejected() {
        assert!(matches!(
            SideTriple::new(1.0, 1.0, 3.0),
            Err(Error::DegenerateTriangle(_))
        ));
        assert!(matches!(
            SideTriple::new(1.0, 1.0, 2.0),
            Err(Error::DegenerateTriangle(_))
        ));
        assert!(matches!(
            SideTriple::new(-1.0, 1.0, 1.0),
            Err(Error::InvalidLength { label: "a", .. })
        ));
        assert!(SideTriple::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn angle_triple_validation() {
        assert!(AngleTriple::new(1.0, 1.0, 1.0).is_err());
        assert!(AngleTriple::new(0.0, FRAC_PI_2, FRAC_PI_2).is_err());
        assert!(AngleTriple::from_two(FRAC_PI_3, FRAC_PI_3).is_ok());
    }

    #[test]
    fn sides_from_angles_inverts_forward_map() {
        let eq = AngleTriple::new(FRAC_PI_3, FRAC_PI_3, PI - 2.0 * FRAC_PI_3).unwrap();
        let s = sides_from_angles_scaled(&eq, 3f64.sqrt() / 2.0).unwrap();
        for x in s.to_array() {
            assert_relative_eq!(x, 1.0, max_relative = 1e-14);
        }
        let s = sides_from_angles_scaled(&eq, 1.0).unwrap();
        for x in s.to_array() {
            assert_relative_eq!(x, 2.0 / 3f64.sqrt(), max_relative = 1e-14);
        }

        let right = sides(3.0, 4.0, 5.0);
        let lb = bisector_lengths(&right)[1];
        let back = sides_from_angles_scaled(&angles_from_sides(&right).unwrap(), lb).unwrap();
        for (x, y) in back.to_array().iter().zip(right.to_array()) {
            assert_relative_eq!(*x, y, max_relative = 1e-12);
        }
    }

    #[test]
    fn sides_from_degenerate_angles_rejected() {
        let tiny = AngleTriple::new(1e-14, FRAC_PI_2, PI - FRAC_PI_2 - 1e-14).unwrap();
        assert!(matches!(
            sides_from_angles_scaled(&tiny, 1.0),
            Err(Error::DegenerateAngle(_))
        ));
        let ok = AngleTriple::from_two(1.0, 1.0).unwrap();
        assert!(sides_from_angles_scaled(&ok, 0.0).is_err());
    }

    #[test]
    fn canonicalize_orders_and_records_permutation() {
        let t = canonicalize([0.8, 1.0, 0.9]).unwrap();
        assert_eq!(t.canonical(), [1.0, 0.9, 0.8]);
        assert_eq!(t.perm(), [1, 2, 0]);
        assert_eq!(t.uncanonicalize(t.canonical()), [0.8, 1.0, 0.9]);

        let t = canonicalize([1.0, 1.0, 1.0]).unwrap();
        assert_eq!(t.perm(), [0, 1, 2]);

        let t = canonicalize([2.0, 2.0, 1.0]).unwrap();
        assert_eq!(t.canonical(), [2.0, 2.0, 1.0]);
        assert_eq!(t.perm(), [0, 1, 2]);

        let t = canonicalize([1.0, 2.0, 2.0]).unwrap();
        assert_eq!(t.perm(), [1, 2, 0]);
    }

    #[test]
    fn canonicalize_rejects_bad_lengths() {
        assert!(matches!(
            canonicalize([1.0, 0.0, 1.0]),
            Err(Error::InvalidLength { label: "lb", .. })
        ));
        assert!(matches!(
            canonicalize([1.0, 1.0, f64::INFINITY]),
            Err(Error::InvalidLength { label: "lc", .. })
        ));
    }

    #[test]
    fn vertex_placement() {
        let [a, b, c] = canonical_vertices(&sides(1.0, 1.0, 1.0));
        assert_eq!(b, Point2::new(0.0, 0.0));
        assert_eq!(c, Point2::new(1.0, 0.0));
        assert_relative_eq!(a.x, 0.5, max_relative = 1e-15);
        assert_relative_eq!(a.y, 3f64.sqrt() / 2.0, max_relative = 1e-15);

        let s = sides(3.0, 4.0, 5.0);
        let [a, b, c] = canonical_vertices(&s);
        assert_eq!(c, Point2::new(3.0, 0.0));
        assert_relative_eq!(a.distance(&b), 5.0, max_relative = 1e-12);
        assert_relative_eq!(a.distance(&c), 4.0, max_relative = 1e-12);
        assert!(a.y > 0.0);
    }

    #[test]
    fn congruence_ignores_labels() {
        let t = |a, b, c| SolvedTriangle::from_sides(sides(a, b, c), [1.0; 3]).unwrap();
        let base = t(3.0, 4.0, 5.0);
        assert!(triangles_congruent(&base, &base, 0.0));
        assert!(triangles_congruent(&base, &t(4.0, 5.0, 3.0), 1e-15));
        assert!(!triangles_congruent(&base, &t(3.0, 4.0, 5.001), 1e-6));
    }

    #[test]
    fn single_precision_instantiation() {
        let s = SideTriple::<f32>::new(3.0, 4.0, 5.0).unwrap();
        let l = bisector_lengths(&s);
        assert!((l[0] - 4.216_370_2).abs() < 1e-5);
        let ang = angles_from_sides(&s).unwrap();
        assert!((ang.c() - std::f32::consts::FRAC_PI_2).abs() < 1e-5);
    }
}
