//! The generalized problem on a dart-shaped quadrangle `ABCD`.
//!
//! The quadrangle has a reflex angle at `C` and acute angles at `A`, `B` and
//! `D`. We look for the shortest triangle with one vertex on `AB`, one on
//! `AD` and one on the broken side `BC ∪ CD`.
//!
//! The answer is always the orthic triangle of an auxiliary acute triangle:
//!
//! * **Case A.** The line through `C` perpendicular to `AC` crosses `AB` at
//!   `M` and `AD` at `N`. Then `C` is the foot of the altitude from `A` in
//!   `△AMN`, and the orthic triangle of `△AMN` (which uses `C` as a vertex)
//!   is optimal.
//! * **Case B.** The perpendicular misses `AB` (or, mirrored, `AD`). Extend
//!   `BC` beyond `C` until it meets `AD` at `W`; the orthic triangle of
//!   `△ABW` is optimal, with its third vertex on `BC`.
//! * **Reduced.** `B`, `C`, `D` are collinear and the problem is the
//!   classical one on `△ABD`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::classic::{orthic_triangle, solve_classic, ClassicKind};
use crate::error::{Corner, Error, Result};
use crate::geom::{
    angle_at, distance, line_segment_intersection, perimeter, ray_segment_intersection, segment_intersection, Angle,
    Point, Segment, Tolerances,
};

/// Which quadrangle side a triangle vertex sits on. `VertexC` marks the
/// reflex corner itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    AB,
    AD,
    BC,
    CD,
    VertexC,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::AB => "AB",
            Side::AD => "AD",
            Side::BC => "BC",
            Side::CD => "CD",
            Side::VertexC => "VertexC",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "AB" => Ok(Side::AB),
            "AD" => Ok(Side::AD),
            "BC" => Ok(Side::BC),
            "CD" => Ok(Side::CD),
            "VertexC" => Ok(Side::VertexC),
            other => Err(format!("unknown side tag {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    CaseA,
    CaseBMissAB,
    CaseBMissAD,
    Reduced,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::CaseA => "CaseA",
            CaseTag::CaseBMissAB => "CaseB_missAB",
            CaseTag::CaseBMissAD => "CaseB_missAD",
            CaseTag::Reduced => "Reduced",
        }
    }

    pub fn is_case_b(self) -> bool {
        matches!(self, CaseTag::CaseBMissAB | CaseTag::CaseBMissAD)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "CaseA" => Ok(CaseTag::CaseA),
            "CaseB_missAB" => Ok(CaseTag::CaseBMissAB),
            "CaseB_missAD" => Ok(CaseTag::CaseBMissAD),
            "Reduced" => Ok(CaseTag::Reduced),
            other => Err(format!("unknown case tag {other:?}")),
        }
    }
}

/// One vertex of an inscribed triangle: `point = start + param·(end − start)`
/// for the side's start and end as given by [`Quadrangle::side`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleVertex {
    pub point: Point,
    pub side: Side,
    pub param: f64,
}

/// Triangle with vertices on `AB`, `AD` and `BC ∪ CD`, in that order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedTriangle {
    pub vertices: [TriangleVertex; 3],
}

impl InscribedTriangle {
    pub fn points(&self) -> [Point; 3] {
        self.vertices.map(|v| v.point)
    }

    pub fn perimeter(&self) -> f64 {
        let [x, y, z] = self.points();
        perimeter(x, y, z)
    }
}

/// A validated quadrangle with a reflex (or, for the reduced case, straight)
/// angle at `C` and acute angles elsewhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrangle {
    a: Point,
    b: Point,
    c: Point,
    d: Point,
    angles: [f64; 4],
    ccw: bool,
    reduced: bool,
    tol: Tolerances,
}

impl Quadrangle {
    /// Validates with the default tolerances.
    pub fn new(a: Point, b: Point, c: Point, d: Point) -> Result<Self> {
        validate(a, b, c, d, &Tolerances::DEFAULT)
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn c(&self) -> Point {
        self.c
    }

    pub fn d(&self) -> Point {
        self.d
    }

    pub fn points(&self) -> [Point; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// Whether `A → B → C → D` runs counter-clockwise as given.
    pub fn is_counter_clockwise(&self) -> bool {
        self.ccw
    }

    /// `B`, `C`, `D` are collinear (to within `eps_angle`).
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn interior_angle(&self, corner: Corner) -> Angle {
        let i = match corner {
            Corner::A => 0,
            Corner::B => 1,
            Corner::C => 2,
            Corner::D => 3,
        };
        Angle::from_radians(self.angles[i])
    }

    /// Start and end of a side; `VertexC` is the zero-length side `C → C`.
    pub fn side(&self, side: Side) -> (Point, Point) {
        match side {
            Side::AB => (self.a, self.b),
            Side::AD => (self.a, self.d),
            Side::BC => (self.b, self.c),
            Side::CD => (self.c, self.d),
            Side::VertexC => (self.c, self.c),
        }
    }

    fn segment(&self, side: Side) -> Segment {
        let (s, e) = self.side(side);
        Segment::new(s, e, &self.tol).expect("validated sides have positive length")
    }

    /// Largest absolute coordinate, at least 1.
    fn scale(&self) -> f64 {
        self.points().iter().fold(1.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()))
    }

    /// Length slack for checks on constructed points.
    fn slack(&self) -> f64 {
        self.tol.eps_len * self.scale()
    }

    /// Tags `point` as lying on `side`, snapping the parameter into `[0, 1]`.
    fn locate(&self, side: Side, point: Point) -> Result<TriangleVertex> {
        if side == Side::VertexC {
            if distance(point, self.c) > self.slack() {
                return Err(Error::ConstructionFailure(format!("{point} is not the vertex C = {}", self.c)));
            }
            return Ok(TriangleVertex { point: self.c, side, param: 0.0 });
        }
        let seg = self.segment(side);
        let t = seg.param_of(point);
        let off = seg.line_distance(point);
        let eps = self.tol.eps_param;
        if !(-eps..=1.0 + eps).contains(&t) || off > self.slack() {
            return Err(Error::ConstructionFailure(format!(
                "vertex {point} falls outside side {side} (param {t}, offset {off:e})"
            )));
        }
        if (0.0..=1.0).contains(&t) {
            Ok(TriangleVertex { point, side, param: t })
        } else {
            let t = t.clamp(0.0, 1.0);
            Ok(TriangleVertex { point: seg.point_at(t), side, param: t })
        }
    }

    fn mirrored(&self) -> Result<Quadrangle> {
        validate(mirror(self.a), mirror(self.d), mirror(self.c), mirror(self.b), &self.tol)
    }
}

/// Reflection in the x-axis. Exact in floating point, so the mirrored
/// construction is bit-for-bit the mirror of the direct one.
fn mirror(p: Point) -> Point {
    Point { x: p.x, y: -p.y }
}

/// Interior angle at `v` of a polygon with neighbours `prev` and `next`.
fn interior_angle(prev: Point, v: Point, next: Point, ccw: bool) -> f64 {
    let (u, w) = if ccw { (next - v, prev - v) } else { (prev - v, next - v) };
    Angle::from_radians(u.cross(w).atan2(u.dot(w))).radians()
}

/// Checks that `ABCD` is an admissible input and returns it as a [`Quadrangle`].
///
/// The vertices may be given in either winding. A straight angle at `C`
/// (within `eps_angle`) is accepted and flags the quadrangle as reduced.
pub fn validate(a: Point, b: Point, c: Point, d: Point, tol: &Tolerances) -> Result<Quadrangle> {
    let pts = [a, b, c, d];
    if let Some(p) = pts.iter().find(|p| !p.is_finite()) {
        return Err(Error::NonFinite(p.x, p.y));
    }
    const NAMES: [&str; 4] = ["A", "B", "C", "D"];
    for i in 0..4 {
        let len = distance(pts[i], pts[(i + 1) % 4]);
        if len <= tol.eps_len {
            return Err(Error::NotSimple(format!("side {}{} has zero length", NAMES[i], NAMES[(i + 1) % 4])));
        }
    }
    let twice_area: f64 = (0..4).map(|i| pts[i].cross(pts[(i + 1) % 4])).sum();
    if twice_area.abs() <= tol.eps_len * tol.eps_len {
        return Err(Error::NotSimple("quadrangle has zero area".into()));
    }
    let seg = |p: Point, q: Point| Segment::new(p, q, tol).expect("side lengths checked");
    for (s1, s2, label) in [(seg(a, b), seg(c, d), "AB and CD"), (seg(b, c), seg(d, a), "BC and DA")] {
        match segment_intersection(&s1, &s2, tol) {
            Ok(None) => {}
            Ok(Some(_)) | Err(_) => return Err(Error::NotSimple(format!("sides {label} intersect"))),
        }
    }
    let ccw = twice_area > 0.0;
    let angles: [f64; 4] = std::array::from_fn(|i| interior_angle(pts[(i + 3) % 4], pts[i], pts[(i + 1) % 4], ccw));
    for (i, &ang) in angles.iter().enumerate() {
        if ang <= tol.eps_angle || ang >= TAU - tol.eps_angle {
            return Err(Error::NotSimple(format!("adjacent sides fold back at {}", NAMES[i])));
        }
    }
    let total: f64 = angles.iter().sum();
    if (total - TAU).abs() > 1e-6 {
        return Err(Error::NotSimple(format!("interior angles sum to {total}, not 2π")));
    }

    let at_c = angles[2];
    let reduced = (at_c - PI).abs() <= tol.eps_angle;
    if !reduced && at_c <= PI {
        return Err(Error::NotReflexAtC(at_c));
    }
    for (corner, ang) in [(Corner::A, angles[0]), (Corner::B, angles[1]), (Corner::D, angles[3])] {
        if ang >= FRAC_PI_2 - tol.eps_angle {
            return Err(Error::NotAcuteAt { corner, angle: ang });
        }
    }
    Ok(Quadrangle { a, b, c, d, angles, ccw, reduced, tol: *tol })
}

/// Outcome of [`case_detect`], with the feet `M` on `AB` and `N` on `AD` of
/// the perpendicular to `AC` through `C` where they exist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub case: CaseTag,
    pub m: Option<Point>,
    pub n: Option<Point>,
}

/// Margin by which the angle criterion may disagree with the intersection
/// test before the two are treated as inconsistent.
fn agreement_band(tol: &Tolerances) -> f64 {
    100.0 * tol.eps_angle.max(tol.eps_param)
}

pub fn case_detect(q: &Quadrangle) -> Result<Detection> {
    if q.reduced {
        return Ok(Detection { case: CaseTag::Reduced, m: None, n: None });
    }
    let tol = &q.tol;
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let normal = (c - a).perp();
    let m = line_segment_intersection(c, normal, &q.segment(Side::AB), tol)?.map(|(p, _)| p);
    let n = line_segment_intersection(c, normal, &q.segment(Side::AD), tol)?.map(|(p, _)| p);

    // M exists iff ∠B ≤ 90° − ∠BAC, and N iff ∠D ≤ 90° − ∠DAC.
    let band = agreement_band(tol);
    for (hit, apex, label) in [(m.is_some(), b, "B"), (n.is_some(), d, "D")] {
        let margin = FRAC_PI_2 - angle_at(a, apex, c, tol)?.radians() - angle_at(apex, a, c, tol)?.radians();
        if hit != (margin >= 0.0) && margin.abs() > band {
            return Err(Error::InconsistentGeometry(format!(
                "perpendicular test and angle test disagree at {label} (angle margin {margin:e})"
            )));
        }
    }

    let case = match (m, n) {
        (Some(_), Some(_)) => CaseTag::CaseA,
        (None, Some(_)) => CaseTag::CaseBMissAB,
        (Some(_), None) => CaseTag::CaseBMissAD,
        (None, None) => {
            return Err(Error::InconsistentGeometry("perpendicular to AC through C misses both AB and AD".into()))
        }
    };
    Ok(Detection { case, m, n })
}

/// A solved instance.
///
/// `aux` is the auxiliary triangle whose orthic triangle is the answer:
/// `[A, M, N]` for case A, `[A, B, W]` or `[A, D, W′]` for case B and
/// `[A, B, D]` when reduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub case: CaseTag,
    pub aux: [Point; 3],
    pub triangle: InscribedTriangle,
    pub perimeter: f64,
    pub upper_bound: f64,
}

impl Solution {
    /// The named auxiliary points: `M`, `N` in case A, `W` in case B, none
    /// when reduced.
    pub fn named_aux(&self) -> Vec<(&'static str, Point)> {
        match self.case {
            CaseTag::CaseA => vec![("M", self.aux[1]), ("N", self.aux[2])],
            CaseTag::CaseBMissAB | CaseTag::CaseBMissAD => vec![("W", self.aux[2])],
            CaseTag::Reduced => vec![],
        }
    }
}

fn failure(msg: impl Into<String>) -> Error {
    Error::ConstructionFailure(msg.into())
}

fn orthic_or_fail(a: Point, b: Point, c: Point, tol: &Tolerances, name: &str) -> Result<[Point; 3]> {
    orthic_triangle(a, b, c, tol).map_err(|e| failure(format!("auxiliary triangle {name} is not acute ({e})")))
}

/// Case A: the orthic triangle of `△AMN`, whose third vertex is `C`.
pub fn construct_case_a(q: &Quadrangle, m: Point, n: Point) -> Result<Solution> {
    let tol = &q.tol;
    let a = q.a;
    let [foot_a, foot_m, foot_n] = orthic_or_fail(a, m, n, tol, "AMN")?;
    if distance(foot_a, q.c) > q.slack() {
        return Err(failure(format!("foot of the altitude from A is {foot_a}, expected C = {}", q.c)));
    }
    let triangle = InscribedTriangle {
        vertices: [q.locate(Side::AB, foot_n)?, q.locate(Side::AD, foot_m)?, q.locate(Side::VertexC, foot_a)?],
    };
    Ok(Solution {
        case: CaseTag::CaseA,
        aux: [a, m, n],
        perimeter: triangle.perimeter(),
        upper_bound: 2.0 * distance(m, n),
        triangle,
    })
}

/// Which side the perpendicular to `AC` through `C` misses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Missed {
    AB,
    AD,
}

/// Case B: extend the side through `C` from the missed side's far vertex
/// until it meets the opposite side at `W`, then take the orthic triangle.
pub fn construct_case_b(q: &Quadrangle, missed: Missed) -> Result<Solution> {
    match missed {
        Missed::AB => construct_miss_ab(q),
        Missed::AD => {
            let flipped = construct_miss_ab(&q.mirrored()?)?;
            let [x, y, z] = flipped.triangle.vertices;
            let back =
                |v: TriangleVertex, side: Side, param: f64| TriangleVertex { point: mirror(v.point), side, param };
            // In the mirror, AB is our AD and B→C runs along our D→C.
            let third = match z.side {
                Side::BC => back(z, Side::CD, 1.0 - z.param),
                Side::VertexC => back(z, Side::VertexC, 0.0),
                other => return Err(failure(format!("unexpected side {other} in mirrored construction"))),
            };
            let triangle =
                InscribedTriangle { vertices: [back(y, Side::AB, y.param), back(x, Side::AD, x.param), third] };
            Ok(Solution {
                case: CaseTag::CaseBMissAD,
                aux: flipped.aux.map(mirror),
                triangle,
                perimeter: triangle.perimeter(),
                upper_bound: flipped.upper_bound,
            })
        }
    }
}

fn construct_miss_ab(q: &Quadrangle) -> Result<Solution> {
    let tol = &q.tol;
    let (a, b, c) = (q.a, q.b, q.c);
    let ad = q.segment(Side::AD);
    let w = ray_segment_intersection(b, c, &ad, tol)?
        .ok_or_else(|| failure("extension of BC beyond C does not meet AD"))?;
    let along_ad = ad.param_of(w);
    if along_ad <= tol.eps_param || along_ad >= 1.0 - tol.eps_param {
        return Err(failure(format!("W = {w} is not strictly between A and D (param {along_ad})")));
    }
    let along_bc = q.segment(Side::BC).param_of(w);
    if along_bc <= 1.0 + tol.eps_param {
        return Err(failure(format!("W = {w} does not lie beyond C on ray BC")));
    }
    let [foot_a, foot_b, foot_w] = orthic_or_fail(a, b, w, tol, "ABW")?;
    let triangle = InscribedTriangle {
        vertices: [q.locate(Side::AB, foot_w)?, q.locate(Side::AD, foot_b)?, q.locate(Side::BC, foot_a)?],
    };
    Ok(Solution {
        case: CaseTag::CaseBMissAB,
        aux: [a, b, w],
        perimeter: triangle.perimeter(),
        upper_bound: 2.0 * distance(b, w),
        triangle,
    })
}

fn construct_reduced(q: &Quadrangle) -> Result<Solution> {
    let tol = &q.tol;
    let classic = solve_classic(q.a, q.b, q.d, tol)?;
    if classic.kind != ClassicKind::Orthic {
        return Err(failure("triangle ABD is not acute"));
    }
    let [foot_a, foot_b, foot_d] = classic.vertices;
    let third = if distance(foot_a, q.c) <= q.slack() {
        q.locate(Side::VertexC, foot_a)?
    } else {
        let bd = Segment::new(q.b, q.d, tol)?;
        if bd.param_of(foot_a) < bd.param_of(q.c) {
            q.locate(Side::BC, foot_a)?
        } else {
            q.locate(Side::CD, foot_a)?
        }
    };
    let triangle = InscribedTriangle { vertices: [q.locate(Side::AB, foot_d)?, q.locate(Side::AD, foot_b)?, third] };
    Ok(Solution {
        case: CaseTag::Reduced,
        aux: [q.a, q.b, q.d],
        perimeter: classic.perimeter,
        upper_bound: 2.0 * distance(q.b, q.d),
        triangle,
    })
}

pub fn solve(q: &Quadrangle) -> Result<Solution> {
    let det = case_detect(q)?;
    match (det.case, det.m, det.n) {
        (CaseTag::CaseA, Some(m), Some(n)) => construct_case_a(q, m, n),
        (CaseTag::CaseBMissAB, ..) => construct_case_b(q, Missed::AB),
        (CaseTag::CaseBMissAD, ..) => construct_case_b(q, Missed::AD),
        (CaseTag::Reduced, ..) => construct_reduced(q),
        (case, ..) => Err(Error::InconsistentGeometry(format!("{case} detected without its auxiliary points"))),
    }
}

/// Twice the side of the auxiliary triangle opposite `A`: `2|MN|`, `2|BW|`
/// or `2|DW′|` (and `2|BD|` when reduced).
pub fn perimeter_upper_bound(s: &Solution) -> f64 {
    2.0 * distance(s.aux[1], s.aux[2])
}
