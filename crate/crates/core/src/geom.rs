//! Planar primitives: points, segments, angles and the tolerance-based
//! predicates the solvers are built on.
//!
//! Everything here is plain `f64` arithmetic. Predicates that must decide a
//! discrete question (is this turn collinear? do these segments meet?) take a
//! [`Tolerances`] and treat values inside the tolerance band as the boundary
//! case.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    /// Creates a point. Panics if either coordinate is NaN or infinite; use
    /// [`Point::try_new`] for untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "point coordinates must be finite, got ({x}, {y})");
        Point { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinite(x, y))
        }
    }

    pub const fn origin() -> Self {
        Point { x: 0.0, y: 0.0 }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product of two plane vectors.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    /// The vector rotated a quarter turn counter-clockwise.
    #[inline]
    pub fn perp(self) -> Point {
        Point { x: -self.y, y: self.x }
    }

    /// `self + t * (other - self)`.
    #[inline]
    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.x, self.y]
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point { x: self.x - rhs.x, y: self.y - rhs.y }
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point { x: self.x * s, y: self.y * s }
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point { x: -self.x, y: -self.y }
    }
}

/// Absolute tolerances used by the predicates.
///
/// The defaults assume desk-scale coordinates (magnitudes roughly 0.1 to 100).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Length tolerance.
    pub eps_len: f64,
    /// Angle tolerance in radians.
    pub eps_angle: f64,
    /// Tolerance on dimensionless segment parameters.
    pub eps_param: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances { eps_len: 1e-9, eps_angle: 1e-9, eps_param: 1e-9 };

    /// Returns `None` unless every tolerance is strictly positive and finite.
    pub fn new(eps_len: f64, eps_angle: f64, eps_param: f64) -> Option<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        (ok(eps_len) && ok(eps_angle) && ok(eps_param)).then_some(Tolerances { eps_len, eps_angle, eps_param })
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}

/// An angle in radians, normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn from_radians(value: f64) -> Self {
        let mut v = value.rem_euclid(TAU);
        if v >= TAU {
            v = 0.0;
        }
        Angle(v)
    }

    pub fn from_degrees(value: f64) -> Self {
        Angle::from_radians(value.to_radians())
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn is_reflex(self) -> bool {
        self.0 > PI
    }
}

/// A closed segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point, tol: &Tolerances) -> Result<Self> {
        let len = (b - a).norm();
        if len <= tol.eps_len {
            return Err(Error::DegenerateSegment(len));
        }
        Ok(Segment { a, b })
    }

    #[inline]
    pub fn a(&self) -> Point {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Point {
        self.b
    }

    pub fn direction(&self) -> Point {
        self.b - self.a
    }

    pub fn length(&self) -> f64 {
        self.direction().norm()
    }

    /// `a + t * (b - a)`.
    pub fn point_at(&self, t: f64) -> Point {
        self.a.lerp(self.b, t)
    }

    /// Parameter of the orthogonal projection of `p` onto the supporting line.
    pub fn param_of(&self, p: Point) -> f64 {
        let d = self.direction();
        (p - self.a).dot(d) / d.norm_squared()
    }

    /// Distance from `p` to the supporting line.
    pub fn line_distance(&self, p: Point) -> f64 {
        let d = self.direction();
        (p - self.a).cross(d).abs() / d.norm()
    }
}

/// Turn direction of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

pub fn distance(p: Point, q: Point) -> f64 {
    (q - p).norm()
}

pub fn perimeter(a: Point, b: Point, c: Point) -> f64 {
    distance(a, b) + distance(b, c) + distance(c, a)
}

/// Unsigned angle `∠p·vertex·q` in `[0, π]`.
///
/// Computed as `atan2(|u × v|, u · v)`, which stays accurate near 0 and π
/// where the arc-cosine of a normalized dot product loses half its digits.
pub fn angle_at(vertex: Point, p: Point, q: Point, tol: &Tolerances) -> Result<Angle> {
    let u = p - vertex;
    let v = q - vertex;
    for r in [u, v] {
        let len = r.norm();
        if len <= tol.eps_len {
            return Err(Error::DegenerateRay(len));
        }
    }
    Ok(Angle(u.cross(v).abs().atan2(u.dot(v))))
}

/// Sign of `(q - p) × (r - p)`; magnitudes up to `eps_len²` count as collinear.
pub fn orientation(p: Point, q: Point, r: Point, tol: &Tolerances) -> Orientation {
    let c = (q - p).cross(r - p);
    if c.abs() <= tol.eps_len * tol.eps_len {
        Orientation::Collinear
    } else if c > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

fn line_direction(line_a: Point, line_b: Point, tol: &Tolerances) -> Result<Point> {
    let d = line_b - line_a;
    let len = d.norm();
    if len <= tol.eps_len {
        return Err(Error::DegenerateLine(len));
    }
    Ok(d)
}

/// Orthogonal projection of `p` onto the line through `line_a` and `line_b`.
pub fn foot_of_perpendicular(p: Point, line_a: Point, line_b: Point, tol: &Tolerances) -> Result<Point> {
    let d = line_direction(line_a, line_b, tol)?;
    let t = (p - line_a).dot(d) / d.norm_squared();
    Ok(line_a + d * t)
}

/// Mirror image of `p` in the line through `line_a` and `line_b`.
pub fn reflect(p: Point, line_a: Point, line_b: Point, tol: &Tolerances) -> Result<Point> {
    let foot = foot_of_perpendicular(p, line_a, line_b, tol)?;
    Ok(foot * 2.0 - p)
}

/// Parameters `(t, u)` with `p + t·d = q + u·e`, or `None` when the
/// directions are parallel to within `eps_angle`.
fn line_params(p: Point, d: Point, q: Point, e: Point, tol: &Tolerances) -> Option<(f64, f64)> {
    let denom = d.cross(e);
    if denom.abs() <= tol.eps_angle * d.norm() * e.norm() {
        return None;
    }
    let w = q - p;
    Some((w.cross(e) / denom, w.cross(d) / denom))
}

#[inline]
fn in_unit(t: f64, tol: &Tolerances) -> bool {
    t >= -tol.eps_param && t <= 1.0 + tol.eps_param
}

/// Interval `[lo, hi]` of `p + t·d` parameters covered by the segment `q → q + e`
/// when both lie on one line; `None` if they are not collinear.
fn collinear_span(p: Point, d: Point, q: Point, e: Point, tol: &Tolerances) -> Option<(f64, f64)> {
    let off = (q - p).cross(d).abs() / d.norm();
    if off > tol.eps_len {
        return None;
    }
    let dd = d.norm_squared();
    let t0 = (q - p).dot(d) / dd;
    let t1 = (q + e - p).dot(d) / dd;
    Some((t0.min(t1), t0.max(t1)))
}

/// Intersection of two closed segments.
///
/// Returns the meeting point when the segments touch in exactly one point,
/// `None` when they are disjoint, and [`Error::CollinearOverlap`] when they
/// share a piece of a common line.
pub fn segment_intersection(s1: &Segment, s2: &Segment, tol: &Tolerances) -> Result<Option<Point>> {
    let (p, d) = (s1.a, s1.direction());
    let (q, e) = (s2.a, s2.direction());
    match line_params(p, d, q, e, tol) {
        Some((t, u)) => {
            if in_unit(t, tol) && in_unit(u, tol) {
                Ok(Some(p + d * t.clamp(0.0, 1.0)))
            } else {
                Ok(None)
            }
        }
        None => match collinear_span(p, d, q, e, tol) {
            None => Ok(None),
            Some((t0, t1)) => {
                let lo = t0.max(0.0);
                let hi = t1.min(1.0);
                if hi < lo - tol.eps_param {
                    Ok(None)
                } else if hi - lo <= tol.eps_param {
                    Ok(Some(p + d * (0.5 * (lo + hi)).clamp(0.0, 1.0)))
                } else {
                    Err(Error::CollinearOverlap)
                }
            }
        },
    }
}

/// First point where the ray from `origin` through `through` meets the closed
/// segment `s`. The ray parameter is 0 at `origin` and 1 at `through`.
pub fn ray_segment_intersection(origin: Point, through: Point, s: &Segment, tol: &Tolerances) -> Result<Option<Point>> {
    let d = line_direction(origin, through, tol).map_err(|e| match e {
        Error::DegenerateLine(len) => Error::DegenerateRay(len),
        other => other,
    })?;
    let (q, e) = (s.a, s.direction());
    match line_params(origin, d, q, e, tol) {
        Some((t, u)) => {
            if t >= -tol.eps_param && in_unit(u, tol) {
                Ok(Some(q + e * u.clamp(0.0, 1.0)))
            } else {
                Ok(None)
            }
        }
        None => match collinear_span(origin, d, q, e, tol) {
            None => Ok(None),
            Some((t0, t1)) => {
                let lo = t0.max(0.0);
                if t1 < lo - tol.eps_param {
                    Ok(None)
                } else if t1 - lo <= tol.eps_param {
                    Ok(Some(origin + d * lo))
                } else {
                    Err(Error::CollinearOverlap)
                }
            }
        },
    }
}

/// Where the infinite line through `p` with direction `dir` crosses the
/// closed segment `s`, as `(point, segment parameter)`.
pub fn line_segment_intersection(p: Point, dir: Point, s: &Segment, tol: &Tolerances) -> Result<Option<(Point, f64)>> {
    if dir.norm() <= tol.eps_len {
        return Err(Error::DegenerateLine(dir.norm()));
    }
    let (q, e) = (s.a, s.direction());
    match line_params(p, dir, q, e, tol) {
        Some((_, u)) if in_unit(u, tol) => {
            let u = u.clamp(0.0, 1.0);
            Ok(Some((q + e * u, u)))
        }
        Some(_) => Ok(None),
        None => match collinear_span(p, dir, q, e, tol) {
            None => Ok(None),
            Some(_) => Err(Error::CollinearOverlap),
        },
    }
}

/// Interior angles `[at a, at b, at c]` of a non-degenerate triangle.
pub fn triangle_angles(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<[f64; 3]> {
    if orientation(a, b, c, tol) == Orientation::Collinear {
        return Err(Error::DegenerateTriangle);
    }
    let ang = |v, p, q| angle_at(v, p, q, tol).map(Angle::radians).map_err(|_| Error::DegenerateTriangle);
    Ok([ang(a, b, c)?, ang(b, c, a)?, ang(c, a, b)?])
}

pub fn is_acute_triangle(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<bool> {
    let angles = triangle_angles(a, b, c, tol)?;
    Ok(angles.iter().all(|&t| t < FRAC_PI_2 - tol.eps_angle))
}
