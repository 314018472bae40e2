//! The classical problem: the shortest triangle inscribed in a triangle.
//!
//! For an acute host the answer is the orthic triangle, whose vertices are
//! the feet of the three altitudes. When one host angle is right or obtuse
//! no proper minimizer exists: shrinking an inscribed triangle towards that
//! vertex approaches a collapsed "triangle" made of the altitude traversed
//! twice, which is what [`solve_classic`] reports.

use crate::error::{Error, Result};
use crate::geom::{distance, foot_of_perpendicular, perimeter, triangle_angles, Point, Tolerances};

use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicKind {
    Orthic,
    Degenerate,
}

impl ClassicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassicKind::Orthic => "Orthic",
            ClassicKind::Degenerate => "Degenerate",
        }
    }
}

/// Minimal inscribed triangle of a host triangle.
///
/// `vertices[i]` lies on the host side opposite `host[i]`. For a degenerate
/// solution the two positions next to the non-acute vertex both hold that
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicSolution {
    pub kind: ClassicKind,
    pub vertices: [Point; 3],
    pub perimeter: f64,
    pub host: [Point; 3],
}

impl ClassicSolution {
    /// Twice the shortest host side, which every solution stays below.
    pub fn upper_bound(&self) -> f64 {
        let [a, b, c] = self.host;
        2.0 * distance(a, b).min(distance(b, c)).min(distance(c, a))
    }
}

/// Feet of the three altitudes, foot `i` on the side opposite vertex `i`.
pub fn orthic_triangle(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<[Point; 3]> {
    let angles = triangle_angles(a, b, c, tol)?;
    let widest = angles.iter().copied().fold(0.0, f64::max);
    if widest >= FRAC_PI_2 - tol.eps_angle {
        return Err(Error::NotAcute(widest));
    }
    altitude_feet(a, b, c, tol)
}

fn altitude_feet(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<[Point; 3]> {
    Ok([
        foot_of_perpendicular(a, b, c, tol)?,
        foot_of_perpendicular(b, c, a, tol)?,
        foot_of_perpendicular(c, a, b, tol)?,
    ])
}

pub fn solve_classic(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<ClassicSolution> {
    let host = [a, b, c];
    let angles = triangle_angles(a, b, c, tol)?;
    let (wide, &widest) = angles.iter().enumerate().max_by(|x, y| x.1.total_cmp(y.1)).expect("three angles");

    if widest < FRAC_PI_2 - tol.eps_angle {
        let vertices = altitude_feet(a, b, c, tol)?;
        let [p, q, r] = vertices;
        return Ok(ClassicSolution { kind: ClassicKind::Orthic, vertices, perimeter: perimeter(p, q, r), host });
    }

    let apex = host[wide];
    let foot = foot_of_perpendicular(apex, host[(wide + 1) % 3], host[(wide + 2) % 3], tol)?;
    let mut vertices = [apex; 3];
    vertices[wide] = foot;
    Ok(ClassicSolution { kind: ClassicKind::Degenerate, vertices, perimeter: 2.0 * distance(apex, foot), host })
}

/// `|BC|·cos A + |CA|·cos B + |AB|·cos C`, an independent closed form for
/// the orthic perimeter.
pub fn orthic_perimeter_identity(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<f64> {
    let angles = triangle_angles(a, b, c, tol)?;
    let widest = angles.iter().copied().fold(0.0, f64::max);
    if widest >= FRAC_PI_2 - tol.eps_angle {
        return Err(Error::NotAcute(widest));
    }
    let cos_at = |v: Point, p: Point, q: Point| {
        let (u, w) = (p - v, q - v);
        u.dot(w) / (u.norm() * w.norm())
    };
    Ok(distance(b, c) * cos_at(a, b, c) + distance(c, a) * cos_at(b, c, a) + distance(a, b) * cos_at(c, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Segment;

    const T: Tolerances = Tolerances::DEFAULT;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn equilateral() -> [Point; 3] {
        [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 3f64.sqrt() / 2.0)]
    }

    #[test]
    fn equilateral_orthic_is_medial() {
        let [a, b, c] = equilateral();
        let feet = orthic_triangle(a, b, c, &T).unwrap();
        let h = 3f64.sqrt() / 4.0;
        let expected = [p(0.75, h), p(0.25, h), p(0.5, 0.0)];
        for (f, e) in feet.iter().zip(expected) {
            assert!(distance(*f, e) < 1e-15, "{f} vs {e}");
        }
        let s = solve_classic(a, b, c, &T).unwrap();
        assert_eq!(s.kind, ClassicKind::Orthic);
        assert!((s.perimeter - 1.5).abs() <= 1e-12);
        assert!((orthic_perimeter_identity(a, b, c, &T).unwrap() - 1.5).abs() <= 1e-12);
    }

    #[test]
    fn dart_auxiliary_triangle() {
        let (a, m, n) = (p(0.0, 0.0), p(2.0, 1.5), p(2.0, -1.5));
        let feet = orthic_triangle(a, m, n, &T).unwrap();
        let expected = [p(2.0, 0.0), p(0.56, -0.42), p(0.56, 0.42)];
        for (f, e) in feet.iter().zip(expected) {
            assert!(distance(*f, e) < 1e-14, "{f} vs {e}");
        }
        let s = solve_classic(a, m, n, &T).unwrap();
        // |PQ| + |PC| + |QC| = 0.84 + 1.5 + 1.5
        assert!((s.perimeter - 3.84).abs() <= 1e-12);
        assert!((orthic_perimeter_identity(a, m, n, &T).unwrap() - 3.84).abs() <= 1e-12);
    }

    #[test]
    fn right_triangle_is_degenerate() {
        let (a, b, c) = (p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0));
        assert!(matches!(orthic_triangle(a, b, c, &T), Err(Error::NotAcute(_))));
        assert!(matches!(orthic_perimeter_identity(a, b, c, &T), Err(Error::NotAcute(_))));
        let s = solve_classic(a, b, c, &T).unwrap();
        assert_eq!(s.kind, ClassicKind::Degenerate);
        assert!((s.perimeter - 2f64.sqrt()).abs() <= 1e-12);
        assert_eq!(s.vertices[1], a);
        assert_eq!(s.vertices[2], a);
        assert!(distance(s.vertices[0], p(0.5, 0.5)) < 1e-15);
    }

    #[test]
    fn obtuse_vertex_is_found_in_any_position() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(1.0, 0.5));
        let s = solve_classic(a, b, c, &T).unwrap();
        assert_eq!(s.kind, ClassicKind::Degenerate);
        assert_eq!(s.vertices[0], c);
        assert_eq!(s.vertices[1], c);
        assert!(distance(s.vertices[2], p(1.0, 0.0)) < 1e-15);
        assert!((s.perimeter - 1.0).abs() < 1e-15);
        assert!(s.perimeter < s.upper_bound());
    }

    #[test]
    fn isosceles_identity_agrees() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0));
        let s = solve_classic(a, b, c, &T).unwrap();
        let id = orthic_perimeter_identity(a, b, c, &T).unwrap();
        assert!((s.perimeter - id).abs() <= 1e-9 * id);
    }

    #[test]
    fn collinear_input_is_rejected() {
        let r = solve_classic(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), &T);
        assert_eq!(r, Err(Error::DegenerateTriangle));
    }

    #[test]
    fn orthic_feet_lie_on_host_sides() {
        let (a, b, c) = (p(0.3, -0.2), p(5.0, 0.4), p(2.2, 3.9));
        let feet = orthic_triangle(a, b, c, &T).unwrap();
        let sides = [(b, c), (c, a), (a, b)];
        for (i, (f, (s0, s1))) in feet.iter().zip(sides).enumerate() {
            let seg = Segment::new(s0, s1, &T).unwrap();
            let t = seg.param_of(*f);
            assert!(t > 0.0 && t < 1.0, "foot {i} param {t}");
            assert!(seg.line_distance(*f) < 1e-12);
            let apex = [a, b, c][i];
            let d = (apex - *f).dot(s1 - s0);
            assert!(d.abs() <= 1e-9 * (apex - *f).norm() * (s1 - s0).norm());
        }
    }
}
