//! Static SVG figures of an instance and its solution.

use std::fmt::Write;

use crate::geom::{distance, Point};
use crate::io::SolutionFile;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 0.05;

const HOST_LABELS: [&str; 4] = ["A", "B", "C", "D"];
const TRIANGLE_LABELS: [&str; 3] = ["P", "Q", "R"];

/// Similarity map from plane coordinates into the viewport, y pointing down.
struct Viewport {
    scale: f64,
    center: Point,
}

impl Viewport {
    fn fit(points: &[Point]) -> Self {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point { x: lo.x.min(p.x), y: lo.y.min(p.y) };
            hi = Point { x: hi.x.max(p.x), y: hi.y.max(p.y) };
        }
        let span_x = (hi.x - lo.x).max(f64::MIN_POSITIVE);
        let span_y = (hi.y - lo.y).max(f64::MIN_POSITIVE);
        let scale = (WIDTH * (1.0 - 2.0 * MARGIN) / span_x).min(HEIGHT * (1.0 - 2.0 * MARGIN) / span_y);
        Viewport { scale, center: (lo + hi) * 0.5 }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (WIDTH / 2.0 + (p.x - self.center.x) * self.scale, HEIGHT / 2.0 - (p.y - self.center.y) * self.scale)
    }

    fn polygon(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// The auxiliary triangle implied by a solution's case tag, if any.
fn auxiliary_triangle(host: &[Point], sol: &SolutionFile) -> Option<[Point; 3]> {
    let aux = |k: &str| sol.aux.get(k).map(|&xy| Point::from(xy));
    match (sol.case.as_str(), host) {
        ("CaseA", [a, ..]) => Some([*a, aux("M")?, aux("N")?]),
        ("CaseB_missAB", [a, b, _, _]) => Some([*a, *b, aux("W")?]),
        ("CaseB_missAD", [a, _, _, d]) => Some([*a, *d, aux("W")?]),
        ("Reduced", [a, b, _, d]) => Some([*a, *b, *d]),
        _ => None,
    }
}

/// Renders the host polygon, the dashed auxiliary triangle, the minimal
/// triangle and one labelled marker per distinct named point.
pub fn render(host: &[Point], sol: &SolutionFile) -> String {
    assert!(host.len() == 3 || host.len() == 4, "host must be a triangle or quadrangle");
    let tri: Vec<Point> = sol.vertices.iter().map(|v| Point::from(v.point)).collect();
    let aux_named: Vec<(String, Point)> = sol.aux.iter().map(|(k, &xy)| (k.clone(), Point::from(xy))).collect();
    let aux_tri = auxiliary_triangle(host, sol);

    let mut all: Vec<Point> = host.to_vec();
    all.extend(tri.iter().copied());
    all.extend(aux_named.iter().map(|(_, p)| *p));
    let view = Viewport::fit(&all);

    let mut labels: Vec<(String, Point)> = HOST_LABELS.iter().zip(host).map(|(l, p)| (l.to_string(), *p)).collect();
    labels.extend(aux_named);
    let size = all.iter().fold(1.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()));
    for (label, p) in TRIANGLE_LABELS.iter().zip(&tri) {
        if labels.iter().all(|(_, q)| distance(*p, *q) > 1e-9 * size) {
            labels.push((label.to_string(), *p));
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"  <polygon class="host" points="{}" fill="#f4f4f4" stroke="black" stroke-width="2"/>"##,
        view.polygon(host)
    );
    if let Some(t) = aux_tri {
        let _ = writeln!(
            out,
            r##"  <polygon class="aux" points="{}" fill="none" stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="8 5"/>"##,
            view.polygon(&t)
        );
    }
    let _ = writeln!(
        out,
        r##"  <polygon class="solution" points="{}" fill="#d62728" fill-opacity="0.1" stroke="#d62728" stroke-width="2.5"/>"##,
        view.polygon(&tri)
    );
    for (label, p) in &labels {
        let (x, y) = view.map(*p);
        let label = escape(label);
        let _ = writeln!(
            out,
            r#"  <g class="point"><circle cx="{x:.3}" cy="{y:.3}" r="4" fill="black"/><text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="16">{label}</text></g>"#,
            x + 7.0,
            y - 7.0
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="10" y="{:.0}" font-family="sans-serif" font-size="14">{} perimeter {:.6}, bound {:.6}</text>"#,
        HEIGHT - 10.0,
        escape(&sol.case),
        sol.perimeter,
        sol.upper_bound
    );
    out.push_str("</svg>\n");
    out
}
