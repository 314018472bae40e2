//! Brute-force verification.
//!
//! [`brute_force_min`] searches every admissible inscribed triangle directly,
//! without using any of the case analysis in [`crate::quad`]: a uniform grid
//! over the three side parameters, followed by exact coordinate-wise descent.
//! Each descent step moves one vertex to the point of its side that minimizes
//! the sum of distances to the other two, which is where the straight line
//! to the mirror image of one of them crosses the side.
//!
//! The [`extension_sample`], [`apex_sample`] and [`orthic_bound_sample`]
//! helpers check the standalone inequalities the construction rests on, one
//! random configuration at a time.

use crate::classic::orthic_triangle;
use crate::error::{Error, Result};
use crate::geom::{distance, perimeter, reflect, Point, Tolerances};
use crate::quad::{InscribedTriangle, Quadrangle, Side, TriangleVertex};

/// Stop refining once a full round improves the perimeter by less than this.
pub const REFINE_STEP_TOL: f64 = 1e-12;
pub const MAX_REFINE_ROUNDS: usize = 500;
/// Slack used by the sampled inequality checks.
pub const SAMPLE_SLACK: f64 = 1e-12;

/// The side carrying the third vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    BC,
    CD,
}

impl Branch {
    fn side(self) -> Side {
        match self {
            Branch::BC => Side::BC,
            Branch::CD => Side::CD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub min_perimeter: f64,
    pub argmin: InscribedTriangle,
    pub branch: Branch,
    pub grid_n: usize,
    /// Descent rounds spent on the reported branch.
    pub refine_iters: usize,
    pub converged: bool,
}

/// Minimizes `|XY| + |YZ| + |ZX|` over `X ∈ AB`, `Y ∈ AD`, `Z ∈ BC ∪ CD`.
///
/// Panics if `grid_n < 8`.
pub fn brute_force_min(q: &Quadrangle, grid_n: usize) -> OracleResult {
    assert!(grid_n >= 8, "grid_n must be at least 8, got {grid_n}");
    let mut best: Option<(Branch, Descent)> = None;
    for branch in [Branch::BC, Branch::CD] {
        let found = search_branch(q, branch, grid_n);
        if best.as_ref().is_none_or(|(_, b)| found.perimeter < b.perimeter) {
            best = Some((branch, found));
        }
    }
    let (branch, found) = best.expect("two branches searched");
    let vertex = |side: Side, t: f64| {
        let (s, e) = q.side(side);
        TriangleVertex { point: s.lerp(e, t), side, param: t }
    };
    let [t1, t2, t3] = found.params;
    let argmin =
        InscribedTriangle { vertices: [vertex(Side::AB, t1), vertex(Side::AD, t2), vertex(branch.side(), t3)] };
    OracleResult {
        min_perimeter: argmin.perimeter(),
        argmin,
        branch,
        grid_n,
        refine_iters: found.rounds,
        converged: found.converged,
    }
}

#[derive(Debug, Clone, Copy)]
struct Descent {
    params: [f64; 3],
    perimeter: f64,
    rounds: usize,
    converged: bool,
}

fn grid_points(s: Point, e: Point, n: usize) -> Vec<Point> {
    let step = 1.0 / (n - 1) as f64;
    (0..n).map(|i| s.lerp(e, i as f64 * step)).collect()
}

fn search_branch(q: &Quadrangle, branch: Branch, n: usize) -> Descent {
    let sides = [q.side(Side::AB), q.side(Side::AD), q.side(branch.side())];
    let [xs, ys, zs] = sides.map(|(s, e)| grid_points(s, e, n));
    let table = |u: &[Point], v: &[Point]| -> Vec<f64> {
        u.iter().flat_map(|&p| v.iter().map(move |&r| distance(p, r))).collect()
    };
    let (xy, xz, yz) = (table(&xs, &ys), table(&xs, &zs), table(&ys, &zs));

    // Two vertices sharing a corner of the quadrangle make the perimeter
    // non-smooth there, and coordinate descent can stall at such a point even
    // when a shorter proper triangle is one grid step away. The best proper
    // grid point is refined as well.
    let corner_k = match branch {
        Branch::BC => 0,
        Branch::CD => n - 1,
    };
    let coincident = |i: usize, j: usize, k: usize| {
        (i == 0 && j == 0) || (k == corner_k && if branch == Branch::BC { i == n - 1 } else { j == n - 1 })
    };

    // Scan order (k, i, j) with a strict comparison keeps the smallest t3,
    // then t1, then t2 among ties.
    let mut best = (f64::INFINITY, 0, 0, 0);
    let mut proper = (f64::INFINITY, 0, 0, 0);
    for k in 0..n {
        for i in 0..n {
            let xz_ik = xz[i * n + k];
            for j in 0..n {
                let per = xy[i * n + j] + xz_ik + yz[j * n + k];
                if per < best.0 {
                    best = (per, i, j, k);
                }
                if per < proper.0 && !coincident(i, j, k) {
                    proper = (per, i, j, k);
                }
            }
        }
    }
    let step = 1.0 / (n - 1) as f64;
    let params = |c: (f64, usize, usize, usize)| [c.1, c.2, c.3].map(|idx| idx as f64 * step);
    let mut found = refine(sides, params(best));
    if proper != best {
        let alt = refine(sides, params(proper));
        if alt.perimeter < found.perimeter {
            found = Descent { rounds: found.rounds + alt.rounds, converged: alt.converged, ..alt };
        } else {
            found.rounds += alt.rounds;
        }
    }
    found
}

fn refine(sides: [(Point, Point); 3], start: [f64; 3]) -> Descent {
    let at = |t: &[f64; 3]| -> [Point; 3] { std::array::from_fn(|i| sides[i].0.lerp(sides[i].1, t[i])) };
    let mut t = start;
    let mut pts = at(&t);
    let mut per = perimeter(pts[0], pts[1], pts[2]);
    let mut rounds = 0;
    let mut converged = false;
    while rounds < MAX_REFINE_ROUNDS {
        rounds += 1;
        let before = per;
        for i in 0..3 {
            let (s, e) = sides[i];
            let cand = best_param_on_side(s, e, pts[(i + 1) % 3], pts[(i + 2) % 3], t[i]);
            let mut trial = t;
            trial[i] = cand;
            let trial_pts = at(&trial);
            let trial_per = perimeter(trial_pts[0], trial_pts[1], trial_pts[2]);
            if trial_per <= per {
                t = trial;
                pts = trial_pts;
                per = trial_per;
            }
        }
        if before - per < REFINE_STEP_TOL {
            converged = true;
            break;
        }
    }
    Descent { params: t, perimeter: per, rounds, converged }
}

/// Parameter in `[0, 1]` of the point `X` on segment `s → e` minimizing
/// `|X − p| + |X − r|`.
///
/// If `p` and `r` are on the same side of the line, `r` is replaced by its
/// mirror image; the minimizer on the line is then where the segment from `p`
/// to (the image of) `r` crosses it. The cost is convex along the line, so
/// clamping to the segment gives the constrained minimizer.
pub fn best_param_on_side(s: Point, e: Point, p: Point, r: Point, current: f64) -> f64 {
    let d = e - s;
    let dd = d.norm_squared();
    let tp = (p - s).dot(d) / dd;
    let tr = (r - s).dot(d) / dd;
    let hp = d.cross(p - s);
    let mut hr = d.cross(r - s);
    if hp == 0.0 && hr == 0.0 {
        // Both on the line: any point between them is optimal.
        return current.clamp(tp.min(tr), tp.max(tr)).clamp(0.0, 1.0);
    }
    if hp * hr > 0.0 {
        hr = -hr;
    }
    let lambda = hp / (hp - hr);
    (tp + lambda * (tr - tp)).clamp(0.0, 1.0)
}

/// `|C′C″|` for the mirror images of `C` in the lines `AB` and `AD`. In
/// case A this equals the minimal perimeter.
pub fn reflection_check(q: &Quadrangle) -> Result<f64> {
    let tol = q.tolerances();
    let c1 = reflect(q.c(), q.a(), q.b(), tol)?;
    let c2 = reflect(q.c(), q.a(), q.d(), tol)?;
    Ok(distance(c1, c2))
}

fn ensure_acute(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<[Point; 3]> {
    orthic_triangle(a, b, c, tol)
}

/// `|XY| − |MN|` for `X = A + s1·(M − A)` and `Y = A + s2·(N − A)`.
///
/// Written as `M + (s1 − 1)(M − A)` so that `s1 = 1` gives `M` exactly.
pub fn extension_gap(a: Point, m: Point, n: Point, s1: f64, s2: f64) -> f64 {
    let x = m + (m - a) * (s1 - 1.0);
    let y = n + (n - a) * (s2 - 1.0);
    distance(x, y) - distance(m, n)
}

/// Extending both legs of an acute triangle from `A` never shortens the
/// opposite side: `|XY| ≥ |MN|`, strictly unless `X = M` and `Y = N`.
pub fn extension_sample(a: Point, m: Point, n: Point, s1: f64, s2: f64, tol: &Tolerances) -> Result<bool> {
    debug_assert!(s1 >= 1.0 && s2 >= 1.0, "stretch factors must be at least 1");
    ensure_acute(a, m, n, tol)?;
    let gap = extension_gap(a, m, n, s1, s2);
    if s1 > 1.0 || s2 > 1.0 {
        Ok(gap > 0.0)
    } else {
        Ok(gap >= -SAMPLE_SLACK)
    }
}

/// `per(△ABC) − per(△EBC)`.
pub fn apex_gap(a: Point, b: Point, c: Point, e: Point) -> f64 {
    perimeter(a, b, c) - perimeter(e, b, c)
}

/// Moving the apex of a triangle inward shortens its perimeter:
/// `per(△ABC) ≥ per(△EBC)` for `E` inside, strictly when `E ≠ A`.
pub fn apex_sample(a: Point, b: Point, c: Point, e: Point, tol: &Tolerances) -> Result<bool> {
    let area = (b - a).cross(c - a);
    if area == 0.0 {
        return Err(Error::DegenerateTriangle);
    }
    let weights = [(b - e).cross(c - e) / area, (c - e).cross(a - e) / area, (a - e).cross(b - e) / area];
    if weights.iter().any(|&w| w <= 0.0) {
        return Err(Error::NotInterior);
    }
    let gap = apex_gap(a, b, c, e);
    if distance(a, e) > tol.eps_len {
        Ok(gap > 0.0)
    } else {
        Ok(gap >= -SAMPLE_SLACK)
    }
}

/// The orthic perimeter is below twice the shortest side.
pub fn orthic_bound_sample(a: Point, b: Point, c: Point, tol: &Tolerances) -> Result<bool> {
    let [p, q, r] = ensure_acute(a, b, c, tol)?;
    let shortest = distance(a, b).min(distance(b, c)).min(distance(c, a));
    Ok(perimeter(p, q, r) < 2.0 * shortest)
}
