//! Seeded instance generation.
//!
//! Random instances are built as an acute triangle `ABD` plus a point `C`
//! strictly inside it. An interior `C` always makes the angle at `C` reflex
//! and only shrinks the angles at `A`, `B` and `D`, so nearly every draw is
//! admissible. Reduced instances put `C` on the segment `BD` instead.
//!
//! The random source is ChaCha8 seeded through `seed_from_u64`, and floats
//! are formed from the top 53 bits of each `u64` draw, so a seed yields the
//! same instances on every platform.

use std::f64::consts::FRAC_PI_2;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::geom::{triangle_angles, Point, Tolerances};
use crate::quad::{case_detect, CaseTag, Quadrangle};

/// Draws allowed per emitted instance before giving up.
pub const MAX_REJECTIONS: usize = 100_000;

/// Smallest host angle accepted when sampling `ABD`, in radians.
const MIN_HOST_ANGLE: f64 = 5.0 * std::f64::consts::PI / 180.0;
/// Largest host angle accepted, in radians.
const MAX_HOST_ANGLE: f64 = FRAC_PI_2 - 0.5 * std::f64::consts::PI / 180.0;
/// Smallest barycentric weight of an interior `C`.
const MIN_WEIGHT: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CaseFilter {
    #[default]
    Any,
    CaseA,
    CaseB,
    Reduced,
}

impl CaseFilter {
    pub fn accepts(self, case: CaseTag) -> bool {
        match self {
            CaseFilter::Any => true,
            CaseFilter::CaseA => case == CaseTag::CaseA,
            CaseFilter::CaseB => case.is_case_b(),
            CaseFilter::Reduced => case == CaseTag::Reduced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub count: usize,
    pub case_filter: CaseFilter,
    /// Vertices of `ABD` are drawn from `[0, scale]²`.
    pub scale: f64,
}

impl GenConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        GenConfig { seed, count, case_filter: CaseFilter::Any, scale: 10.0 }
    }

    pub fn with_filter(mut self, case_filter: CaseFilter) -> Self {
        self.case_filter = case_filter;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }
}

/// A stream of instances from one seed.
#[derive(Debug, Clone)]
pub struct Generator {
    rng: ChaCha8Rng,
    filter: CaseFilter,
    scale: f64,
    tol: Tolerances,
}

impl Generator {
    pub fn new(seed: u64, filter: CaseFilter, scale: f64) -> Self {
        assert!(scale > 0.0 && scale.is_finite(), "scale must be positive");
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), filter, scale, tol: Tolerances::DEFAULT }
    }

    /// Uniform draw from `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    fn point(&mut self) -> Point {
        let x = self.uniform() * self.scale;
        let y = self.uniform() * self.scale;
        Point::new(x, y)
    }

    /// An acute triangle with every angle between 5° and 89.5°.
    pub fn acute_triangle(&mut self) -> Result<[Point; 3]> {
        for _ in 0..MAX_REJECTIONS {
            let (a, b, d) = (self.point(), self.point(), self.point());
            let Ok(angles) = triangle_angles(a, b, d, &self.tol) else { continue };
            if angles.iter().all(|&t| (MIN_HOST_ANGLE..=MAX_HOST_ANGLE).contains(&t)) {
                return Ok([a, b, d]);
            }
        }
        Err(Error::GenerationExhausted(MAX_REJECTIONS))
    }

    fn candidate(&mut self) -> Option<Quadrangle> {
        let [a, b, d] = self.acute_triangle().ok()?;
        let c = if self.filter == CaseFilter::Reduced {
            b.lerp(d, self.uniform_in(0.05, 0.95))
        } else {
            let (mut u, mut v) = (self.uniform(), self.uniform());
            if u + v > 1.0 {
                (u, v) = (1.0 - u, 1.0 - v);
            }
            let w = 1.0 - u - v;
            if u.min(v).min(w) < MIN_WEIGHT {
                return None;
            }
            a * w + b * u + d * v
        };
        crate::quad::validate(a, b, c, d, &self.tol).ok()
    }

    /// Next admissible instance whose case passes the filter.
    pub fn next_instance(&mut self) -> Result<Quadrangle> {
        for _ in 0..MAX_REJECTIONS {
            let Some(q) = self.candidate() else { continue };
            match case_detect(&q) {
                Ok(det) if self.filter.accepts(det.case) => return Ok(q),
                _ => continue,
            }
        }
        Err(Error::GenerationExhausted(MAX_REJECTIONS))
    }
}

impl Iterator for Generator {
    type Item = Result<Quadrangle>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_instance())
    }
}

pub fn random_quadrangle(cfg: &GenConfig) -> Result<Vec<Quadrangle>> {
    Generator::new(cfg.seed, cfg.case_filter, cfg.scale).take(cfg.count).collect()
}

/// Hand-built instances on the edges of the admissible region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// `M = B`: the angle criterion for `M` holds with equality.
    PerpendicularThroughB,
    /// `∠BCD = π − 10⁻⁶`.
    NearReduced,
    /// `∠A = π/2 − 10⁻⁶`.
    NearRightAtA,
}

pub fn boundary_instance(kind: BoundaryKind) -> Quadrangle {
    let p = Point::new;
    let q = match kind {
        BoundaryKind::PerpendicularThroughB => Quadrangle::new(p(0.0, 0.0), p(2.0, 1.5), p(2.0, 0.0), p(4.0, -3.0)),
        BoundaryKind::NearReduced => {
            // C sits left of BD (x = 4) by δ, so ∠BCD = π − 2·atan(δ/3).
            let delta = 3.0 * (0.5e-6f64).tan();
            Quadrangle::new(p(0.0, 0.0), p(4.0, 3.0), p(4.0 - delta, 0.0), p(4.0, -3.0))
        }
        BoundaryKind::NearRightAtA => {
            let half = 0.5 * (FRAC_PI_2 - 1e-6);
            let (c, s) = (half.cos(), half.sin());
            Quadrangle::new(p(0.0, 0.0), p(4.0 * c, 4.0 * s), p(2.0, 0.0), p(4.0 * c, -4.0 * s))
        }
    };
    q.expect("boundary instances are admissible")
}
