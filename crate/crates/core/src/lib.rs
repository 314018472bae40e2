//! Shortest triangles inscribed in acute triangles and in dart-shaped
//! quadrangles.
//!
//! * [`classic`] solves the triangle problem (orthic triangle, or the
//!   collapsed doubled altitude for a non-acute host).
//! * [`quad`] validates a quadrangle `ABCD` with a reflex angle at `C` and
//!   solves it by building the right auxiliary acute triangle.
//! * [`oracle`] finds the same minimum by direct search, independently of
//!   the construction, and samples the supporting inequalities.
//! * [`gen`] produces seeded random and boundary instances.
//! * [`io`], [`svg`] and [`cli`] provide the file formats, figures and the
//!   `fagnano` command.
//!
//! ```
//! use fagnano::{solve, CaseTag, Point, Quadrangle};
//!
//! let p = Point::new;
//! let dart = Quadrangle::new(p(0.0, 0.0), p(4.0, 3.0), p(2.0, 0.0), p(4.0, -3.0))?;
//! let s = solve(&dart)?;
//! assert_eq!(s.case, CaseTag::CaseA);
//! assert!((s.perimeter - 3.84).abs() < 1e-12);
//! # Ok::<(), fagnano::Error>(())
//! ```
//!
//! A longer walk-through lives in the guide under `book/`; its code blocks
//! are compiled and run as doc-tests of this crate.

pub mod classic;
pub mod cli;
pub mod error;
pub mod gen;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod quad;
pub mod svg;

pub use classic::{orthic_perimeter_identity, orthic_triangle, solve_classic, ClassicKind, ClassicSolution};
pub use error::{Corner, Error, Result};
pub use gen::{boundary_instance, random_quadrangle, BoundaryKind, CaseFilter, GenConfig, Generator};
pub use geom::{Angle, Point, Segment, Tolerances};
pub use oracle::{brute_force_min, reflection_check, Branch, OracleResult};
pub use quad::{
    case_detect, construct_case_a, construct_case_b, perimeter_upper_bound, solve, validate, CaseTag, Detection,
    InscribedTriangle, Missed, Quadrangle, Side, Solution, TriangleVertex,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/classic.md")]
    mod classic {}
    #[doc = include_str!("../../../book/src/generalized.md")]
    mod generalized {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/instances.md")]
    mod instances {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
