use std::fmt;

use thiserror::Error;

/// A named corner of the quadrangle, used in validation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::A => "A",
            Corner::B => "B",
            Corner::C => "C",
            Corner::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonFinite: coordinate ({0}, {1}) is not finite")]
    NonFinite(f64, f64),

    #[error("DegenerateRay: ray from the vertex has length {0:e}")]
    DegenerateRay(f64),

    #[error("DegenerateLine: defining points are {0:e} apart")]
    DegenerateLine(f64),

    #[error("DegenerateSegment: endpoints are {0:e} apart")]
    DegenerateSegment(f64),

    #[error("DegenerateTriangle: vertices are collinear")]
    DegenerateTriangle,

    #[error("CollinearOverlap: segments overlap along a common line")]
    CollinearOverlap,

    #[error("NotAcute: triangle has an angle of {0:.9} rad (>= pi/2)")]
    NotAcute(f64),

    #[error("NotInterior: point is not strictly inside the triangle")]
    NotInterior,

    #[error("NotSimple: {0}")]
    NotSimple(String),

    #[error("NotReflexAtC: interior angle at C is {0:.9} rad, which is not reflex")]
    NotReflexAtC(f64),

    #[error("NotAcuteAt({corner}): interior angle is {angle:.9} rad")]
    NotAcuteAt { corner: Corner, angle: f64 },

    #[error("InconsistentGeometry: {0}")]
    InconsistentGeometry(String),

    #[error("ConstructionFailure: {0}")]
    ConstructionFailure(String),

    #[error("GenerationExhausted: no admissible instance after {0} attempts")]
    GenerationExhausted(usize),
}

impl Error {
    /// True for errors that describe an inadmissible input shape (as opposed
    /// to internal or numerical failures).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NonFinite(..)
                | Error::DegenerateTriangle
                | Error::NotAcute(_)
                | Error::NotSimple(_)
                | Error::NotReflexAtC(_)
                | Error::NotAcuteAt { .. }
                | Error::DegenerateSegment(_)
                | Error::DegenerateLine(_)
                | Error::DegenerateRay(_)
                | Error::CollinearOverlap
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
