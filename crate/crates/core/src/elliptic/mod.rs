//! Exact arithmetic on elliptic curves over prime fields, used to realize
//! limit curves and their gonality data concretely.

mod curve;
mod divisor;
mod limit;
mod pencil;

use thiserror::Error;

pub use curve::{Curve, Point, MAX_Q};
pub use divisor::{class_of, d_l, lin_equiv, solve_translation, special_sequence, Divisor, DivisorClass, SpecialSequence};
pub use limit::{
    build_limit_curve, place_limit_curve, translate_base_points, DistinguishedPair, LimitCurve, PairKind,
};
pub use pencil::{g1k_identifies_pairs, halve, section_basis, Monomial, Pencil, Section};

use crate::alpha::AlphaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcError {
    #[error("field size {0} must be a prime in 5..={max}", max = MAX_Q)]
    BadField(u64),
    #[error("singular curve: 4a^3 + 27b^2 = 0 over F_{q} (a = {a}, b = {b})")]
    Singular { q: u64, a: u64, b: u64 },
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(Point),
    #[error("special {l}-sequence repeats a point; the gluing point has too small an order")]
    DegenerateSequence { l: usize },
    #[error("gluing point has order {order}, need at least {needed}")]
    GluingOrderTooSmall { order: u64, needed: u64 },
    #[error("degree mismatch: expected {expected}, got {left} and {right}")]
    DegreeMismatch { expected: i64, left: i64, right: i64 },
    #[error("no solution in E(F_q)")]
    NoSolution,
    #[error("trace class {found:?} differs from target {expected:?}")]
    ClassMismatch { expected: DivisorClass, found: DivisorClass },
    #[error("point {0} appears twice in the trace")]
    CollidingPoints(Point),
    #[error("level {level}: expected {expected} base points, found {found}")]
    ArityMismatch { level: usize, expected: usize, found: usize },
    #[error("point {0} sits at the pole of the pencil")]
    PairAtInfinity(Point),
    #[error("pencil sections are linearly dependent")]
    DependentPencil,
    #[error(transparent)]
    Alpha(#[from] AlphaError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, EcError>;
