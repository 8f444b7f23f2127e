use thiserror::Error;

/// Errors raised by the symbolic modules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot add homogeneous polynomials of degrees {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("map components have unequal degrees")]
    UnequalMapDegrees,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("cannot homogenize to degree {target}: polynomial has degree {actual}")]
    HomogenizeDegree { target: u32, actual: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a non-zero remainder")]
    NotDivisible,
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: u32, q: u32 },
    #[error("curve indices must be positive")]
    ZeroIndex,
    #[error("[0:0:0] is not a projective point")]
    ZeroPoint,
    #[error("{point} is a base point of {map}: no single image point")]
    BasePoint { map: String, point: String },
    #[error("point has a zero coordinate")]
    ZeroCoordinate,
    #[error("parameter gcd has degree {0}, expected a linear factor")]
    NonLinearGcd(usize),
    #[error("point is not on the {p}:{q} curve")]
    NotOnCurve { p: u32, q: u32 },
    #[error("passage parameters coincide: {0}")]
    CoincidentPassage(String),
    #[error("multiplicities {m:?} are invalid for degree {degree}")]
    InvalidMultiplicities { degree: u32, m: [u32; 3] },
    #[error("expected {expected} multiplicities, got {got}")]
    MultiplicityCount { expected: usize, got: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
