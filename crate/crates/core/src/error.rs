use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a point needs at least {min} coordinates")]
    TooFewCoordinates { min: usize },

    #[error("coordinate {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("at least {min} points are required")]
    TooFewPoints { min: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("half-space system is empty (infeasible)")]
    EmptyRegion,

    #[error("invalid half-space system: {0}")]
    InvalidRegion(String),

    #[error("point is not on the tropical sphere (|norm - R| = {deviation})")]
    NotOnSphere { deviation: f64 },

    #[error("point lies outside the tropical ball (distance {distance} > radius {radius})")]
    OutsideBall { distance: f64, radius: f64 },

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("curve evaluated to a non-finite point at t = {t}")]
    NonFiniteCurve { t: f64 },

    #[error("curve length did not converge within depth {depth}: last two estimates {lower} and {upper}")]
    NoConvergence { depth: u32, lower: f64, upper: f64 },

    #[error("coordinate {index} is not an integer ({value})")]
    NonInteger { index: usize, value: f64 },

    #[error("{0:?} is not a lattice center (coordinate sum not divisible by n + 1)")]
    NotInLattice(Vec<i64>),

    #[error("dimension {dim} exceeds the supported bound {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("invalid facet: {0}")]
    InvalidFacet(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
