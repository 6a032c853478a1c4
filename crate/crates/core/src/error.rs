use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("singular points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("Van Vleck polynomial has degree {degree}, at most {max} allowed")]
    DegreeTooHigh { degree: usize, max: usize },
    #[error("{points} singular points but {gammas} exponent parameters")]
    LengthMismatch { points: usize, gammas: usize },
    #[error("at least two finite singular points are required, got {0}")]
    TooFewPoints(usize),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("Fuchs relation violated: alpha+beta-gamma-delta-epsilon+1 = {0}")]
    FuchsRelationViolated(f64),
    #[error("singular point index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("indicial polynomial is degenerate (leading coefficient vanishes)")]
    DegenerateIndicial,
    #[error("recurrence is resonant at index {0}")]
    Resonance(usize),
    #[error("exponent is not a root of the indicial polynomial (residual {0:e})")]
    NotAnExponent(f64),
    #[error("coefficient table has {available} columns, index {requested} requested")]
    TableTooShort { requested: usize, available: usize },
    #[error("malformed rule table: {0}")]
    MalformedTable(String),
    #[error("order {requested} exceeds the limit {limit}")]
    SizeLimit { requested: usize, limit: usize },
    #[error("evaluation at a branch point of the solution")]
    BranchPointInput,
    #[error("evaluation at a singular point of the equation")]
    SingularInput,
    #[error("fewer than two usable sample points")]
    DegenerateSamples,
    #[error("parameter c = {0} is a non-positive integer")]
    PoleInC(String),
    #[error("point lies outside the disk of convergence (|x| = {modulus}, radius {radius})")]
    OutOfDisk { modulus: f64, radius: f64 },
    #[error("gamma = {0} is a non-positive integer")]
    ResonantGamma(String),
    #[error("exponent difference 1 - gamma is an integer")]
    IntegerExponentDifference,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Numeric or domain failures, as opposed to malformed / invalid input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Resonance(_)
                | Error::BranchPointInput
                | Error::SingularInput
                | Error::OutOfDisk { .. }
                | Error::DegenerateSamples
                | Error::IntegerExponentDifference
                | Error::ResonantGamma(_)
                | Error::PoleInC(_)
                | Error::DegenerateIndicial
                | Error::NotAnExponent(_)
        )
    }
}
