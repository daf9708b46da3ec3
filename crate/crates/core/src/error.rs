use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gamma factor list is empty")]
    EmptyGammaFactors,
    #[error("gamma factor lambda must be positive, got {0}")]
    NonPositiveLambda(f64),
    #[error("gamma factor mu must have nonnegative real part, got {0}")]
    NegativeRealMu(f64),
    #[error("Q must be positive, got {0}")]
    NonPositiveQ(f64),
    #[error("Ramanujan theta must lie in [0, 1/2), got {0}")]
    InvalidTheta(f64),
    #[error("t = 0 requires the real-point convention")]
    ZeroTWithoutRealPointFlag,
    #[error("log tau must exceed 1, got {0}")]
    LogTauTooSmall(f64),
    #[error("unknown builtin L-function `{0}`")]
    UnknownBuiltin(String),
    #[error("character {index} mod {modulus} is not primitive")]
    NonPrimitiveCharacter { modulus: u64, index: u64 },
    #[error("invalid character {index} mod {modulus}")]
    InvalidCharacter { modulus: u64, index: u64 },
    #[error("descriptor has no coefficient provider")]
    NoCoefficientProvider,
    #[error("table limit {0} is invalid or exceeds the memory budget")]
    LimitTooLarge(u64),
    #[error("argument {value} outside table range [{lo}, {hi}]")]
    OutOfTableRange { value: f64, lo: f64, hi: f64 },
    #[error("x = {0} is below 2")]
    XBelowTwo(f64),
    #[error("y = {0} is below 2")]
    YBelowTwo(f64),
    #[error("coefficient A is singular at u = 1")]
    SingularAtUEqualsOne,
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("negative argument {0}")]
    NegativeArgument(f64),
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("descriptor has no polynomial Euler product order")]
    MissingEulerOrder,
    #[error("the strong lambda conjecture form is required (all lambda_j = 1/2)")]
    StrongLambdaRequired,
    #[error("no case applies at sigma = {0}")]
    NoCaseApplies(f64),
    #[error("descriptor has a pole (m_L = {0}); an entire L-function is required")]
    NotEntire(u32),
    #[error("conductor too small: log q = {0}")]
    ConductorTooSmall(f64),
    #[error("Euler order {m} differs from degree {d}")]
    EulerOrderMismatch { m: u32, d: f64 },
    #[error("zero dataset is empty")]
    EmptyDataset,
    #[error("point too close to a singularity: {0}")]
    NearSingularity(String),
    #[error("zero dataset too short: covers {have}, needs {need}")]
    DatasetTooShort { have: f64, need: f64 },
    #[error("s = 1 is a pole")]
    PoleAtOne,
    #[error("accuracy {target:e} not reached (estimate {estimate:e})")]
    AccuracyNotReached { target: f64, estimate: f64 },
    #[error("zero of the L-function on the continuation path near sigma = {0}")]
    ZeroOnPath(f64),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("ordinates not strictly increasing at line {0}")]
    NotMonotone(usize),
    #[error("zero density implausible: {0}")]
    DensityImplausible(String),
    #[error("no feasible parameter set in the search box")]
    EmptyFeasibleSet,
    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
