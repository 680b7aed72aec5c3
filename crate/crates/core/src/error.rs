use thiserror::Error;

/// Errors produced by the algebraic kernels.
///
/// `NotDivisible` is kept distinct from ring errors so callers can tell a
/// failed exact division apart from an unsupported coefficient ring.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient rings differ: {0}")]
    RingMismatch(String),
    #[error("variable sets differ: {0}")]
    VarsMismatch(String),
    #[error("operation not supported over this ring: {0}")]
    UnsupportedRing(String),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{0}")]
    NotIrreducible(u64),
    #[error("division by zero or non-unit")]
    NonUnit,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degree {requested} too small to homogenize (need at least {needed})")]
    DegreeTooSmall { requested: u32, needed: u32 },
    #[error("non-square system: {0} components in {1} variables")]
    NonSquare(usize, usize),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("evaluation at the zero point")]
    ZeroPoint,
    #[error("degenerate lift: jacobian vanishes identically")]
    DegenerateJacobian,
    #[error("coefficient {0} is not p-integral at p={1}")]
    NotPIntegral(String, u64),
    #[error("p must be an odd prime, got {0}")]
    EvenPrime(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search horizon {0} exceeded")]
    HorizonExceeded(u64),
    #[error("requested precision {requested} exceeds guaranteed precision {guaranteed}")]
    PrecisionExceeded { requested: u32, guaranteed: u32 },
    #[error("saturation reached before index {0}")]
    SaturatedEarly(u64),
    #[error("recursion undefined at b = 0")]
    TripleUndefined,
    #[error("no periodic point with orbit avoiding indeterminacy over this field")]
    NoValidPeriodicPoint,
    #[error("enumeration cap exceeded: {0} points")]
    EnumerationCap(u64),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
