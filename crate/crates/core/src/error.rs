use std::path::PathBuf;

/// Errors raised anywhere in the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field extension degree must be at least 1")]
    DegreeZero,
    #[error("the field with two elements has no element of multiplicative order > 1")]
    TrivialField,
    #[error("size guard exceeded for {what}: {size} > {limit} (set SRGTA_SIZE_GUARD to override)")]
    SizeGuardExceeded { what: String, size: u64, limit: u64 },
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("bad congruence: {0}")]
    BadCongruence(String),
    #[error("inconsistent SRG parameters ({n},{k},{lambda},{mu})")]
    InconsistentParams { n: i64, k: i64, lambda: i64, mu: i64 },
    #[error("imprimitive parameters ({n},{k},{lambda},{mu})")]
    ImprimitiveParams { n: i64, k: i64, lambda: i64, mu: i64 },
    #[error("graph is not strongly regular: {reason}")]
    NotSrg { reason: String, pair: Option<(usize, usize)> },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{}:{line}: {msg}", path.display())]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error("{}:{line}: loop edge rejected", path.display())]
    LoopRejected { path: PathBuf, line: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("vertex cell is not invariant under the given generators")]
    CellNotInvariant,
    #[error("automorphism search exceeded {0} s")]
    Timeout(u64),
    #[error("generator on line {line} is not an automorphism")]
    NotAnAutomorphism { line: usize },
    #[error("vector length {found} does not match ambient dimension {expected}")]
    DimMismatch { expected: usize, found: usize },
    #[error("algebra closure exceeded dimension cap {cap}")]
    ClosureBudgetExceeded { cap: usize },
    #[error("matrix is not a diagonal 0/1 idempotent")]
    NotIdempotent,
    #[error("idempotents do not sum to the identity")]
    NotPartitionOfIdentity,
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("automorphism group is not transitive")]
    NotTransitive,
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
    #[error("dimension differs between primes {p1} ({d1}) and {p2} ({d2})")]
    PrimeDisagreement { p1: u64, d1: usize, p2: u64, d2: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
