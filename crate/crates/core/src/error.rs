use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid chain spec: {0}")]
    InvalidSpec(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("operator contains a non-quadratic term of degree {degree}")]
    NonQuadratic { degree: usize },
    #[error("operator is not Hermitian: {0}")]
    NonHermitian(String),
    #[error("dimension cap exceeded: {n} qubits > cap {cap}")]
    DimensionCap { n: usize, cap: usize },
    #[error("matrix is not antisymmetric (max |A + A^T| = {0:e})")]
    NotAntisymmetric(f64),
    #[error("degenerate Hamiltonian: quasiparticle gap {gap:e} between modes {mode} and {} is below tolerance", mode + 1)]
    DegenerateHamiltonian { mode: usize, gap: f64 },
    #[error("gate layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("non-Hermitian observable: {0}")]
    NonHermitianObservable(String),
    #[error("invalid noise model: {0}")]
    InvalidNoise(String),
    #[error("phase vector passes through the origin (phase boundary)")]
    BoundaryPoint,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("need at least {needed} data points, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("rank-deficient design matrix")]
    RankDeficient,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("zero variance in predictions")]
    ZeroVariance,
    #[error("malformed CSV at line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
