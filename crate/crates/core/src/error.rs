use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} requires sizes >= 1, got {given}")]
    NonPositiveSize { family: String, given: String },
    #[error("graph too large: {n} vertices (supported maximum is {max})")]
    TooLarge { n: usize, max: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("cannot parse graph spec `{spec}`: {reason}")]
    GraphSpec { spec: String, reason: String },
    #[error("interpolation nodes must be distinct (x = {0} repeated)")]
    DuplicateNode(String),
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivision,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("designated block is singular")]
    SingularBlock,
    #[error("operation requires a regular graph ({0})")]
    NotRegular(String),
    #[error("operation requires positive degree ({0})")]
    ZeroDegree(String),
    #[error("cubic has a non-real root pair (residual {residual:.3e}); coefficient transcription bug")]
    ComplexRoots { residual: f64 },
    #[error("search supports 1 <= n <= {max}, got n = {n}")]
    SearchRange { n: usize, max: usize },
    #[error("degree {r} out of range for {n} vertices")]
    DegreeRange { r: usize, n: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
