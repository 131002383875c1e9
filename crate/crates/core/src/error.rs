use thiserror::Error;

/// Errors raised by the `pgl2q` operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular matrix (ps - qr = 0)")]
    SingularMatrix,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("homothety ratio must be nonzero")]
    ZeroRatio,
    #[error("matrix is not upper triangular")]
    NotUpperTriangular,
    #[error("letter {0} is outside the allowed alphabet")]
    Alphabet(String),
    #[error("unknown catalog {0:?} (expected \"tv\" or \"involution\")")]
    UnknownCatalog(String),
    #[error("matrix has no finite order >= 3")]
    NotTorsion,
    #[error("no conjugator found for a torsion element; this is a bug")]
    NoConjugatorFound,
    #[error("order {0} has no canonical representative (expected 3, 4 or 6)")]
    BadOrder(u32),
    #[error("degenerate family parameters: {0}")]
    DegenerateParams(String),
    #[error("order polynomial needs an odd n >= 3, got {0}")]
    BadOrderArg(u32),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("report does not match the schema: {0}")]
    Schema(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
