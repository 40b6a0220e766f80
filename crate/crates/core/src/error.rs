use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("braid does not stabilize I_{k} setwise")]
    NotInStabilizer { k: usize },
    #[error("word is not a pure braid")]
    NotPure,
    #[error("{what}: {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: String, value: usize, bound: usize },
    #[error("curve data does not match the cover case: {0}")]
    CaseMismatch(String),
    #[error("generator matrix for {0} is not an involution")]
    NonInvolutive(String),
    #[error("word is not in the level-4 subgroup")]
    NotInSubgroup,
    #[error("point {0} lies on no central component")]
    NotOnCentralComponent(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn bound(what: &str, value: usize, bound: usize) -> Self {
        Error::BoundExceeded { what: what.to_string(), value, bound }
    }
}
