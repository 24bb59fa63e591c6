use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Variants are grouped by how a caller should react; [`Error::class`] maps
/// them onto the stable categories the command-line front end turns into exit
/// codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid host: {0}")]
    InvalidHost(String),

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("invalid split recipe: {0}")]
    InvalidRecipe(String),

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    #[error("target list has {targets} entries but the coloring uses {colors} colors")]
    ArityMismatch { targets: usize, colors: usize },

    #[error("unknown formula or construction id `{0}`")]
    UnknownId(String),

    #[error("missing parameter `{param}` for `{id}`")]
    MissingParam { id: String, param: String },

    #[error("inconsistent parameters for `{id}`: {detail}")]
    InconsistentParams { id: String, detail: String },

    #[error("precondition failed for `{id}`: {}", failed.join("; "))]
    Precondition { id: String, failed: Vec<String> },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),
}

/// Coarse error categories with stable meaning for scripting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input: parse failures, precondition failures, invalid parameters.
    Input,
    /// A configured search or enumeration budget was exceeded.
    Budget,
    /// A coloring failed verification.
    Verification,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Budget(_) => ErrorClass::Budget,
            Error::Verification(_) => ErrorClass::Verification,
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
