use thiserror::Error;

/// Errors produced by the kinematics toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("boost speed {speed} is not below the speed of light")]
    Superluminal { speed: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("cycle average requested on a non-periodic envelope ({0})")]
    NonPeriodicEnvelope(&'static str),

    #[error("momentum is off the free mass shell: p.p = {invariant}, expected {expected}")]
    OffShell { invariant: f64, expected: f64 },

    #[error("light-front component k.p vanishes; the particle co-moves with the wave")]
    SingularLightFront,

    #[error("vector potential does not vanish at the start phase {phase} (|A| = {magnitude})")]
    FieldNotVanishing { phase: f64, magnitude: f64 },

    #[error("trajectory covers {available} plateau cycles, {requested} requested")]
    InsufficientCoverage { requested: usize, available: usize },

    #[error("nonrelativistic regime violated: eE0/(m omega c) = {0}")]
    RegimeViolation(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
