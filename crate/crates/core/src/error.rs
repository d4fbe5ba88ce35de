use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {what} (limit {limit}, requested {requested})")]
    CapacityExceeded {
        what: &'static str,
        limit: u64,
        requested: u64,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("eigensolver did not converge after {rotations} rotations (off-diagonal norm {off_norm:e})")]
    NoConvergence { rotations: usize, off_norm: f64 },

    #[error("least eigenvalue has multiplicity {multiplicity}, a simple eigenvalue is required")]
    DegenerateSpectrum { multiplicity: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
