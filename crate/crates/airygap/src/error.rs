use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of the supported domain: {0}")]
    Domain(String),

    #[error("iteration failed to converge: {0}")]
    Convergence(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("linear system is numerically singular: {0}")]
    SingularSystem(String),

    #[error("tolerance exceeded: {0}")]
    Tolerance(String),

    #[error("solution blew up during integration: {0}")]
    PoleEncountered(String),

    #[error("asymptotic anchoring unstable: {0}")]
    BoundaryMismatch(String),

    #[error("matrix too ill-conditioned: {0}")]
    Conditioning(String),
}

pub type Result<T> = std::result::Result<T, Error>;
