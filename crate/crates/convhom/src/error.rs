//! Error taxonomy shared by the library and the CLI.
//!
//! The CLI maps each variant to a process exit code: configuration
//! problems exit with 2, numerical/spectral failures with 3, and failed
//! invariants or verdicts with 1.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration: bad family parameters, malformed config
    /// files, unknown keys, dimension mismatches at construction time.
    #[error("configuration error: {0}")]
    Config(String),

    /// API misuse: mismatched grids, oracle called outside its
    /// applicability, ablation mode that does not apply to the model.
    #[error("usage error: {0}")]
    Usage(String),

    /// Operator assembly produced values violating a certified bound,
    /// which signals truncation or quadrature failure.
    #[error("assembly error: {0}")]
    Assembly(String),

    /// Spectral structure not as required: missing zero mode, eigenvalue
    /// multiplicity near the threshold, gap below threshold.
    #[error("spectral error: {0}")]
    Spectral(String),

    /// Generic numerical failure: non-convergence, degenerate minima.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Linear solver failure (singular or ill-conditioned system).
    #[error("solver error: {0}")]
    Solver(String),

    /// Contour quadrature failed to produce an idempotent projector.
    #[error("contour error: {0}")]
    Contour(String),

    /// A runtime invariant or an acceptance verdict failed.
    #[error("invariant failure: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Usage(_) | Error::Json(_) => 2,
            Error::Invariant(_) => 1,
            Error::Assembly(_)
            | Error::Spectral(_)
            | Error::Numeric(_)
            | Error::Solver(_)
            | Error::Contour(_)
            | Error::Io(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
