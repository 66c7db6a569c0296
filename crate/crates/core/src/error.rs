use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller passed an argument outside the documented range
    /// (bad order k, out-of-range index, non-finite input, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A mathematical precondition does not hold for the given data,
    /// e.g. the spectrum is outside the required Garding cone.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The eigenvalue iteration failed to drive the off-diagonal mass
    /// below tolerance within the sweep cap.
    #[error("eigenvalue iteration did not converge within {sweeps} sweeps")]
    EigenNonConvergence { sweeps: usize },

    /// A clustered spectrum where a strict gap was required.
    #[error("degenerate eigenvalue gap: {0}")]
    DegenerateGap(String),

    /// An operation restricted to one proof branch was called on data
    /// from the other branch.
    #[error("branch condition not met: {0}")]
    BranchCondition(String),

    /// Rejection sampling gave up; indicates a profile bug, not bad luck.
    #[error("cone sampler exhausted {attempts} attempts (profile {profile})")]
    SamplerExhausted { profile: String, attempts: usize },

    /// Invalid run configuration (CLI exit code 2).
    #[error("config error: {0}")]
    Config(String),

    /// Malformed or inconsistent data files / fields (CLI exit code 6).
    #[error("data error: {0}")]
    Data(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
