use thiserror::Error;

/// Errors surfaced by the phase-space, state and channel constructors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension {0}: supported dimensions are 2, 3 and 4")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("assignment is not a bijection: {0}")]
    NonBijectiveAssignment(String),

    #[error("matrix is not Hermitian (deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("Bloch vector norm {norm:.6} exceeds 1")]
    BlochNormExceeded { norm: f64 },

    #[error("not positive semidefinite: minimum eigenvalue {min_eig:.6e}")]
    NotPsd { min_eig: f64 },

    #[error("negative time t = {0}")]
    NegativeTime(f64),

    #[error("invalid channel parameters: {0}")]
    InvalidParams(String),

    #[error("memory kernel violation at t = {t}: {detail}")]
    KernelViolation { t: f64, detail: String },

    #[error("negative state rank {requested} unavailable: {available} negative state(s) exist for this operator set")]
    NegativeStateUnavailable { requested: usize, available: usize },

    #[error("robustness formula is restricted to prime dimensions 2 and 3 (got {0})")]
    RobustnessDimension(usize),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid Bell label {0:?}")]
    InvalidBellLabel(String),
}
