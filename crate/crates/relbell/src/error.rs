use crate::minkowski::BETA_MAX;

/// Errors produced by constructors and operations that validate their inputs.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("boost speed {0} is outside [0, {BETA_MAX}]")]
    BetaOutOfRange(f64),

    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),

    #[error("cannot normalize a zero or non-finite vector ({0}, {1}, {2})")]
    DegenerateVector(f64, f64, f64),

    #[error("gamma-matrix index {0} is outside 0..=3")]
    GammaIndex(usize),

    #[error("spin-tensor indices ({0}, {1}) are outside 0..=3")]
    SigmaIndex(usize, usize),

    #[error("closed-form matrix elements are stated for a boost along +z; got direction ({0}, {1}, {2})")]
    RequiresZBoost(f64, f64, f64),

    #[error("velocity magnitude {0} must be strictly below 1")]
    SuperluminalVelocity(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
