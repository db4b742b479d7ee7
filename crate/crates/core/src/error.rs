use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),

    #[error("four-momentum is off shell: p·p = {square}, expected m² = {mass_sq}")]
    OffShell { square: f64, mass_sq: f64 },

    #[error("rotation axis must be non-zero")]
    ZeroAxis,

    #[error("tensor is not antisymmetric (max |T + Tᵀ| = {0:e})")]
    NotAntisymmetric(f64),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not a Lorentz transformation (residual {0:e})")]
    NotLorentz(f64),

    #[error("matrix is not block diagonal in the chiral basis (off-block norm {0:e})")]
    NotBlockDiagonal(f64),

    #[error("little-group blocks are inconsistent: {0}")]
    BadLittleGroup(String),

    #[error("momentum {0:?} is not on the grid")]
    OffGrid([f64; 3]),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
