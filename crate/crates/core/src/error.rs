use thiserror::Error;

/// Errors raised when a requested physical configuration does not exist
/// or an argument lies outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A pseudotachyon needs `|p| >= m`; below that no real energy exists.
    #[error("NonPhysicalMomentum: |p| = {k} is below the mass {m}")]
    NonPhysicalMomentum { k: f64, m: f64 },

    #[error("MassNotZero: luxons are massless, got m = {0}")]
    MassNotZero(f64),

    #[error("ZeroMomentum: momentum direction is undefined at |p| = 0")]
    ZeroMomentum,

    /// The `phi`-parameterized pseudotachyon form divides by the energy.
    #[error("TranscendentDivision: the spinor-parameterized form is singular at zero energy")]
    TranscendentDivision,

    #[error("MasslessSpecies: operation divides by the mass and is undefined for luxons")]
    MasslessSpecies,

    #[error("NegativeEnergy: energy must be >= 0, got {0}")]
    NegativeEnergy(f64),

    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Short machine-readable name, the first token of the `Display` form.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPhysicalMomentum { .. } => "NonPhysicalMomentum",
            Error::MassNotZero(_) => "MassNotZero",
            Error::ZeroMomentum => "ZeroMomentum",
            Error::TranscendentDivision => "TranscendentDivision",
            Error::MasslessSpecies => "MasslessSpecies",
            Error::NegativeEnergy(_) => "NegativeEnergy",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
