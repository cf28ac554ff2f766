//! Plane-wave solutions of the pseudotachyon wave equation `(p̸ − mγ⁵)u = 0`
//! alongside its bradyon (`p̸ − m`) and luxon (`p̸`) counterparts.
//!
//! Units are `ħ = c = 1`; the metric is `diag(+1, −1, −1, −1)`.
//!
//! ```
//! use ptdirac::{amplitude, EnergySign, Helicity, PlaneWaveSpec, Representation, Species};
//!
//! let spec = PlaneWaveSpec::new(
//!     Species::Pseudotachyon,
//!     EnergySign::Positive,
//!     [0.0, 0.0, 5.0],
//!     3.0,
//!     Helicity::Plus,
//!     Representation::Standard,
//! )?;
//! let u = amplitude(&spec)?;
//! assert!((u.norm_sqr() - 10.0).abs() < 1e-12);
//! # Ok::<(), ptdirac::Error>(())
//! ```

pub mod cli;
pub mod clifford;
pub mod error;
pub mod format;
pub mod kinematics;
pub mod observables;
pub mod spinors;
pub mod symmetries;
pub mod verify;

pub use clifford::{gamma_set, proportionality_defect, Bispinor, Complex, GammaSet, Matrix4, Representation};
pub use error::{Error, Result};
pub use kinematics::{FourVector, MassShell, Species, Speeds};
pub use spinors::{amplitude, EnergySign, Helicity, NormalizationContext, PlaneWaveSpec};
