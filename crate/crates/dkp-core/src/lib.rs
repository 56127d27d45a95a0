//! Exact-arithmetic toolkit for Duffin-Kemmer-Petiau (DKP) algebra
//! representations.
//!
//! The crate constructs Clifford and DKP representations over the
//! Gaussian rationals, builds the Fujiwara sector projectors, decides
//! reducibility through commutant computations, decomposes reducible
//! representations into invariant blocks with explicit change-of-basis
//! and intertwiner certificates, and verifies the plane-wave field
//! equations — all with zero floating point, so every passing check is
//! an identity at the tested instance.
//!
//! Entry points:
//! - [`reps`]: representation builders and algebra verification
//! - [`projectors`]: sector projectors and covariance checks
//! - [`analysis`]: commutant, decomposition, intertwiners
//! - [`planewave`]: dispersion, solution spaces, field-equation checks
//! - [`matrix`] / [`gaussian`]: the exact linear-algebra substrate

pub mod analysis;
pub mod error;
pub mod gaussian;
pub mod json;
pub mod matrix;
pub mod planewave;
pub mod projectors;
pub mod report;
pub mod reps;

pub use error::{AnalysisError, LinAlgError, PlaneWaveError, ProjectorError, RepError};
pub use gaussian::{GaussianRational, Rational};
pub use matrix::Matrix;
pub use report::{Check, CheckStatus, Report};
pub use reps::{Metric, Representation};
