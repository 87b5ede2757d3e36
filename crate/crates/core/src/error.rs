//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Configuration file could not be parsed.
    #[error("config parse error: {0}")]
    ConfigParse(String),

    /// A required configuration key is missing.
    #[error("missing config key `{key}`")]
    MissingKey { key: String },

    /// A configuration value violates an invariant.
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    /// Requested grid range is empty or inverted.
    #[error("degenerate grid range [{lo}, {hi}] for {axis}")]
    DegenerateRange { axis: String, lo: f64, hi: f64 },

    /// Grid or window does not cover the support of the sampled function.
    #[error("coverage failure for {what}: {detail}")]
    Coverage { what: String, detail: String },

    /// Wavelength outside the validity range of a dispersion model.
    #[error("wavelength {lambda:.4e} m outside valid range [{lo:.4e}, {hi:.4e}] m")]
    OutOfDispersionRange { lambda: f64, lo: f64, hi: f64 },

    /// No phase-matching solution was found in the scanned interval.
    #[error("no phase-matching solution: {0}")]
    NoPhaseMatch(String),

    /// Unknown dispersion model identifier.
    #[error("unknown dispersion id `{0}`")]
    UnknownDispersionId(String),

    /// Azimuthal harmonic truncation is too aggressive.
    #[error("m_max too small: relative harmonic energy {energy:.3e} at |m| = {m_max} exceeds {limit:.1e}")]
    MmaxTooSmall { m_max: usize, energy: f64, limit: f64 },

    /// Parametric gain argument exceeds the numeric range of cosh/sinh.
    #[error("gain out of numeric range: K*L = {arg:.3e} > {limit}")]
    GainOutOfRange { arg: f64, limit: f64 },

    /// Singular value decomposition failed to converge.
    #[error("SVD failed: {0}")]
    SvdFailure(String),

    /// Kernel entries are not finite.
    #[error("non-finite kernel entry at ({row}, {col})")]
    NonFiniteKernel { row: usize, col: usize },

    /// A correlation cut carries no mass, so no width is defined.
    #[error("zero-mass correlation cut")]
    ZeroMassCut,

    /// A fit did not converge.
    #[error("fit failed: {0}")]
    FitFailure(String),

    /// Vacuum state: quantifiers are undefined.
    #[error("vacuum gain state: all V = 0")]
    VacuumState,
}

pub type Result<T> = std::result::Result<T, Error>;
