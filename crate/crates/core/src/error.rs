use thiserror::Error;

use crate::multivector::Multivector;
use crate::signature::Signature;

pub type Result<T, E = GaError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum GaError {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    /// The determinant is below the singularity threshold. The adjugate is
    /// still returned so callers can inspect it.
    #[error("multivector is not invertible (det = {det:e})")]
    NonInvertible { adjugate: Multivector, det: f64 },

    #[error("determinant norm undefined for negative determinant {det:e}")]
    NormUndefined { det: f64 },

    #[error("center element {a_s} + {a_i}*I has no isolated square root in {sig}")]
    NoIsolatedRoot { a_s: f64, a_i: f64, sig: Signature },

    #[error("input mixes grades: {0}")]
    MixedGradeInput(String),

    #[error("{what} is not defined in {sig} (I^2 = +1); use the series evaluation instead")]
    UnsupportedSignature { what: &'static str, sig: Signature },

    #[error("series order {requested} exceeds the precomputed coefficient table (maximum {max})")]
    SeriesOrder { requested: usize, max: usize },

    #[error("series needs at least one term")]
    EmptySeries,

    #[error("grade {0} out of range 0..=3")]
    GradeOutOfRange(usize),

    #[error("unknown remap table `{0}`")]
    UnknownRemap(String),

    #[error("remap table {table} does not apply to {sig}")]
    RemapDomain { table: &'static str, sig: Signature },

    #[error("spinor is not normalized: psi * rev(psi) deviates from 1 by {0:e}")]
    NotNormalized(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}
