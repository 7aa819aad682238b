//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text or schema violation.
    #[error("parse error: {0}")]
    Parse(String),

    /// A numeric or structural precondition was violated.
    #[error("invalid value: {0}")]
    Invalid(String),

    /// Dense construction would exceed the configured qubit cap.
    #[error("dense dimension cap exceeded: {qubits} qubits > cap {cap}")]
    DenseCap { qubits: usize, cap: usize },

    /// A matrix expected to be Hermitian was not, within tolerance.
    #[error("matrix not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    /// A matrix expected to be unitary was not, within tolerance.
    #[error("matrix not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    /// A matrix expected to be a projector was not, within tolerance.
    #[error("matrix not a projector (residual {residual:.3e})")]
    NotProjector { residual: f64 },

    /// A spectral-calculus function was evaluated outside its domain.
    #[error("function undefined on eigenvalue {eigenvalue}: {msg}")]
    FunctionDomain { eigenvalue: f64, msg: String },

    /// The Hoeffding planner asked for more shots than the cap allows.
    /// Carries the required count so callers can fall back or override.
    #[error("planned shot count {required:.3e} exceeds cap {cap}")]
    ShotCapExceeded { required: f64, cap: u64 },

    /// The relative-error wrapper exhausted its round cap.
    #[error("relative estimation did not stop within {cap} rounds (last threshold {last_threshold:.6e}, last estimate {last_estimate:.6e})")]
    RoundCapExceeded {
        cap: u32,
        last_threshold: f64,
        last_estimate: f64,
    },

    /// An operation received a spec of the wrong kind.
    #[error("spec kind mismatch: expected {expected}, got {got}")]
    KindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    /// Sequence lengths disagree.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A randomized property suite found a violated invariant.
    #[error("property failure: {0}")]
    PropertyFailure(String),
}
