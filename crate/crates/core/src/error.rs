use core::fmt;

/// Errors raised by the numerical operations in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Matrix or vector dimensions do not match the operation's contract.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// An entry was NaN or infinite.
    NonFinite,
    /// A 1-based index fell outside its valid range.
    IndexOutOfRange { index: usize, len: usize },
    /// Input was expected to be Hermitian within tolerance.
    NotHermitian,
    /// Input was expected to be positive (semi-)definite.
    NotPositiveSemidefinite,
    /// Input density matrix does not have unit trace.
    NotUnitTrace { trace: f64 },
    /// A state required to be normalized was not.
    NotNormalized { norm: f64 },
    /// The all-zero state carries no analyzable structure.
    ZeroState,
    /// Gram matrices of the two inputs differ beyond tolerance, so no
    /// unitary can relate them.
    GramMismatch { distance: f64 },
    /// An iterative decomposition failed to converge within its sweep cap.
    NoConvergence,
    /// Frame length exceeds the cap of a factorial-cost operation.
    FrameTooLong { len: usize, cap: usize },
    /// The supplied map is not a contraction (operator norm > 1).
    NotContraction { norm: f64 },
    /// Matrix is singular or numerically indefinite where strict
    /// definiteness is required.
    NotPositiveDefinite,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            CoreError::NonFinite => write!(f, "non-finite entry (NaN or Inf)"),
            CoreError::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 1..={len}")
            }
            CoreError::NotHermitian => write!(f, "matrix is not Hermitian within tolerance"),
            CoreError::NotPositiveSemidefinite => {
                write!(f, "matrix is not positive semi-definite")
            }
            CoreError::NotUnitTrace { trace } => {
                write!(f, "density matrix trace is {trace}, expected 1")
            }
            CoreError::NotNormalized { norm } => {
                write!(f, "state norm is {norm}, expected 1")
            }
            CoreError::ZeroState => write!(f, "zero state is not analyzable"),
            CoreError::GramMismatch { distance } => {
                write!(f, "Gram matrices differ by {distance} in Frobenius norm")
            }
            CoreError::NoConvergence => write!(f, "iteration cap reached without convergence"),
            CoreError::FrameTooLong { len, cap } => {
                write!(f, "frame length {len} exceeds cap {cap}")
            }
            CoreError::NotContraction { norm } => {
                write!(f, "operator norm {norm} exceeds 1")
            }
            CoreError::NotPositiveDefinite => {
                write!(f, "matrix is not strictly positive definite")
            }
        }
    }
}

impl core::error::Error for CoreError {}
