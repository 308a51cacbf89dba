use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two shapes that must agree do not.
    DimensionMismatch { expected: usize, found: usize },
    NotSquare { rows: usize, cols: usize },
    NonFinite,
    UnknownLabel(String),
    DuplicateLabel(String),
    /// A subsystem dimension below 2.
    InvalidSubsystemDim(usize),
    /// Max absolute deviation of `m - m†`.
    NotHermitian(f64),
    /// Most negative eigenvalue of a matrix required to be PSD.
    NegativeEigenvalue(f64),
    /// An eigenvalue that should be real has this imaginary part.
    ComplexEigenvalue(f64),
    NoConvergence,
    /// Deviation of a norm or trace from one.
    NotNormalized(f64),
    /// Overlap magnitude between vectors required to be orthogonal.
    NotOrthogonal(f64),
    OutOfRange { what: &'static str, value: f64 },
    /// A cloning transform violates one of the splitting constraints.
    ConstraintViolation { constraint: &'static str, residual: f64 },
    /// The two-party reduction is not of Werner form; max off-Werner deviation.
    NotWerner(f64),
    /// Simulated and closed-form results disagree by this much.
    ClosedFormMismatch(f64),
    InvalidBranchCount(usize),
    InvalidTrials,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square: {rows}x{cols}"),
            Error::NonFinite => f.write_str("matrix contains NaN or infinite entries"),
            Error::UnknownLabel(l) => write!(f, "unknown subsystem label `{l}`"),
            Error::DuplicateLabel(l) => write!(f, "duplicate subsystem label `{l}`"),
            Error::InvalidSubsystemDim(d) => write!(f, "subsystem dimension {d} is below 2"),
            Error::NotHermitian(dev) => write!(f, "matrix is not Hermitian (deviation {dev:e})"),
            Error::NegativeEigenvalue(ev) => {
                write!(f, "matrix is not positive semidefinite (eigenvalue {ev:e})")
            }
            Error::ComplexEigenvalue(im) => {
                write!(f, "expected a real spectrum, found imaginary part {im:e}")
            }
            Error::NoConvergence => f.write_str("eigenvalue iteration did not converge"),
            Error::NotNormalized(dev) => write!(f, "not normalized (deviation {dev:e})"),
            Error::NotOrthogonal(ov) => write!(f, "vectors are not orthogonal (overlap {ov:e})"),
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::ConstraintViolation { constraint, residual } => {
                write!(f, "constraint {constraint} violated (residual {residual:e})")
            }
            Error::NotWerner(dev) => write!(f, "reduced state is not a Werner state (deviation {dev:e})"),
            Error::ClosedFormMismatch(dev) => {
                write!(f, "simulation disagrees with closed form (deviation {dev:e})")
            }
            Error::InvalidBranchCount(n) => write!(f, "number of branches must be at least 2, got {n}"),
            Error::InvalidTrials => f.write_str("number of trials must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
