//! Error type shared by every module of the crate.

use core::fmt;

use crate::rational::Rational;

/// Convenience alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when building or combining symmetry data.
///
/// Indices carried by variants are 1-based, matching every external surface.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands (or an operand and a vector) have different dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// The dimension is below the minimum the operation supports.
    DimensionTooSmall { n: usize, min: usize },
    /// One-line notation that is not a bijection of `{1..n}`.
    InvalidPermutation,
    /// A scale `a_i` is zero.
    ZeroScale { index: usize },
    /// The scales do not multiply to exactly one.
    UnitProductViolation { product: Rational },
    /// Even `n` with a negative product under the root.
    NegativeRadicand,
    /// A chart coordinate or group entry is zero.
    ZeroCoordinate { index: usize },
    /// A Lie algebra element whose trace is not zero.
    TraceNotZero,
    /// A diagonal group element whose entries are not all unit-product.
    NotUnitDeterminant,
    /// The logarithm was asked for outside the all-positive component.
    NotIdentityComponent { index: usize },
    /// Basis index outside `1..=n-1`.
    IndexOutOfRange { index: usize, n: usize },
    /// Rows of unequal length, or a row count different from the row length.
    NotSquare,
    /// A row without exactly one nonzero entry, or two rows sharing a column.
    NotMonomial { row: usize },
    /// The enumeration cap was exceeded.
    DimensionCapExceeded { n: usize, cap: usize },
    /// The oracle was asked for zero trials.
    InvalidTrials,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DimensionTooSmall { n, min } => {
                write!(f, "dimension {n} is below the minimum {min}")
            }
            Error::InvalidPermutation => f.write_str("not a permutation of 1..n"),
            Error::ZeroScale { index } => write!(f, "scale a_{index} is zero"),
            Error::UnitProductViolation { product } => {
                write!(f, "scales multiply to {product}, expected 1")
            }
            Error::NegativeRadicand => f.write_str("negative product under an even root"),
            Error::ZeroCoordinate { index } => write!(f, "coordinate {index} is zero"),
            Error::TraceNotZero => f.write_str("trace is not zero"),
            Error::NotUnitDeterminant => f.write_str("diagonal entries do not multiply to 1"),
            Error::NotIdentityComponent { index } => {
                write!(f, "entry {index} is not positive; log is defined on the identity component only")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "basis index {index} out of range 1..={}", n.saturating_sub(1))
            }
            Error::NotSquare => f.write_str("matrix is not square"),
            Error::NotMonomial { row } => {
                write!(f, "row {row} breaks the one-nonzero-per-row-and-column pattern")
            }
            Error::DimensionCapExceeded { n, cap } => {
                write!(f, "dimension {n} exceeds the enumeration cap {cap}")
            }
            Error::InvalidTrials => f.write_str("trials must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
