//! Error type shared by every operation in the crate.

use alloc::string::String;
use core::fmt;

/// Why an operation on a monomial ideal could not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No generators were supplied; the zero ideal has no Newton polyhedron.
    EmptyGenerators,
    /// An exponent vector has the wrong length for the ambient ring.
    DimensionMismatch { expected: usize, got: usize },
    /// The ambient ring must have at least one variable.
    ZeroVariables,
    /// The unit ideal was passed where a proper ideal is required.
    UnitIdeal,
    /// The ideal is not zero-dimensional, so the requested count is infinite.
    NotZeroDimensional,
    /// A generator fails the homogeneity degree the caller asserted.
    NotHomogeneous { expected: u64, got: u64 },
    /// A scale or exponent parameter lies outside its admissible range.
    InvalidParameter(String),
    /// Generators are not an antichain and strict validation was requested.
    NotMinimal,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "empty generator set"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "exponent vector of length {got}, expected {expected}")
            }
            Error::ZeroVariables => write!(f, "ambient ring needs at least one variable"),
            Error::UnitIdeal => write!(f, "the unit ideal is not admissible here"),
            Error::NotZeroDimensional => {
                write!(f, "ideal is not zero-dimensional; the quotient is infinite")
            }
            Error::NotHomogeneous { expected, got } => {
                write!(f, "generator of degree {got} in an ideal asserted homogeneous of degree {expected}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotMinimal => write!(f, "generators are not minimal (strict mode)"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
