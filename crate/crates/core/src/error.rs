//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the public operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Multi-indices or polynomials of differing variable counts were mixed.
    DimensionMismatch { expected: usize, found: usize },
    /// Coefficients of different fields were mixed.
    FieldMismatch,
    /// The commutation system fails the solvable-type condition at (i, j):
    /// either c_ij = 0 or lm(p_ij) is not strictly below x_i x_j.
    NotSolvable { i: usize, j: usize, reason: String },
    /// The operation requires a quadric algebra (all deg p_ij <= 2).
    NotQuadric,
    /// The operation requires a homogeneous algebra or homogeneous input.
    NotHomogeneous,
    /// The given set is not a Gröbner basis (with an offending pair).
    NotGroebner { i: usize, j: usize },
    /// The given decomposition is not d-standard for any d.
    NotStandard,
    /// A shift target below the current standard degree was requested.
    ShiftBelowStandard { have: usize, requested: usize },
    /// A nonzero input was required.
    ZeroInput,
    /// Variable index out of range.
    VarOutOfRange { index: usize, nvars: usize },
    /// Polynomial string could not be parsed.
    Parse { position: usize, message: String },
    /// The bounded weight-vector search was exhausted (should be impossible
    /// for a valid monomial ordering).
    WeightSearchExhausted,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
            Error::FieldMismatch => write!(f, "coefficient field mismatch"),
            Error::NotSolvable { i, j, reason } => {
                write!(f, "commutation system is not of solvable type at pair ({i}, {j}): {reason}")
            }
            Error::NotQuadric => write!(f, "operation requires a quadric algebra"),
            Error::NotHomogeneous => write!(f, "operation requires homogeneous input"),
            Error::NotGroebner { i, j } => {
                write!(f, "not a Gröbner basis: S-polynomial of pair ({i}, {j}) does not reduce to zero")
            }
            Error::NotStandard => write!(f, "cone decomposition is not d-standard for any d"),
            Error::ShiftBelowStandard { have, requested } => {
                write!(f, "cannot shift a {have}-standard decomposition down to {requested}")
            }
            Error::ZeroInput => write!(f, "nonzero input required"),
            Error::VarOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::WeightSearchExhausted => {
                write!(f, "weight-vector search exhausted its norm bound")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
