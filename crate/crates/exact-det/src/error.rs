//! Error type shared by the ring, determinant and modular layers.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Checked machine-word arithmetic overflowed.
    Overflow,
    /// An exact division left a nonzero remainder. On valid inputs this
    /// signals an internal bug, never a property of the data.
    InexactDivision,
    DivisionByZero,
    /// Two polynomial operands disagree on variable count.
    VarMismatch { left: usize, right: usize },
    /// Variable index out of range for a polynomial operation.
    VarIndex { index: usize, vars: usize },
    NotSquare { rows: usize, cols: usize },
    EmptyMatrix,
    /// Rectangular condensation needs at least as many columns as rows.
    ColumnsBelowRows { rows: usize, cols: usize },
    /// Cofactor oracle refused a matrix above its factorial-cost guard.
    OracleLimit { n: usize, limit: usize },
    NotPrime(u64),
    ModulusTooSmall(u64),
    BadParameter(String),
    /// The prime pool ran out before the planned product cleared the bound.
    PoolExhausted,
    NonCoprimeModuli,
    /// Two interpolation points coincide modulo the working prime.
    CoincidentPoints,
    /// A reconstructed value failed re-reduction against its residues.
    ReconstructionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "machine-word arithmetic overflow"),
            Error::InexactDivision => write!(f, "exact division left a nonzero remainder"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::VarMismatch { left, right } => {
                write!(f, "polynomial variable counts differ: {left} vs {right}")
            }
            Error::VarIndex { index, vars } => {
                write!(f, "variable index {index} out of range for {vars} variables")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::EmptyMatrix => write!(f, "matrix has no rows"),
            Error::ColumnsBelowRows { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected cols >= rows")
            }
            Error::OracleLimit { n, limit } => {
                write!(f, "oracle limited to n <= {limit}, got n = {n}")
            }
            Error::NotPrime(m) => write!(f, "{m} is not prime"),
            Error::ModulusTooSmall(m) => write!(f, "modulus {m} is below the minimum of 3"),
            Error::BadParameter(msg) => write!(f, "{msg}"),
            Error::PoolExhausted => write!(f, "prime pool exhausted before clearing the bound"),
            Error::NonCoprimeModuli => write!(f, "moduli are not pairwise coprime"),
            Error::CoincidentPoints => write!(f, "interpolation points coincide modulo the prime"),
            Error::ReconstructionMismatch => {
                write!(f, "reconstructed value disagrees with its residues")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
