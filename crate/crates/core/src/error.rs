use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised while building or evaluating operators and diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Shape parameter is not a finite positive number.
    InvalidShapeParameter(f64),
    /// Fewer nodes than the operation needs.
    TooFewNodes { required: usize, found: usize },
    /// Nodes `index - 1` and `index` are not strictly increasing.
    UnsortedNodes { index: usize },
    /// Two nodes share the same abscissa.
    DuplicateNode { index: usize, value: f64 },
    /// A node or data value is NaN or infinite.
    NonFinite { what: &'static str, index: usize },
    /// Node and value arrays differ in length.
    LengthMismatch { nodes: usize, values: usize },
    /// `|x - x_j|` has no derivative at its center.
    NonDifferentiablePoint { x: f64 },
    /// The operation is not defined for the `|x|` kernel.
    UnsupportedForAbs(&'static str),
    /// The point lies outside the interval where the operation is valid.
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    /// Input outside the mathematical domain (e.g. logarithm of a nonpositive number).
    Domain(&'static str),
    /// A root bracket does not enclose a sign change.
    InvalidBracket { lo: f64, hi: f64 },
    /// Invalid uniform-grid request.
    InvalidGrid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidShapeParameter(c) => {
                write!(f, "shape parameter must be finite and > 0, got {c}")
            }
            Error::TooFewNodes { required, found } => {
                write!(f, "need at least {required} nodes, found {found}")
            }
            Error::UnsortedNodes { index } => {
                write!(f, "nodes are not increasing at index {index}")
            }
            Error::DuplicateNode { index, value } => {
                write!(f, "duplicate node {value} at index {index}")
            }
            Error::NonFinite { what, index } => write!(f, "non-finite {what} at index {index}"),
            Error::LengthMismatch { nodes, values } => {
                write!(f, "{nodes} nodes but {values} values")
            }
            Error::NonDifferentiablePoint { x } => {
                write!(f, "|x - x_j| is not differentiable at x = {x}")
            }
            Error::UnsupportedForAbs(op) => write!(f, "{op} is not supported for the |x| kernel"),
            Error::OutOfDomain { x, lo, hi } => write!(f, "x = {x} outside [{lo}, {hi}]"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidBracket { lo, hi } => {
                write!(f, "no sign change on bracket [{lo}, {hi}]")
            }
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
