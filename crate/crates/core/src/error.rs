use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A size parameter exceeded a configured limit.
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    /// An exact identity that must hold by construction failed. This always
    /// indicates a bug upstream of the check.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// An exact computation left the range of its machine-word accumulator.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("root finder did not converge after {iterations} iterations (max residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        partial: Vec<num_complex::Complex64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
