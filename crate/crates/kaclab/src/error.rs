use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An argument fell outside a function's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numeric procedure failed (factorization, non-PSD input, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Adaptive quadrature could not reach the requested tolerance within
    /// its evaluation budget. Carries the best estimate and its error bound.
    #[error("quadrature tolerance not reached: best estimate {best}, error bound {error_bound}")]
    Quadrature { best: f64, error_bound: f64 },

    /// Config file parse failure, with the offending line number.
    #[error("config parse error at line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
