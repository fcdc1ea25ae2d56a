use thiserror::Error;

/// Errors raised by the certified-arithmetic and reduction layers.
///
/// `PrecisionInsufficient` is the important one: it means a discrete
/// decision (a continued-fraction quotient, a sign of epsilon, a
/// comparison against an integer bound) could not be certified with the
/// required margin at the working precision. Callers are expected to
/// retry at higher precision rather than trust an uncertified answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precision insufficient to certify {context} at {digits} digits")]
    PrecisionInsufficient { context: String, digits: u32 },

    #[error("working precision {0} is below the 50-digit floor")]
    PrecisionTooLow(u32),

    #[error("convergent index {index} outside the {available} certified quotients")]
    IndexOutOfRange { index: usize, available: usize },

    #[error("no convergent with denominator above {bound} among {available} certified quotients")]
    BoundOutOfRange { bound: String, available: usize },

    #[error("no convergent gave a positive epsilon for {context} up to depth {depth}")]
    NoPositiveEpsilon { context: String, depth: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
