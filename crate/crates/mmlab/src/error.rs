use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet must have 1..=256 symbols and a positive code length (got kappa={kappa}, ell={ell})")]
    InvalidAlphabet { kappa: u64, ell: u64 },

    #[error("code length {got} does not match expected length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("symbol index {symbol} out of range for an alphabet of {kappa} symbols")]
    SymbolOutOfRange { symbol: u16, kappa: u16 },

    #[error("code space holds {size} codes, above the configured limit of {limit}")]
    SpaceTooLarge { size: u128, limit: u64 },

    #[error("no code is consistent with the recorded feedback")]
    Contradiction,

    #[error("guess {0} was already played")]
    DuplicateGuess(String),

    #[error("cannot parse code {0:?}")]
    InvalidCodeText(String),

    #[error("cannot parse feedback {0:?} (expected the form \"2b1w\")")]
    InvalidFeedbackText(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("statistical test requires non-empty samples")]
    EmptySample,

    #[error("{context}: {source}")]
    Experiment {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Wraps an error with experiment context (strategy, secret, repetition).
    pub fn with_context(self, context: impl Into<String>) -> Error {
        Error::Experiment {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
