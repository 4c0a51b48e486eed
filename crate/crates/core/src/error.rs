use thiserror::Error;

/// Errors raised by the analysis library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension n={n} outside supported range 1..={max_n}")]
    Dimension { n: u32, max_n: u32 },

    #[error("point {point} out of range for n={n}")]
    PointOutOfRange { point: u64, n: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("not a Boolean spectrum")]
    NotBooleanSpectrum,

    #[error("empty support")]
    EmptySupport,

    #[error("degenerate: zero influence")]
    Degenerate,

    #[error("support too small: |A|={0}, need at least 2")]
    SupportTooSmall(u64),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("invalid search configuration: {0}")]
    SearchConfig(String),

    #[error("exhaustive enumeration limited to n<=4, got n={0}; use sampled mode")]
    UseSampledMode(u32),

    #[error("malformed truth table: {0}")]
    Table(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
