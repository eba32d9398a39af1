use alloc::string::String;

/// Errors raised by the algebra core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate binomial: both terms are equal")]
    DegenerateBinomial,

    #[error("binomial is not in the toric ideal: its terms have different images")]
    NotInKernel,

    #[error("{resource} budget of {limit} exhausted{}", if *partial { " (partial result discarded)" } else { "" })]
    Budget {
        resource: Resource,
        limit: u64,
        partial: bool,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

/// Which guardrail tripped in a [`Error::Budget`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resource {
    SPairs,
    Monomials,
}

impl core::fmt::Display for Resource {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Resource::SPairs => "S-pair",
            Resource::Monomials => "monomial",
        })
    }
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for guardrail exhaustion (maps to its own exit status in the CLI).
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
