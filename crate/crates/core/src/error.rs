use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied arguments that the operation does not accept.
    #[error("usage error: {0}")]
    Usage(String),
    /// An exact division left a nonzero remainder.
    #[error("division is not exact, remainder {remainder}")]
    NotDivisible { remainder: String },
    /// An index or size parameter is outside the admissible range.
    #[error("out of range: {0}")]
    Range(String),
    /// The input object violates the invariants of its domain type.
    #[error("domain error: {0}")]
    Domain(String),
    /// An exhaustive enumeration would exceed the configured cap.
    #[error("enumeration of size n = {n} exceeds the cap {cap}")]
    Resource { n: usize, cap: usize },
    /// A mathematical precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The even/odd split has an identically vanishing part.
    #[error("Hermite-Biehler criterion inapplicable: {0}")]
    TheoremInapplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the failure stems from caller input rather than an internal defect.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Usage(_) | Error::Range(_) | Error::Domain(_) | Error::Resource { .. }
        )
    }
}
