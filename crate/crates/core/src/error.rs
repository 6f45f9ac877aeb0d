use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension_error: {0}")]
    Dimension(String),

    #[error("domain_error: {0}")]
    Domain(String),

    /// A descriptor document failed validation; `field` names the offending key.
    #[error("schema_violation: {field} {reason}")]
    Schema { field: String, reason: String },

    #[error("internal_inconsistency: {0}")]
    Inconsistency(String),

    /// The brute-force oracles refuse inputs beyond their size guards.
    #[error("oracle_refused: {0}")]
    OracleGuard(String),

    #[error("{}: {}: {message}", self.code(), path.display())]
    Io {
        path: PathBuf,
        message: String,
        not_found: bool,
    },
}

impl Error {
    /// Stable machine-readable code, also the prefix of the `Display` output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension_error",
            Error::Domain(_) => "domain_error",
            Error::Schema { .. } => "schema_violation",
            Error::Inconsistency(_) => "internal_inconsistency",
            Error::OracleGuard(_) => "oracle_refused",
            Error::Io {
                not_found: true, ..
            } => "file_not_found",
            Error::Io { .. } => "io_error",
        }
    }

    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
