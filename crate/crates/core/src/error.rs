use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A group presentation or element violates the representation rules.
    #[error("invalid group data: {0}")]
    Group(String),

    /// An argument lies outside the domain an operation is defined on.
    #[error("{0}")]
    Domain(String),

    /// The stems/so-class data file is malformed.
    #[error("stems table, line {line}: {message}")]
    Table { line: usize, message: String },

    /// Two order facts cannot both hold.
    #[error("inconsistent order facts: {0}")]
    Inconsistent(String),

    /// A stable stem needed for a decision is not in the loaded table.
    #[error("stems table has no entry for stem {0}; the verdict would need it")]
    MissingStem(i64),
}

impl Error {
    pub(crate) fn table(line: usize, message: impl Into<String>) -> Self {
        Error::Table { line, message: message.into() }
    }
}
