use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates an operation's precondition.
    #[error("validation error: {0}")]
    Validation(String),
    /// A bigraded character is not the character of an sl2-representation.
    #[error("not a character: {0}")]
    NotACharacter(String),
    /// A Grothendieck-group computation produced a class with no sl2 realization.
    #[error("inconsistent class: {0}")]
    InconsistentClass(String),
    /// Elements built over different Chevalley bases were combined.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}
