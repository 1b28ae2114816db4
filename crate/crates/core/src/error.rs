use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    Resource { what: &'static str, needed: u128, cap: u128 },

    #[error("{what} = {value} is out of range {}", range_text(*.min, *.max))]
    Range { what: &'static str, value: usize, min: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
        if value < min || value > max {
            Err(Error::Range { what, value, min, max })
        } else {
            Ok(())
        }
    }
}

fn range_text(min: usize, max: usize) -> String {
    if max == usize::MAX {
        format!("{min}..")
    } else {
        format!("{min}..={max}")
    }
}
