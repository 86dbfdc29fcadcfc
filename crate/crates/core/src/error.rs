use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Infeasibility is never an error: solvers report it through their return
/// types. Errors are reserved for malformed input and exhausted resources.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("resource cap exceeded: {what} ({count} > {cap})")]
    ResourceCap {
        what: &'static str,
        count: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
