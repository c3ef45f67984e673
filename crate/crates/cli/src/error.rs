use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at offset {pos}")]
    UnknownSymbol { name: String, pos: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("eps squared: expressions may be at most linear in eps")]
    EpsSquared,
    #[error("{0}")]
    Core(tanreg_core::Error),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
}

impl From<tanreg_core::Error> for CliError {
    fn from(e: tanreg_core::Error) -> Self {
        match e {
            tanreg_core::Error::DivisionByZero => CliError::DivisionByZero,
            other => CliError::Core(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
