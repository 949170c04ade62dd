use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("universe of {size} items exceeds the brute-force limit of {limit}")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("closure undefined: itemset has an empty extent under the mask")]
    EmptyExtent,
}

pub type Result<T> = std::result::Result<T, Error>;
