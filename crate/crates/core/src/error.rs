use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("context mismatch: {0}")]
    Context(String),

    #[error("letter {0} is not in the alphabet of this group")]
    Alphabet(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("scale error: {0}")]
    Scale(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("word is not in the kernel of {0}")]
    NotInKernel(String),

    #[error("Schreier generator is trivial")]
    TrivialGenerator,
}
