use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A named group or twist condition does not hold.
    #[error("{condition} violated")]
    Validation { condition: String },

    /// The twist is not an automorphism; the witness pair is given in
    /// normal-form coordinates.
    #[error("twist is not an automorphism: {reason} (witness {left} , {right})")]
    NotAutomorphism {
        reason: String,
        left: String,
        right: String,
    },

    /// The composite of two coboundaries is nonzero.
    #[error("not a complex: (d_out * d_in)[{row}][{col}] = {value}")]
    NotAComplex { row: usize, col: usize, value: String },

    #[error("capacity exceeded: {what} (size {size}, limit {limit})")]
    Capacity {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An operation was asked of a group family it does not apply to.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A cohomology class used a symbol outside the ring of the group.
    #[error("class error: {0}")]
    Class(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(condition: impl Into<String>) -> Self {
        Error::Validation {
            condition: condition.into(),
        }
    }
}
