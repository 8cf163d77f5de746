use std::fmt;

use crate::lie::ValidationReport;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subalgebra {name} is not closed under the bracket: {witness}")]
    InvalidSubalgebra { name: String, witness: String },

    #[error("subspace is not a polarization of the functional")]
    NotPolarization,

    #[error("character condition fails: the functional does not vanish on [p, p]")]
    NotCharacter,

    #[error("invalid Lie algebra:\n{0}")]
    InvalidAlgebra(ValidationReport),

    #[error("invalid filtration:\n{0}")]
    InvalidFiltration(ValidationReport),

    #[error("module element does not belong to this module ({0})")]
    ModuleMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Wraps a rendered list of lines so it prints one item per line.
pub(crate) struct Lines<'a, T>(pub &'a [T]);

impl<T: fmt::Display> fmt::Display for Lines<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {item}")?;
        }
        Ok(())
    }
}
