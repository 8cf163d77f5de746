//! Exact classification of irreducible representations of solvable Lie
//! algebras with filtrations.
//!
//! The layers build on each other:
//!
//! * [`exact`]: rational vectors, matrices, canonical (affine) subspaces;
//! * [`lie`]: structure constants, filtrations, subalgebras, products;
//! * [`polar`]: stabilizers, Vergne polarizations and the character θ;
//! * [`pbw`]: PBW normal ordering and induced modules `M(f)`;
//! * [`classes`]: equivalence classes in 𝔤* and spectra of induced,
//!   restricted and tensor-product modules;
//! * [`problem`], [`random`], [`checks`]: the text format, random
//!   instance generation and the property suites driven by the CLI.

pub mod checks;
pub mod classes;
pub mod error;
pub mod exact;
pub mod lie;
pub mod pbw;
pub mod polar;
pub mod problem;
pub mod random;

pub use classes::RClass;
pub use error::{Error, Result};
pub use exact::{AffineSubspace, Matrix, Rational, Subspace, Vector};
pub use lie::{FilteredAlgebra, Filtration, LieAlgebra, Subalgebra};
pub use pbw::{InducedModule, ModuleElement, Monomial};
pub use polar::{Functional, Polarization};
