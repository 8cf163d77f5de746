//! PBW normal ordering in U(𝔤) and induced modules
//! `U(𝔤) ⊗_{U(p)} K_χ` with their monomial bases.

mod basis;
mod module;
mod monomial;
mod slice;
mod uea;

pub use basis::AdaptedBasis;
pub use module::{InducedModule, ModuleElement};
pub use monomial::Monomial;
pub use slice::{bounded_submodule, highest_vectors, module_filtration_slice, power_line, t_degree, Slice, TDegree};
pub use uea::{normal_order, UeaElement};
