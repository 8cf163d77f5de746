//! Lie algebras by structure constants, filtrations by ideals, subalgebras
//! with induced filtrations, and the product `𝔤 × 𝔤` with `s × s`.

mod algebra;
mod filtration;
mod product;
mod report;
mod subalgebra;

use num_traits::{One, Signed, Zero};

pub use algebra::LieAlgebra;
pub use filtration::Filtration;
pub use product::{diagonal_embedding, product_algebra, Homomorphism};
pub use report::{ValidationReport, Violation};
pub use subalgebra::Subalgebra;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A solvable Lie algebra together with a validated filtration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilteredAlgebra {
    algebra: LieAlgebra,
    filtration: Filtration,
}

impl FilteredAlgebra {
    pub fn new(algebra: LieAlgebra, filtration: Filtration) -> Result<Self> {
        let report = algebra.validate();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        let report = filtration.validate(&algebra);
        if !report.is_valid() {
            return Err(Error::InvalidFiltration(report));
        }
        Ok(Self {
            algebra,
            filtration,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(𝔤 × 𝔤, s × s)`.
    pub fn product(&self) -> FilteredAlgebra {
        let (algebra, filtration) = product_algebra(&self.algebra, &self.filtration);
        Self {
            algebra,
            filtration,
        }
    }

    /// A subalgebra together with its induced filtration, as a filtered
    /// algebra in its own coordinates.
    pub fn restrict_to(&self, sub: &Subalgebra) -> Result<FilteredAlgebra> {
        let filtration = sub.induced_filtration(&self.filtration)?;
        FilteredAlgebra::new(sub.algebra().clone(), filtration)
    }
}

/// Renders `Σ cᵢ eᵢ` as `2*x - 1/2*y`; the zero vector renders as `0`.
pub fn format_linear(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = names.get(i).map_or_else(|| format!("e{i}"), Clone::clone);
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn linear_rendering() {
        let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        assert_eq!(format_linear(&names, &[int(2), rat(-1, 2), int(0)]), "2*x - 1/2*y");
        assert_eq!(format_linear(&names, &[int(0), int(0), int(-1)]), "-z");
        assert_eq!(format_linear(&names, &[int(0), int(0), int(0)]), "0");
    }
}
