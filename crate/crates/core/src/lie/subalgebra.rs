use std::collections::HashSet;

use super::filtration::intersect_members;
use super::{Filtration, LieAlgebra};
use crate::error::{check_dim, Error, Result};
use crate::exact::{vector, Matrix, Rational, Subspace, Vector};

/// Subalgebra 𝔥 ⊆ 𝔤 with its own ordered basis (the RREF basis of its space)
/// and the structure constants in that basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subalgebra {
    space: Subspace,
    algebra: LieAlgebra,
}

impl Subalgebra {
    pub fn new(parent: &LieAlgebra, space: Subspace) -> Result<Self> {
        check_dim(parent.dim(), space.ambient_dim())?;
        if !parent.is_subalgebra(&space)? {
            return Err(Error::NotSubalgebra);
        }
        let r = space.dim();
        let mut table = vec![vec![vector::zeros(r); r]; r];
        for i in 0..r {
            for j in 0..r {
                let b = parent.bracket(space.basis().row(i), space.basis().row(j))?;
                table[i][j] = space
                    .coordinates(&b)?
                    .ok_or(Error::Internal("bracket left a closed subspace".into()))?;
            }
        }
        let algebra = LieAlgebra::from_table(local_names(parent, &space), table)?;
        Ok(Self { space, algebra })
    }

    /// The whole algebra as a subalgebra of itself.
    pub fn whole(parent: &LieAlgebra) -> Self {
        Self::new(parent, Subspace::full(parent.dim())).expect("the whole algebra is closed")
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Structure constants in the subalgebra's own basis.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Matrix of the restriction 𝔤* → 𝔥*; its rows are the basis of 𝔥.
    pub fn restriction(&self) -> &Matrix {
        self.space.basis()
    }

    /// Values of a functional on the basis of 𝔥.
    pub fn restrict(&self, f: &[Rational]) -> Result<Vector> {
        self.restriction().mul_vec(f)
    }

    /// Local coordinates to parent coordinates.
    pub fn to_parent(&self, local: &[Rational]) -> Result<Vector> {
        self.space.combine(local)
    }

    pub fn to_local(&self, v: &[Rational]) -> Result<Option<Vector>> {
        self.space.coordinates(v)
    }

    /// Subspace of 𝔥 (local coordinates) mapped into 𝔤.
    pub fn subspace_to_parent(&self, local: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), local.ambient_dim())?;
        let rows: Result<Vec<Vector>> = local.basis_vectors().map(|v| self.to_parent(v)).collect();
        Subspace::span(self.space.ambient_dim(), rows?)
    }

    /// Subspace of 𝔤 contained in 𝔥, in local coordinates.
    pub fn subspace_to_local(&self, s: &Subspace) -> Result<Subspace> {
        let mut rows = Vec::with_capacity(s.dim());
        for v in s.basis_vectors() {
            rows.push(self.to_local(v)?.ok_or(Error::InvalidArgument(
                "subspace is not contained in the subalgebra".into(),
            ))?);
        }
        Subspace::span(self.dim(), rows)
    }

    /// The filtration `𝔤ᵢ ∩ 𝔥` in the subalgebra's coordinates.
    pub fn induced_filtration(&self, s: &Filtration) -> Result<Filtration> {
        let members = intersect_members(s, &self.space)?
            .iter()
            .map(|m| self.subspace_to_local(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Filtration::new(members))
    }
}

/// Parent names for basis vectors that are coordinate vectors, `h1, h2, …`
/// otherwise; falls back to `h1..hr` throughout if that would clash.
fn local_names(parent: &LieAlgebra, space: &Subspace) -> Vec<String> {
    let generic = |i: usize| format!("h{}", i + 1);
    let names: Vec<String> = space
        .basis_vectors()
        .enumerate()
        .map(|(i, row)| match unit_index(row) {
            Some(j) => parent.name(j).to_string(),
            None => generic(i),
        })
        .collect();
    let unique: HashSet<&String> = names.iter().collect();
    if unique.len() == names.len() {
        names
    } else {
        (0..names.len()).map(generic).collect()
    }
}

fn unit_index(row: &[Rational]) -> Option<usize> {
    use num_traits::{One, Zero};
    let mut hit = None;
    for (j, x) in row.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if !x.is_one() || hit.is_some() {
            return None;
        }
        hit = Some(j);
    }
    hit
}
