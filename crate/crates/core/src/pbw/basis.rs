use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exact::{vector, Rational, Subspace, Vector};
use crate::lie::LieAlgebra;

/// Basis `u₀, …, u_{n-1}` of 𝔤 adapted to a subalgebra `p`: first the
/// standard basis vectors at the non-pivot columns of `p` (ascending), then
/// the RREF basis of `p`.
#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    vectors: Vec<Vector>,
    complement: Vec<usize>,
    p: Subspace,
    names: Vec<String>,
    /// `[u_a, u_b]` in adapted coordinates, sparse, at `a * n + b`.
    brackets: Vec<Vec<(usize, Rational)>>,
}

impl AdaptedBasis {
    pub fn new(algebra: &LieAlgebra, p: &Subspace) -> Result<Self> {
        let n = algebra.dim();
        check_dim(n, p.ambient_dim())?;
        let complement = p.non_pivots();
        let mut vectors: Vec<Vector> = complement.iter().map(|&j| vector::unit(n, j)).collect();
        let mut names: Vec<String> = complement.iter().map(|&j| algebra.name(j).to_string()).collect();
        for (r, row) in p.basis_vectors().enumerate() {
            vectors.push(row.to_vec());
            let unit = p.pivots()[r];
            if vector::unit(n, unit).as_slice() == row {
                names.push(algebra.name(unit).to_string());
            } else {
                names.push(format!("p{}", r + 1));
            }
        }
        let mut basis = Self {
            vectors,
            complement,
            p: p.clone(),
            names,
            brackets: Vec::with_capacity(n * n),
        };
        for a in 0..n {
            for b in 0..n {
                let br = algebra.bracket(&basis.vectors[a], &basis.vectors[b])?;
                let coords = basis.to_adapted(&br)?;
                let sparse = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                basis.brackets.push(sparse);
            }
        }
        Ok(basis)
    }

    /// The standard basis in its own order (adapted to `p = 0`).
    pub fn standard(algebra: &LieAlgebra) -> Self {
        Self::new(algebra, &Subspace::zero(algebra.dim())).expect("zero subspace")
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Number of complement vectors `m`.
    pub fn complement_len(&self) -> usize {
        self.complement.len()
    }

    /// Original basis indices of the complement vectors.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    pub fn subalgebra(&self) -> &Subspace {
        &self.p
    }

    pub fn vector(&self, a: usize) -> &[Rational] {
        &self.vectors[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `[u_a, u_b]` as sparse adapted coordinates.
    pub fn bracket_terms(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.brackets[a * self.dim() + b]
    }

    /// Coordinates of `x ∈ 𝔤` in the adapted basis.
    pub fn to_adapted(&self, x: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        check_dim(n, x.len())?;
        let beta: Vector = self.p.pivots().iter().map(|&j| x[j].clone()).collect();
        let residual = vector::sub(x, &self.p.combine(&beta)?);
        if self.p.pivots().iter().any(|&j| !residual[j].is_zero()) {
            return Err(Error::Internal("adapted basis does not span".into()));
        }
        let mut out: Vector = self.complement.iter().map(|&j| residual[j].clone()).collect();
        out.extend(beta);
        Ok(out)
    }

    pub fn from_adapted(&self, coords: &[Rational]) -> Result<Vector> {
        check_dim(self.dim(), coords.len())?;
        let mut out = vector::zeros(self.dim());
        for (c, v) in coords.iter().zip(&self.vectors) {
            vector::axpy(&mut out, c, v);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, vector::unit};

    #[test]
    fn heisenberg_adapted_to_center_plane() {
        let g = LieAlgebra::from_brackets(
            vec!["x".into(), "y".into(), "z".into()],
            &[(0, 1, unit(3, 2))],
        )
        .unwrap();
        let p = Subspace::span(3, [unit(3, 1), unit(3, 2)]).unwrap();
        let b = AdaptedBasis::new(&g, &p).unwrap();
        assert_eq!(b.names(), ["x", "y", "z"]);
        assert_eq!(b.complement_len(), 1);
        assert_eq!(b.bracket_terms(0, 1), [(2, int(1))]);
    }

    #[test]
    fn coordinates_round_trip_for_skew_subalgebra() {
        let g = LieAlgebra::abelian(vec!["a".into(), "b".into(), "c".into()]);
        let p = Subspace::span(3, [vec![int(1), int(2), int(3)]]).unwrap();
        let b = AdaptedBasis::new(&g, &p).unwrap();
        assert_eq!(b.names(), ["b", "c", "p1"]);
        let x = vec![int(2), int(-1), int(5)];
        let coords = b.to_adapted(&x).unwrap();
        assert_eq!(coords, vec![int(-5), int(-1), int(2)]);
        assert_eq!(b.from_adapted(&coords).unwrap(), x);
    }
}
