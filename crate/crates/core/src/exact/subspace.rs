use num_traits::{One, Zero};

use super::{kernel, vector, Matrix, Rational, Vector};
use crate::error::{check_dim, Result};

/// Linear subspace of ℚⁿ, stored as the reduced row echelon form of a basis.
///
/// Because the basis is canonical, derived equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        Ok(m.row_space())
    }

    pub(crate) fn from_rref_unchecked(ambient: usize, (basis, pivots): (Matrix, Vec<usize>)) -> Self {
        debug_assert_eq!(basis.cols(), ambient);
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        self.basis.row(i).to_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinate indices that are not pivots, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// `v` minus its component along the basis, chosen so the result vanishes
    /// at every pivot column. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vector> {
        check_dim(self.ambient, v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-c, self.basis.row(row));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(vector::is_zero(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// `Σ cᵢ bᵢ` over the RREF basis.
    pub fn combine(&self, coords: &[Rational]) -> Result<Vector> {
        check_dim(self.dim(), coords.len())?;
        let mut out = vector::zeros(self.ambient);
        for (i, c) in coords.iter().enumerate() {
            vector::axpy(&mut out, c, self.basis.row(i));
        }
        Ok(out)
    }

    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let rows = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Rational]>::to_vec);
        Subspace::span(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        self.annihilator()
            .sum(&other.annihilator())
            .map(|s| s.annihilator())
    }

    /// Annihilator in the dual coordinate space: `{φ : φ(v) = 0 ∀ v}`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        kernel(&self.basis)
    }

    /// Image under the linear map `l` (acting on column vectors).
    pub fn image(&self, l: &Matrix) -> Result<Subspace> {
        check_dim(self.ambient, l.cols())?;
        let rows: Result<Vec<Vector>> = self.basis_vectors().map(|v| l.mul_vec(v)).collect();
        Subspace::span(l.rows(), rows?)
    }

    /// Preimage `{x : l·x ∈ self}`.
    pub fn preimage(&self, l: &Matrix) -> Result<Subspace> {
        check_dim(self.ambient, l.rows())?;
        let constraints = self.annihilator().basis().mul(l)?;
        Ok(kernel(&constraints))
    }

    /// Direct product `self × other` in concatenated coordinates.
    pub fn product(&self, other: &Subspace) -> Subspace {
        let n = self.ambient + other.ambient;
        let left = self
            .basis_vectors()
            .map(|v| vector::concat(v, &vector::zeros(other.ambient)));
        let right = other
            .basis_vectors()
            .map(|v| vector::concat(&vector::zeros(self.ambient), v));
        Subspace::span(n, left.chain(right).collect::<Vec<_>>()).expect("concatenated lengths")
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace({}; {:?})", self.ambient, self.basis)
    }
}

/// Incrementally built echelon basis; reports whether each inserted vector
/// enlarged the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn residual(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            let c = out[*p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        vector::is_zero(&self.residual(v))
    }

    /// Returns true when `v` was independent of the current rows.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        let mut r = self.residual(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        debug_assert!(r[p].is_one());
        self.rows.push((p, r));
        Ok(true)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.ambient, self.rows.into_iter().map(|(_, v)| v))
            .expect("rows have the ambient dimension")
    }
}
