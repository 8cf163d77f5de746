use rand::Rng;

use super::{int, kernel, solve, vector, Matrix, Rational, Subspace, Vector};
use crate::error::{check_dim, Result};

/// Affine subspace `point + direction`, with the point reduced modulo the
/// direction so that derived equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineSubspace {
    point: Vector,
    direction: Subspace,
}

impl AffineSubspace {
    pub fn new(point: Vector, direction: Subspace) -> Result<Self> {
        let point = direction.reduce(&point)?;
        Ok(Self { point, direction })
    }

    pub fn singleton(point: Vector) -> Self {
        let n = point.len();
        Self {
            point,
            direction: Subspace::zero(n),
        }
    }

    /// Solution set of the equations `a·x = c`, or `None` when inconsistent.
    pub fn from_equations(ambient: usize, equations: &[(Vector, Rational)]) -> Result<Option<Self>> {
        let a = Matrix::from_rows(ambient, equations.iter().map(|(row, _)| row.clone()))?;
        let rhs: Vector = equations.iter().map(|(_, c)| c.clone()).collect();
        let Some(x) = solve(&a, &rhs)? else {
            return Ok(None);
        };
        Self::new(x, kernel(&a)).map(Some)
    }

    pub fn ambient_dim(&self) -> usize {
        self.point.len()
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    /// Canonical base point: vanishes at the direction's pivot columns.
    pub fn point(&self) -> &[Rational] {
        &self.point
    }

    pub fn direction(&self) -> &Subspace {
        &self.direction
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.ambient_dim(), x.len())?;
        self.direction.contains(&vector::sub(x, &self.point))
    }

    /// Set containment `self ⊆ other`.
    pub fn leq(&self, other: &AffineSubspace) -> Result<bool> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(self.direction.leq(&other.direction)? && other.contains(&self.point)?)
    }

    /// Minkowski sum `{x + y}`.
    pub fn sum(&self, other: &AffineSubspace) -> Result<AffineSubspace> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Self::new(
            vector::add(&self.point, &other.point),
            self.direction.sum(&other.direction)?,
        )
    }

    pub fn image(&self, l: &Matrix) -> Result<AffineSubspace> {
        Self::new(l.mul_vec(&self.point)?, self.direction.image(l)?)
    }

    /// `{x : l·x ∈ self}`; `None` when no such `x` exists.
    pub fn preimage(&self, l: &Matrix) -> Result<Option<AffineSubspace>> {
        check_dim(self.ambient_dim(), l.rows())?;
        let ann = self.direction.annihilator();
        let constraints = ann.basis().mul(l)?;
        let rhs = ann.basis().mul_vec(&self.point)?;
        let Some(x) = solve(&constraints, &rhs)? else {
            return Ok(None);
        };
        Self::new(x, kernel(&constraints)).map(Some)
    }

    pub fn product(&self, other: &AffineSubspace) -> AffineSubspace {
        AffineSubspace {
            point: vector::concat(&self.point, &other.point),
            direction: self.direction.product(&other.direction),
        }
    }

    /// Base point plus a random combination of the direction basis with
    /// integer coefficients in `-radius..=radius`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, radius: i64) -> Vector {
        let mut x = self.point.clone();
        for b in self.direction.basis_vectors() {
            let c = int(rng.gen_range(-radius..=radius));
            vector::axpy(&mut x, &c, b);
        }
        x
    }
}
