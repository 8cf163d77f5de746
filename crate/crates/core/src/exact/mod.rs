//! Exact rational linear algebra.
//!
//! Every subspace is stored through the reduced row echelon form of a basis,
//! so two subspaces are equal as sets exactly when their stored bases are
//! identical. Affine subspaces keep their base point reduced modulo the
//! direction for the same reason.

mod affine;
mod matrix;
mod rational;
mod subspace;

pub use affine::AffineSubspace;
pub use matrix::{kernel, rref, rref_with_pivots, solve, Matrix};
pub use rational::{int, parse_rational, rat, Rational};
pub use subspace::{EchelonBasis, Subspace};

/// Dense coordinate vector.
pub type Vector = Vec<Rational>;

pub mod vector {
    //! Small helpers over [`Vector`](super::Vector).
    use num_traits::Zero;

    use super::{Rational, Vector};

    pub fn zeros(n: usize) -> Vector {
        vec![Rational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vector {
        let mut v = zeros(n);
        v[i] = super::int(1);
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        debug_assert_eq!(a.len(), b.len());
        let mut acc = Rational::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        acc
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
        a.iter().map(|x| c * x).collect()
    }

    /// `acc += c * a`
    pub fn axpy(acc: &mut [Rational], c: &Rational, a: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn concat(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().chain(b).cloned().collect()
    }
}
