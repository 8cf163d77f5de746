//! Functionals on 𝔤, stabilizers, Vergne polarizations and the character θ.

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exact::{kernel, rat, vector, Matrix, Rational, Subspace, Vector};
use crate::lie::{FilteredAlgebra, LieAlgebra};

/// Element of 𝔤*, as coordinates in the dual basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Functional {
    coords: Vector,
}

impl Functional {
    pub fn new(coords: Vector) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vector::zeros(dim))
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self::new(xs.iter().map(|&x| crate::exact::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.dim(), x.len())?;
        Ok(vector::dot(&self.coords, x))
    }

    /// Values on the RREF basis of `space`.
    pub fn values_on(&self, space: &Subspace) -> Result<Vector> {
        space.basis().mul_vec(&self.coords)
    }

    /// `self` is zero on `[p, p]`, so its restriction is a character of `p`.
    pub fn is_character_on(&self, algebra: &LieAlgebra, p: &Subspace) -> Result<bool> {
        Ok(skew_form(algebra, self, p)?.is_zero())
    }
}

/// A polarization `p` of a functional `f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polarization {
    space: Subspace,
    functional: Functional,
}

impl Polarization {
    /// Checks the polarization conditions before wrapping.
    pub fn new(algebra: &LieAlgebra, space: Subspace, functional: Functional) -> Result<Self> {
        if !is_polarization(algebra, &space, &functional)? {
            return Err(Error::NotPolarization);
        }
        Ok(Self { space, functional })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn functional(&self) -> &Functional {
        &self.functional
    }

    /// `f` restricted to `p`, as values on the RREF basis of `p`.
    pub fn character(&self) -> Vector {
        self.functional.values_on(&self.space).expect("same ambient")
    }
}

/// `B[i][j] = f([bᵢ, bⱼ])` over the RREF basis of `a`.
pub fn skew_form(algebra: &LieAlgebra, f: &Functional, a: &Subspace) -> Result<Matrix> {
    check_dim(algebra.dim(), f.dim())?;
    check_dim(algebra.dim(), a.ambient_dim())?;
    let r = a.dim();
    let mut b = Matrix::zeros(r, r);
    for i in 0..r {
        for j in i + 1..r {
            let v = f.eval(&algebra.bracket(a.basis().row(i), a.basis().row(j))?)?;
            if !v.is_zero() {
                b[(j, i)] = -v.clone();
                b[(i, j)] = v;
            }
        }
    }
    Ok(b)
}

/// `{x ∈ a : f([x, a]) = 0}` in 𝔤 coordinates.
pub fn stabilizer(algebra: &LieAlgebra, f: &Functional, a: &Subspace) -> Result<Subspace> {
    let local = kernel(&skew_form(algebra, f, a)?);
    let rows: Result<Vec<Vector>> = local.basis_vectors().map(|c| a.combine(c)).collect();
    Subspace::span(algebra.dim(), rows?)
}

/// `{x ∈ 𝔤 : f([x, 𝔤₁]) = 0}`; only the values of `f` on `𝔤₁` matter.
pub fn relative_stabilizer(algebra: &LieAlgebra, f: &Functional, g1: &Subspace) -> Result<Subspace> {
    let n = algebra.dim();
    check_dim(n, f.dim())?;
    check_dim(n, g1.ambient_dim())?;
    let mut m = Matrix::zeros(g1.dim(), n);
    for (row, b) in g1.basis_vectors().enumerate() {
        for j in 0..n {
            m[(row, j)] = f.eval(&algebra.bracket(&vector::unit(n, j), b)?)?;
        }
    }
    Ok(kernel(&m))
}

/// `Σᵢ 𝔤ᵢ^{fᵢ}` over the members of the filtration.
///
/// The result is checked against the polarization conditions; a failure is
/// reported as [`Error::Internal`] since it cannot happen for a valid input.
pub fn vergne_polarization(fa: &FilteredAlgebra, f: &Functional) -> Result<Polarization> {
    let algebra = fa.algebra();
    check_dim(algebra.dim(), f.dim())?;
    let mut acc = Subspace::zero(algebra.dim());
    let mut previous: Option<&Subspace> = None;
    for member in fa.filtration().members() {
        if previous == Some(member) {
            continue;
        }
        acc = acc.sum(&stabilizer(algebra, f, member)?)?;
        previous = Some(member);
    }
    if !is_polarization(algebra, &acc, f)? {
        return Err(Error::Internal(format!(
            "Vergne construction produced a non-polarization of dimension {}",
            acc.dim()
        )));
    }
    Ok(Polarization {
        space: acc,
        functional: f.clone(),
    })
}

/// Subalgebra, isotropic for `f([·,·])`, with `dim p = ½(dim 𝔤 + dim 𝔤^f)`.
pub fn is_polarization(algebra: &LieAlgebra, p: &Subspace, f: &Functional) -> Result<bool> {
    let n = algebra.dim();
    check_dim(n, p.ambient_dim())?;
    let stab = stabilizer(algebra, f, &Subspace::full(n))?;
    if 2 * p.dim() != n + stab.dim() {
        return Ok(false);
    }
    Ok(algebra.is_subalgebra(p)? && f.is_character_on(algebra, p)?)
}

/// `[t, p] ⊆ p`.
pub fn ad_invariant(algebra: &LieAlgebra, p: &Subspace, t: &[Rational]) -> Result<bool> {
    for b in p.basis_vectors() {
        if !p.contains(&algebra.bracket(t, b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `θ_p(x) = ½ tr(ad_x on 𝔤/p)` on the RREF basis of `p`, computed as
/// `½ (tr ad_x − tr ad_x|_p)`.
pub fn theta(algebra: &LieAlgebra, p: &Subspace) -> Result<Vector> {
    if !algebra.is_subalgebra(p)? {
        return Err(Error::NotSubalgebra);
    }
    let n = algebra.dim();
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(p.dim());
    for x in p.basis_vectors() {
        let mut full_trace = Rational::zero();
        for j in 0..n {
            full_trace += &algebra.bracket(x, &vector::unit(n, j))?[j];
        }
        let mut sub_trace = Rational::zero();
        for (i, b) in p.basis_vectors().enumerate() {
            let coords = p
                .coordinates(&algebra.bracket(x, b)?)?
                .ok_or(Error::NotSubalgebra)?;
            sub_trace += &coords[i];
        }
        out.push(&half * (full_trace - sub_trace));
    }
    Ok(out)
}

/// `(f − θ_p)|_p` on the RREF basis of `p`.
pub fn twisted_character(algebra: &LieAlgebra, f: &Functional, p: &Subspace) -> Result<Vector> {
    if !is_polarization(algebra, p, f)? {
        return Err(Error::NotPolarization);
    }
    let th = theta(algebra, p)?;
    Ok(vector::sub(&f.values_on(p)?, &th))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, vector::unit};
    use crate::lie::Filtration;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn axb() -> FilteredAlgebra {
        let g = LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, unit(2, 1))]).unwrap();
        FilteredAlgebra::new(g, Filtration::coordinate_tails(2)).unwrap()
    }

    fn heisenberg() -> FilteredAlgebra {
        let g = LieAlgebra::from_brackets(names(&["x", "y", "z"]), &[(0, 1, unit(3, 2))]).unwrap();
        FilteredAlgebra::new(g, Filtration::coordinate_tails(3)).unwrap()
    }

    /// ⟨t, x, y : [t,x] = x, [t,y] = y⟩
    fn scaling() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names(&["t", "x", "y"]),
            &[(0, 1, unit(3, 1)), (0, 2, unit(3, 2))],
        )
        .unwrap()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, idx.iter().map(|&i| unit(n, i))).unwrap()
    }

    #[test]
    fn skew_form_examples() {
        let g = axb();
        let f = Functional::from_ints(&[0, 1]);
        let b = skew_form(g.algebra(), &f, &Subspace::full(2)).unwrap();
        let expected = Matrix::from_rows(2, [vec![int(0), int(1)], vec![int(-1), int(0)]]).unwrap();
        assert_eq!(b, expected);
        assert!(skew_form(g.algebra(), &Functional::zero(2), &Subspace::full(2))
            .unwrap()
            .is_zero());
        assert!(skew_form(g.algebra(), &f, &span(2, &[1])).unwrap().is_zero());
    }

    #[test]
    fn stabilizer_examples() {
        let g = axb();
        let full = Subspace::full(2);
        assert_eq!(stabilizer(g.algebra(), &Functional::from_ints(&[0, 1]), &full).unwrap(), Subspace::zero(2));
        assert_eq!(stabilizer(g.algebra(), &Functional::zero(2), &full).unwrap(), full);
        let h = heisenberg();
        let st = stabilizer(h.algebra(), &Functional::from_ints(&[0, 0, 1]), &Subspace::full(3)).unwrap();
        assert_eq!(st, span(3, &[2]));
    }

    #[test]
    fn relative_stabilizer_examples() {
        let g = axb();
        let g1 = span(2, &[1]);
        let rs = relative_stabilizer(g.algebra(), &Functional::from_ints(&[0, 1]), &g1).unwrap();
        assert_eq!(rs, span(2, &[1]));
        let rs0 = relative_stabilizer(g.algebra(), &Functional::zero(2), &g1).unwrap();
        assert_eq!(rs0, Subspace::full(2));
        let h = heisenberg();
        let rs = relative_stabilizer(h.algebra(), &Functional::from_ints(&[0, 0, 1]), &span(3, &[1, 2])).unwrap();
        assert_eq!(rs, span(3, &[1, 2]));
    }

    #[test]
    fn vergne_examples() {
        let g = axb();
        let p = vergne_polarization(&g, &Functional::from_ints(&[0, 1])).unwrap();
        assert_eq!(p.space(), &span(2, &[1]));
        let p = vergne_polarization(&g, &Functional::from_ints(&[5, 0])).unwrap();
        assert_eq!(p.space(), &Subspace::full(2));
        let h = heisenberg();
        let p = vergne_polarization(&h, &Functional::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(p.space(), &span(3, &[1, 2]));
    }

    #[test]
    fn polarization_predicate() {
        let g = axb();
        assert!(is_polarization(g.algebra(), &span(2, &[1]), &Functional::from_ints(&[0, 1])).unwrap());
        assert!(is_polarization(g.algebra(), &Subspace::full(2), &Functional::zero(2)).unwrap());
        let h = heisenberg();
        // ½(3 + 1) = 2 ≠ 1
        assert!(!is_polarization(h.algebra(), &span(3, &[0]), &Functional::from_ints(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn ad_invariance() {
        let h = heisenberg();
        assert!(ad_invariant(h.algebra(), &span(3, &[1, 2]), &unit(3, 0)).unwrap());
        assert!(ad_invariant(h.algebra(), &span(3, &[1, 2]), &unit(3, 1)).unwrap());
        let g = axb();
        assert!(!ad_invariant(g.algebra(), &span(2, &[0]), &unit(2, 1)).unwrap());
    }

    #[test]
    fn theta_examples() {
        let g = axb();
        assert_eq!(theta(g.algebra(), &Subspace::full(2)).unwrap(), vec![int(0), int(0)]);
        let s = scaling();
        assert_eq!(theta(&s, &span(3, &[0, 1])).unwrap(), vec![rat(1, 2), int(0)]);
        let h = heisenberg();
        assert_eq!(theta(h.algebra(), &span(3, &[1, 2])).unwrap(), vec![int(0), int(0)]);
        assert_eq!(theta(h.algebra(), &span(3, &[0, 1])), Err(Error::NotSubalgebra));
    }

    #[test]
    fn twisted_character_examples() {
        let g = axb();
        let tw = twisted_character(g.algebra(), &Functional::from_ints(&[0, 1]), &span(2, &[1])).unwrap();
        assert_eq!(tw, vec![int(1)]);
        let tw = twisted_character(g.algebra(), &Functional::zero(2), &Subspace::full(2)).unwrap();
        assert_eq!(tw, vec![int(0), int(0)]);
        let s = scaling();
        let p = span(3, &[0, 1]);
        let f = Functional::from_ints(&[0, 0, 1]);
        assert!(is_polarization(&s, &p, &f).unwrap());
        assert_eq!(twisted_character(&s, &f, &p).unwrap(), vec![rat(-1, 2), int(0)]);
        assert_eq!(
            twisted_character(g.algebra(), &Functional::from_ints(&[0, 1]), &Subspace::full(2)),
            Err(Error::NotPolarization)
        );
    }
}
