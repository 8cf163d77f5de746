use std::collections::HashMap;
use std::fmt;

use super::{InducedModule, ModuleElement, Monomial};
use crate::error::{Error, Result};
use crate::exact::{int, kernel, vector, EchelonBasis, Matrix, Rational, Subspace, Vector};
use crate::lie::FilteredAlgebra;

/// Degree of a module element in a designated variable; `−∞` for zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TDegree {
    NegInfinity,
    Finite(u32),
}

impl fmt::Display for TDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TDegree::NegInfinity => f.write_str("-inf"),
            TDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn t_degree(v: &ModuleElement, t: usize) -> TDegree {
    v.terms()
        .map(|(m, _)| m.exponent(t))
        .max()
        .map_or(TDegree::NegInfinity, TDegree::Finite)
}

/// The monomials of total degree `≤ D`, indexed in ascending graded-lex
/// order; coordinates of module elements live in `K^{len}`.
#[derive(Clone, Debug)]
pub struct Slice {
    vars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Slice {
    pub fn new(vars: usize, degree: u32) -> Self {
        let monomials: Vec<Monomial> = (0..=degree).flat_map(|d| Monomial::of_degree(vars, d)).collect();
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self {
            vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn coords(&self, v: &ModuleElement) -> Result<Vector> {
        let mut out = vector::zeros(self.len());
        for (m, c) in v.terms() {
            let i = self.position(m).ok_or_else(|| {
                Error::InvalidArgument(format!("monomial of degree {} outside the slice", m.degree()))
            })?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn element(&self, coords: &[Rational]) -> ModuleElement {
        let mut v = ModuleElement::zero(self.vars);
        for (m, c) in self.monomials.iter().zip(coords) {
            v.add_term(m.clone(), c.clone());
        }
        v
    }
}

/// Pairs `(y, λ)` with `(y − λ)·l = 0`, as a subspace of `𝔤 ⊕ K` (the last
/// coordinate is `λ`).
pub fn highest_vectors(module: &InducedModule, degree: u32) -> Result<Subspace> {
    if degree < 1 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    let n = module.algebra_dim();
    let slice = Slice::new(module.vars(), degree);
    let l = module.cyclic();
    let mut columns = Vec::with_capacity(n + 1);
    for a in 0..n {
        columns.push(slice.coords(&module.act_basis(a, &l)?)?);
    }
    columns.push(vector::scale(&int(-1), &slice.coords(&l)?));
    Ok(kernel(&Matrix::from_columns(slice.len(), &columns)?))
}

/// Closure of one generator under `actors` for `steps` rounds, acting on
/// newly added vectors only.
fn closure(
    module: &InducedModule,
    slice: &Slice,
    seed: &ModuleElement,
    actors: &[Vector],
    steps: u32,
) -> Result<EchelonBasis> {
    let mut basis = EchelonBasis::new(slice.len());
    let mut frontier = Vec::new();
    if basis.insert(&slice.coords(seed)?)? {
        frontier.push(seed.clone());
    }
    for _ in 0..steps {
        let mut next = Vec::new();
        for v in &frontier {
            for x in actors {
                let w = module.act(x, v)?;
                if !w.is_zero() && basis.insert(&slice.coords(&w)?)? {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(basis)
}

/// Span of `u·g` over PBW monomials `u` with `deg u + deg g ≤ D`, inside
/// the degree-`≤ D` slice.
pub fn bounded_submodule(module: &InducedModule, gens: &[ModuleElement], degree: u32) -> Result<Subspace> {
    let slice = Slice::new(module.vars(), degree);
    let n = module.algebra_dim();
    let actors: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let mut total = Subspace::zero(slice.len());
    for g in gens {
        let Some(d) = g.degree() else { continue };
        if d > degree {
            return Err(Error::InvalidArgument(format!(
                "generator of degree {d} exceeds the bound {degree}"
            )));
        }
        let part = closure(module, &slice, g, &actors, degree - d)?.into_subspace();
        total = total.sum(&part)?;
    }
    Ok(total)
}

/// Degree-`≤ D` part of `U(𝔤_i)·l`.
pub fn module_filtration_slice(
    module: &InducedModule,
    fa: &FilteredAlgebra,
    i: usize,
    degree: u32,
) -> Result<Subspace> {
    if i > fa.filtration().len() {
        return Err(Error::InvalidArgument(format!(
            "filtration index {i} out of range 0..={}",
            fa.filtration().len()
        )));
    }
    let slice = Slice::new(module.vars(), degree);
    let actors: Vec<Vector> = fa.filtration().member(i).basis_vectors().map(<[Rational]>::to_vec).collect();
    Ok(closure(module, &slice, &module.cyclic(), &actors, degree)?.into_subspace())
}

/// `span{tᵏ·l : k ≤ D}` for `t ∈ 𝔤`, as a subspace of the slice.
pub fn power_line(module: &InducedModule, t: &[Rational], degree: u32) -> Result<Subspace> {
    let slice = Slice::new(module.vars(), degree);
    let mut v = module.cyclic();
    let mut rows = vec![slice.coords(&v)?];
    for _ in 0..degree {
        v = module.act(t, &v)?;
        rows.push(slice.coords(&v)?);
    }
    Subspace::span(slice.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vector::unit;
    use crate::lie::{Filtration, LieAlgebra};
    use crate::polar::Functional;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn heis() -> FilteredAlgebra {
        let g = LieAlgebra::from_brackets(names(&["x", "y", "z"]), &[(0, 1, unit(3, 2))]).unwrap();
        FilteredAlgebra::new(g, Filtration::coordinate_tails(3)).unwrap()
    }

    fn axb() -> FilteredAlgebra {
        let g = LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, unit(2, 1))]).unwrap();
        FilteredAlgebra::new(g, Filtration::coordinate_tails(2)).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn t_degrees() {
        let l = ModuleElement::monomial(Monomial::one(2));
        assert_eq!(t_degree(&l, 0), TDegree::Finite(0));
        let mut w = ModuleElement::monomial(Monomial::from_exponents(vec![3, 0]));
        w.add_term(Monomial::from_exponents(vec![1, 1]), int(1));
        assert_eq!(t_degree(&w, 0), TDegree::Finite(3));
        assert_eq!(t_degree(&ModuleElement::zero(2), 0), TDegree::NegInfinity);
        assert!(TDegree::NegInfinity < TDegree::Finite(0));
    }

    #[test]
    fn highest_vectors_axb() {
        let fa = axb();
        let m = InducedModule::vergne(&fa, &Functional::from_ints(&[0, 1])).unwrap();
        let hv = highest_vectors(&m, 4).unwrap();
        assert_eq!(hv, Subspace::span(3, [v(&[0, 1, 1])]).unwrap());
    }

    #[test]
    fn highest_vectors_abelian_zero() {
        let g = LieAlgebra::abelian(names(&["a", "b"]));
        let fa = FilteredAlgebra::new(g, Filtration::coordinate_tails(2)).unwrap();
        let m = InducedModule::vergne(&fa, &Functional::zero(2)).unwrap();
        let hv = highest_vectors(&m, 2).unwrap();
        assert_eq!(hv, Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap());
    }

    #[test]
    fn highest_vectors_heisenberg() {
        let fa = heis();
        let m = InducedModule::vergne(&fa, &Functional::from_ints(&[0, 0, 1])).unwrap();
        let hv = highest_vectors(&m, 4).unwrap();
        assert_eq!(hv, Subspace::span(4, [v(&[0, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap());
    }

    #[test]
    fn cyclic_vector_generates_slice() {
        let fa = heis();
        let m = InducedModule::vergne(&fa, &Functional::from_ints(&[0, 0, 1])).unwrap();
        let s = bounded_submodule(&m, &[m.cyclic()], 4).unwrap();
        assert!(s.is_full());
        assert!(bounded_submodule(&m, &[], 4).unwrap().is_zero());
    }

    #[test]
    fn axb_shifted_generator_generates_everything() {
        // y·(x − α)l = (x − 1 − α)l, so l lies in the submodule
        let fa = axb();
        let m = InducedModule::vergne(&fa, &Functional::from_ints(&[0, 1])).unwrap();
        let mut g = ModuleElement::monomial(Monomial::from_exponents(vec![1]));
        g.add_term(Monomial::one(1), int(-2));
        let s = bounded_submodule(&m, &[g], 3).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.is_full());
    }

    #[test]
    fn filtration_slices_heisenberg() {
        let fa = heis();
        let m = InducedModule::vergne(&fa, &Functional::from_ints(&[0, 0, 1])).unwrap();
        let l_line = Subspace::span(5, [unit(5, 0)]).unwrap();
        assert!(module_filtration_slice(&m, &fa, 0, 4).unwrap().is_full());
        assert_eq!(module_filtration_slice(&m, &fa, 1, 4).unwrap(), l_line);
        assert_eq!(module_filtration_slice(&m, &fa, 3, 4).unwrap(), l_line);
    }
}
