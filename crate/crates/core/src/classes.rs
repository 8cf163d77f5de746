//! Equivalence classes `ℛ(f)` in 𝔤*, module equivalence, and the spectra
//! of induced, restricted and tensor-product modules.
//!
//! Each spectrum is returned as an affine subspace; membership is decided
//! twice, once from polarization conditions and once by affine containment.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_dim, Error, Result};
use crate::exact::{vector, AffineSubspace, Subspace, Vector};
use crate::lie::{FilteredAlgebra, Subalgebra};
use crate::polar::{twisted_character, vergne_polarization, Functional, Polarization};

/// The class of `f`: all `g` sharing the Vergne polarization of `f` and
/// agreeing with `f` on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RClass {
    representative: Functional,
    pol: Polarization,
    restriction: Vector,
    set: AffineSubspace,
}

impl RClass {
    pub fn representative(&self) -> &Functional {
        &self.representative
    }

    pub fn polarization(&self) -> &Polarization {
        &self.pol
    }

    /// Values of `f` on the RREF basis of the polarization.
    pub fn restriction(&self) -> &[crate::exact::Rational] {
        &self.restriction
    }

    pub fn set(&self) -> &AffineSubspace {
        &self.set
    }
}

pub fn r_class(fa: &FilteredAlgebra, f: &Functional) -> Result<RClass> {
    let pol = vergne_polarization(fa, f)?;
    let restriction = pol.character();
    let set = AffineSubspace::new(f.coords().to_vec(), pol.space().annihilator())?;
    Ok(RClass {
        representative: f.clone(),
        pol,
        restriction,
        set,
    })
}

/// Same Vergne polarization, and equal values on it.
pub fn modules_equivalent(fa: &FilteredAlgebra, f: &Functional, g: &Functional) -> Result<bool> {
    check_dim(f.dim(), g.dim())?;
    let pf = vergne_polarization(fa, f)?;
    let pg = vergne_polarization(fa, g)?;
    Ok(pf.space() == pg.space() && pf.character() == pg.character())
}

/// `𝔥` with the induced filtration, as a filtered algebra of its own.
fn local(fa: &FilteredAlgebra, sub: &Subalgebra) -> Result<FilteredAlgebra> {
    check_dim(fa.dim(), sub.space().ambient_dim())?;
    fa.restrict_to(sub)
}

/// `𝔮𝔳(h)` in local coordinates of `𝔥`.
fn local_polarization(fa: &FilteredAlgebra, sub: &Subalgebra, h: &Functional) -> Result<Polarization> {
    check_dim(sub.dim(), h.dim())?;
    vergne_polarization(&local(fa, sub)?, h)
}

/// `π⁻¹(𝔯(h)) = {η ∈ 𝔤* : η = h on 𝔮𝔳(h)}`.
pub fn spec_induced_space(fa: &FilteredAlgebra, sub: &Subalgebra, h: &Functional) -> Result<AffineSubspace> {
    let q = local_polarization(fa, sub, h)?;
    let r_h = AffineSubspace::new(h.coords().to_vec(), q.space().annihilator())?;
    r_h.preimage(sub.restriction())?
        .ok_or_else(|| Error::Internal("restriction to a subalgebra is not surjective".into()))
}

/// `𝔮𝔳(h) ⊆ 𝔭𝔳(f)` and `f = h` on `𝔮𝔳(h)`.
pub fn spec_induced_member(fa: &FilteredAlgebra, sub: &Subalgebra, h: &Functional, f: &Functional) -> Result<bool> {
    check_dim(fa.dim(), f.dim())?;
    let q = local_polarization(fa, sub, h)?;
    let p = vergne_polarization(fa, f)?;
    let q_parent = sub.subspace_to_parent(q.space())?;
    if !q_parent.leq(p.space())? {
        return Ok(false);
    }
    for b in q.space().basis_vectors() {
        if h.eval(b)? != f.eval(&sub.to_parent(b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ℛ(f) ⊆ π⁻¹(𝔯(h))`.
pub fn spec_induced_member_affine(
    fa: &FilteredAlgebra,
    sub: &Subalgebra,
    h: &Functional,
    f: &Functional,
) -> Result<bool> {
    r_class(fa, f)?.set.leq(&spec_induced_space(fa, sub, h)?)
}

/// `π(ℛ(f)) = {μ ∈ 𝔥* : μ = f on 𝔭𝔳(f) ∩ 𝔥}`.
pub fn spec_restrict_space(fa: &FilteredAlgebra, f: &Functional, sub: &Subalgebra) -> Result<AffineSubspace> {
    check_dim(fa.dim(), sub.space().ambient_dim())?;
    r_class(fa, f)?.set.image(sub.restriction())
}

/// `𝔮𝔳(h) ⊇ 𝔭𝔳(f) ∩ 𝔥` and `h = f` on `𝔭𝔳(f) ∩ 𝔥`.
pub fn spec_restrict_member(fa: &FilteredAlgebra, f: &Functional, sub: &Subalgebra, h: &Functional) -> Result<bool> {
    check_dim(fa.dim(), f.dim())?;
    let q = local_polarization(fa, sub, h)?;
    let p = vergne_polarization(fa, f)?;
    let meet = sub.subspace_to_local(&p.space().intersect(sub.space())?)?;
    if !meet.leq(q.space())? {
        return Ok(false);
    }
    for b in meet.basis_vectors() {
        if h.eval(b)? != f.eval(&sub.to_parent(b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `𝔯(h) ⊆ π(ℛ(f))`, with `𝔯(h)` the class of `h` in `𝔥`.
pub fn spec_restrict_member_affine(
    fa: &FilteredAlgebra,
    f: &Functional,
    sub: &Subalgebra,
    h: &Functional,
) -> Result<bool> {
    let r_h = r_class(&local(fa, sub)?, h)?;
    r_h.set.leq(&spec_restrict_space(fa, f, sub)?)
}

/// `ℛ(f′) + ℛ(f″)`.
pub fn spec_tensor_space(fa: &FilteredAlgebra, f1: &Functional, f2: &Functional) -> Result<AffineSubspace> {
    r_class(fa, f1)?.set.sum(&r_class(fa, f2)?.set)
}

/// `ℛ(g) ⊆ ℛ(f′) + ℛ(f″)`.
pub fn spec_tensor_member(fa: &FilteredAlgebra, f1: &Functional, f2: &Functional, g: &Functional) -> Result<bool> {
    r_class(fa, g)?.set.leq(&spec_tensor_space(fa, f1, f2)?)
}

/// The diagonal `{(x, x)}` of `𝔤 × 𝔤` as a subalgebra; its local coordinates
/// coincide with those of 𝔤.
pub fn diagonal_subalgebra(fa: &FilteredAlgebra) -> Result<(FilteredAlgebra, Subalgebra)> {
    let product = fa.product();
    let n = fa.dim();
    let rows = (0..n).map(|i| vector::concat(&vector::unit(n, i), &vector::unit(n, i)));
    let space = Subspace::span(2 * n, rows)?;
    let diag = Subalgebra::new(product.algebra(), space)?;
    Ok((product, diag))
}

/// Tensor-product membership decided through the restriction conditions
/// for `f′ × f″` on the diagonal of `𝔤 × 𝔤`.
pub fn spec_tensor_member_diagonal(
    fa: &FilteredAlgebra,
    f1: &Functional,
    f2: &Functional,
    g: &Functional,
) -> Result<bool> {
    check_dim(fa.dim(), f1.dim())?;
    check_dim(fa.dim(), f2.dim())?;
    check_dim(fa.dim(), g.dim())?;
    let (product, diag) = diagonal_subalgebra(fa)?;
    let joint = Functional::new(vector::concat(f1.coords(), f2.coords()));
    spec_restrict_member(&product, &joint, &diag, g)
}

/// `𝔭𝔳(f′ × f″) = 𝔭𝔳(f′) × 𝔭𝔳(f″)` and `ℛ(f′ × f″) = ℛ(f′) × ℛ(f″)` in
/// `𝔤 × 𝔤` with the interleaved filtration.
pub fn product_class_check(fa: &FilteredAlgebra, f1: &Functional, f2: &Functional) -> Result<bool> {
    let product = fa.product();
    let joint = Functional::new(vector::concat(f1.coords(), f2.coords()));
    let c = r_class(&product, &joint)?;
    let c1 = r_class(fa, f1)?;
    let c2 = r_class(fa, f2)?;
    let pol_ok = c.pol.space() == &c1.pol.space().product(c2.pol.space());
    let set_ok = c.set == c1.set.product(&c2.set);
    Ok(pol_ok && set_ok)
}

/// For `samples` seeded random members `g` of `ℛ(f)`: same polarization,
/// same values on it, and the same twisted character `f − θ`.
pub fn dixmier_constancy_check(fa: &FilteredAlgebra, f: &Functional, samples: usize, seed: u64) -> Result<bool> {
    let class = r_class(fa, f)?;
    let p = class.pol.space();
    let twisted = twisted_character(fa.algebra(), f, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let g = Functional::new(class.set.sample(&mut rng, 5));
        let pg = vergne_polarization(fa, &g)?;
        if pg.space() != p || pg.character() != class.restriction {
            return Ok(false);
        }
        if twisted_character(fa.algebra(), &g, p)? != twisted {
            return Ok(false);
        }
    }
    Ok(true)
}
