//! Seeded random solvable algebras with filtrations, and random test data.
//!
//! Every generated algebra has the coordinate-tail filtration
//! `𝔤_i = span{e_i, …, e_{n-1}}`.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{int, kernel, rat, solve, vector, Matrix, Rational, Subspace, Vector};
use crate::lie::{FilteredAlgebra, Filtration, LieAlgebra};
use crate::pbw::{ModuleElement, Monomial};
use crate::polar::Functional;

pub const DEFAULT_DIM_CAP: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// Strictly upper-triangular matrices (nilpotent).
    UpperTriangular,
    /// Iterated one-dimensional extensions by random derivations.
    Extension,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::UpperTriangular => "A",
            Family::Extension => "B",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub seed: u64,
    pub min_dim: usize,
    pub max_dim: usize,
    pub family: Family,
    /// Apply a random unipotent change of basis that keeps the filtration.
    pub twist: bool,
    pub dim_cap: usize,
}

impl RandomSpec {
    pub fn new(seed: u64, family: Family, min_dim: usize, max_dim: usize) -> Self {
        Self {
            seed,
            min_dim,
            max_dim,
            family,
            twist: false,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }

    pub fn twisted(mut self, twist: bool) -> Self {
        self.twist = twist;
        self
    }
}

pub fn generate(spec: &RandomSpec) -> Result<FilteredAlgebra> {
    use rand::SeedableRng;
    if spec.max_dim > spec.dim_cap {
        return Err(Error::InvalidArgument(format!(
            "dimension {} exceeds the cap {}",
            spec.max_dim, spec.dim_cap
        )));
    }
    if spec.min_dim > spec.max_dim {
        return Err(Error::InvalidArgument("empty dimension range".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(spec.seed);
    let mut fa = match spec.family {
        Family::UpperTriangular => {
            let sizes: Vec<usize> = (1..=spec.dim_cap + 1)
                .filter(|&n| (spec.min_dim..=spec.max_dim).contains(&(n * (n - 1) / 2)))
                .collect();
            let n = *sizes
                .choose(&mut rng)
                .ok_or_else(|| Error::InvalidArgument("no matrix size fits the dimension range".into()))?;
            upper_triangular(n)
        }
        Family::Extension => {
            let dim = rng.gen_range(spec.min_dim..=spec.max_dim);
            extension_chain(&mut rng, dim)?
        }
    };
    if spec.twist {
        fa = twist(&mut rng, &fa)?;
    }
    Ok(fa)
}

/// Strictly upper-triangular `n × n` matrices, basis `E_ij` ordered by
/// distance from the diagonal and then by row, so that coordinate tails
/// are ideals. For `n = 3` this is the Heisenberg algebra.
pub fn upper_triangular(n: usize) -> FilteredAlgebra {
    let mut idx = Vec::new();
    for d in 1..n {
        for i in 0..n - d {
            idx.push((i, i + d));
        }
    }
    let dim = idx.len();
    let position = |p: (usize, usize)| idx.iter().position(|&q| q == p);
    let names = idx.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut brackets = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let ((i, j), (k, l)) = (idx[a], idx[b]);
            let mut v = vector::zeros(dim);
            if j == k {
                v[position((i, l)).expect("upper triangular")] += int(1);
            }
            if l == i {
                v[position((k, j)).expect("upper triangular")] -= int(1);
            }
            if !vector::is_zero(&v) {
                brackets.push((a, b, v));
            }
        }
    }
    let g = LieAlgebra::from_brackets(names, &brackets).expect("indices in range");
    FilteredAlgebra::new(g, Filtration::coordinate_tails(dim)).expect("nilpotent with ideal tails")
}

/// Builds `𝔤_{i-1} = K·t ⊕ 𝔤_i` from `𝔤_k = 0` upward; each `ad_t` is a
/// random derivation of `𝔤_i` preserving the coordinate flag.
pub fn extension_chain<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<FilteredAlgebra> {
    let mut g = LieAlgebra::abelian(Vec::new());
    for _ in 0..dim {
        let d = g.dim();
        let der = random_flag_derivation(rng, &g);
        let mut brackets = Vec::new();
        for j in 0..d {
            let col: Vector = std::iter::once(Rational::zero()).chain(der.column(j)).collect();
            if !vector::is_zero(&col) {
                brackets.push((0, j + 1, col));
            }
            for i in 0..j {
                let b = g.basis_bracket(i, j);
                if !vector::is_zero(b) {
                    let shifted: Vector = std::iter::once(Rational::zero()).chain(b.iter().cloned()).collect();
                    brackets.push((i + 1, j + 1, shifted));
                }
            }
        }
        let names = (1..=d + 1).map(|i| format!("e{i}")).collect();
        g = LieAlgebra::from_brackets(names, &brackets)?;
    }
    FilteredAlgebra::new(g, Filtration::coordinate_tails(dim))
}

/// Random element of the space of derivations `D` with
/// `D(e_j) ∈ span{e_j, …, e_{d-1}}`, as a `d × d` matrix (column `j` is
/// `D(e_j)`).
pub fn random_flag_derivation<R: Rng + ?Sized>(rng: &mut R, g: &LieAlgebra) -> Matrix {
    let d = g.dim();
    // unknown (k, j) with k ≥ j
    let unknowns: Vec<(usize, usize)> = (0..d).flat_map(|j| (j..d).map(move |k| (k, j))).collect();
    let slot = |k: usize, j: usize| unknowns.iter().position(|&p| p == (k, j));
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            // D[e_i, e_j] − [D e_i, e_j] − [e_i, D e_j] = 0, one row per output coordinate
            for r in 0..d {
                let mut row = vector::zeros(unknowns.len());
                let bij = g.basis_bracket(i, j);
                for k in 0..d {
                    if !bij[k].is_zero() {
                        if let Some(u) = slot(r, k) {
                            row[u] += &bij[k];
                        }
                    }
                }
                for k in i..d {
                    let c = &g.basis_bracket(k, j)[r];
                    if !c.is_zero() {
                        row[slot(k, i).expect("k ≥ i")] -= c;
                    }
                }
                for k in j..d {
                    let c = &g.basis_bracket(i, k)[r];
                    if !c.is_zero() {
                        row[slot(k, j).expect("k ≥ j")] -= c;
                    }
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let space = if rows.is_empty() {
        Subspace::full(unknowns.len())
    } else {
        kernel(&Matrix::from_rows(unknowns.len(), rows).expect("row length"))
    };
    let mut sol = vector::zeros(unknowns.len());
    for b in space.basis_vectors() {
        let c = int(rng.gen_range(-2..=2));
        vector::axpy(&mut sol, &c, b);
    }
    let mut m = Matrix::zeros(d, d);
    for (u, &(k, j)) in unknowns.iter().enumerate() {
        m[(k, j)] = sol[u].clone();
    }
    m
}

/// Re-expresses the algebra in a basis `e'_i = e_i + Σ_{j>i} c_ij e_j`,
/// which spans the same coordinate tails.
pub fn twist<R: Rng + ?Sized>(rng: &mut R, fa: &FilteredAlgebra) -> Result<FilteredAlgebra> {
    let n = fa.dim();
    let g = fa.algebra();
    let mut p = Matrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            p[(j, i)] = int(rng.gen_range(-1..=1));
        }
    }
    let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let v = g.bracket(&cols[a], &cols[b])?;
            let coords = solve(&p, &v)?.ok_or_else(|| Error::Internal("singular change of basis".into()))?;
            if !vector::is_zero(&coords) {
                brackets.push((a, b, coords));
            }
        }
    }
    let h = LieAlgebra::from_brackets(g.names().to_vec(), &brackets)?;
    FilteredAlgebra::new(h, Filtration::coordinate_tails(n))
}

/// `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Coordinates are zero with probability 1/3, otherwise small rationals.
pub fn random_functional<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Functional {
    Functional::new(
        (0..n)
            .map(|_| if rng.gen_ratio(1, 3) { Rational::zero() } else { small_rational(rng) })
            .collect(),
    )
}

pub fn random_int_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, radius: i64) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-radius..=radius))).collect()
}

pub fn random_rational_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows).map(|_| {
        (0..cols)
            .map(|_| if rng.gen_ratio(1, 2) { Rational::zero() } else { small_rational(rng) })
            .collect()
    });
    Matrix::from_rows(cols, data).expect("row length")
}

/// Subalgebra generated by one or two random vectors (basis vectors or
/// small integer combinations).
pub fn random_subalgebra<R: Rng + ?Sized>(rng: &mut R, g: &LieAlgebra) -> Result<Subspace> {
    let n = g.dim();
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let count = rng.gen_range(1..=2.min(n));
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let v = if rng.gen_ratio(1, 2) {
            vector::unit(n, rng.gen_range(0..n))
        } else {
            random_int_vector(rng, n, 1)
        };
        if !vector::is_zero(&v) {
            gens.push(v);
        }
    }
    g.generated_subalgebra(&gens)
}

/// Up to `terms` random monomials of degree `≤ max_degree` with small
/// rational coefficients.
pub fn random_module_element<R: Rng + ?Sized>(rng: &mut R, vars: usize, max_degree: u32, terms: usize) -> ModuleElement {
    let mut v = ModuleElement::zero(vars);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let monos = Monomial::of_degree(vars, d);
        if let Some(m) = monos.choose(rng) {
            v.add_term(m.clone(), small_rational(rng));
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_a_three_is_heisenberg() {
        let fa = upper_triangular(3);
        assert_eq!(fa.algebra().names(), ["e12", "e23", "e13"]);
        assert_eq!(fa.algebra().basis_bracket(0, 1), vector::unit(3, 2).as_slice());
        assert!(vector::is_zero(fa.algebra().basis_bracket(0, 2)));
        assert!(vector::is_zero(fa.algebra().basis_bracket(1, 2)));
        assert_eq!(fa.filtration(), &Filtration::coordinate_tails(3));
    }

    #[test]
    fn family_b_single_step_is_abelian_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fa = extension_chain(&mut rng, 1).unwrap();
        assert_eq!(fa.dim(), 1);
        assert!(fa.algebra().is_abelian());
    }

    #[test]
    fn generated_instances_validate() {
        for seed in 0..40 {
            for family in [Family::UpperTriangular, Family::Extension] {
                let spec = RandomSpec::new(seed, family, 1, 6).twisted(seed % 2 == 1);
                let fa = generate(&spec).unwrap();
                assert!(fa.algebra().validate().is_valid());
                assert!(fa.filtration().validate(fa.algebra()).is_valid());
                assert!(fa.dim() <= 6);
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = RandomSpec::new(9, Family::Extension, 4, 6).twisted(true);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let spec = RandomSpec::new(0, Family::Extension, 1, 9);
        assert!(generate(&spec).is_err());
    }
}
