use super::report::{ValidationReport, Violation};
use super::{Filtration, LieAlgebra};
use crate::error::Result;
use crate::exact::{vector, Matrix, Subspace, Vector};

/// Linear map between algebras with filtrations, as a `target × source`
/// matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Homomorphism {
    matrix: Matrix,
}

impl Homomorphism {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[crate::exact::Rational]) -> Result<Vector> {
        self.matrix.mul_vec(x)
    }

    /// Checks `L[x, y] = [Lx, Ly]` on basis pairs and `L(sᵢ) ⊆ tᵢ`.
    pub fn validate(
        &self,
        source: &LieAlgebra,
        source_filtration: &Filtration,
        target: &LieAlgebra,
        target_filtration: &Filtration,
    ) -> ValidationReport {
        let mut report = ValidationReport::new(source.names().to_vec());
        let n = source.dim();
        if self.matrix.cols() != n || self.matrix.rows() != target.dim() {
            report.push(Violation::MemberAmbient {
                member: 0,
                expected: n,
                found: self.matrix.cols(),
            });
            return report;
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply(source.basis_bracket(i, j)).expect("dims");
                let li = self.apply(&vector::unit(n, i)).expect("dims");
                let lj = self.apply(&vector::unit(n, j)).expect("dims");
                let rhs = target.bracket(&li, &lj).expect("dims");
                if lhs != rhs {
                    report.push(Violation::BracketNotPreserved { i, j });
                }
            }
        }
        if source_filtration.len() != target_filtration.len() {
            report.push(Violation::FiltrationLength {
                source: source_filtration.len(),
                target: target_filtration.len(),
            });
            return report;
        }
        let members = source_filtration
            .members()
            .iter()
            .zip(target_filtration.members());
        for (member, (s, t)) in members.enumerate() {
            let ok = s.image(&self.matrix).and_then(|img| img.leq(t));
            if !matches!(ok, Ok(true)) {
                report.push(Violation::FiltrationNotPreserved { member });
            }
        }
        report
    }
}

/// `𝔤 × 𝔤` with the interleaved filtration
/// `𝔤₀×𝔤₀ ⊇ 𝔤₀×𝔤₁ ⊇ 𝔤₁×𝔤₁ ⊇ … ⊇ 𝔤ₖ×𝔤ₖ`.
pub fn product_algebra(algebra: &LieAlgebra, filtration: &Filtration) -> (LieAlgebra, Filtration) {
    let n = algebra.dim();
    let names = algebra
        .names()
        .iter()
        .map(|s| format!("{s}_1"))
        .chain(algebra.names().iter().map(|s| format!("{s}_2")))
        .collect();
    let zeros = vector::zeros(n);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = algebra.basis_bracket(i, j);
            if vector::is_zero(b) {
                continue;
            }
            brackets.push((i, j, vector::concat(b, &zeros)));
            brackets.push((n + i, n + j, vector::concat(&zeros, b)));
        }
    }
    let product = LieAlgebra::from_brackets(names, &brackets).expect("indices in range");
    let members = filtration.members();
    let mut chain = Vec::with_capacity(2 * members.len());
    for w in members.windows(2) {
        chain.push(w[0].product(&w[0]));
        chain.push(w[0].product(&w[1]));
    }
    if let Some(last) = members.last() {
        chain.push(last.product(last));
    }
    (product, Filtration::new(chain))
}

/// Diagonal map `x ↦ (x, x)` together with the source filtration stretched
/// to the length of `s × s` (`𝔤₀, 𝔤₁, 𝔤₁, 𝔤₂, 𝔤₂, …`), which is what the
/// diagonal inherits from `s × s`.
pub fn diagonal_embedding(algebra: &LieAlgebra, filtration: &Filtration) -> (Homomorphism, Filtration) {
    let n = algebra.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|i| vector::concat(&vector::unit(n, i), &vector::unit(n, i)))
        .collect();
    let matrix = Matrix::from_columns(2 * n, &columns).expect("column length 2n");
    let members = filtration.members();
    let mut stretched: Vec<Subspace> = Vec::with_capacity(2 * members.len());
    if let Some(first) = members.first() {
        stretched.push(first.clone());
    }
    for m in members.iter().skip(1) {
        stretched.push(m.clone());
        stretched.push(m.clone());
    }
    (Homomorphism::new(matrix), Filtration::new(stretched))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vector::unit;
    use crate::lie::Subalgebra;

    fn axb() -> (LieAlgebra, Filtration) {
        let g = LieAlgebra::from_brackets(vec!["x".into(), "y".into()], &[(0, 1, unit(2, 1))]).unwrap();
        (g, Filtration::coordinate_tails(2))
    }

    #[test]
    fn axb_product_dimensions() {
        let (g, s) = axb();
        let (p, ps) = product_algebra(&g, &s);
        assert_eq!(p.dim(), 4);
        let dims: Vec<_> = ps.distinct_members().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 3, 2, 1, 0]);
        assert!(p.validate().is_valid());
        assert!(ps.validate(&p).is_valid());
    }

    #[test]
    fn product_of_abelian_is_abelian() {
        let g = LieAlgebra::abelian(vec!["a".into(), "b".into()]);
        let (p, _) = product_algebra(&g, &Filtration::coordinate_tails(2));
        assert!(p.is_abelian());
    }

    #[test]
    fn diagonal_is_a_filtered_homomorphism() {
        let (g, s) = axb();
        let (p, ps) = product_algebra(&g, &s);
        let (d, stretched) = diagonal_embedding(&g, &s);
        assert!(d.validate(&g, &stretched, &p, &ps).is_valid());
        assert!(stretched.equals(&s));
    }

    #[test]
    fn diagonal_inherits_the_original_filtration() {
        let (g, s) = axb();
        let (p, ps) = product_algebra(&g, &s);
        let (d, stretched) = diagonal_embedding(&g, &s);
        let diag_space = Subspace::span(4, (0..2).map(|j| d.matrix().column(j))).unwrap();
        let diag = Subalgebra::new(&p, diag_space).unwrap();
        let induced = diag.induced_filtration(&ps).unwrap();
        // local coordinates of the diagonal are (x,x), (y,y) in RREF order
        assert_eq!(induced, stretched);
        assert!(induced.equals(&s));
    }

    #[test]
    fn bracket_breaking_map_is_reported() {
        let (g, s) = axb();
        // x ↦ x, y ↦ x does not preserve [x, y] = y
        let m = Matrix::from_columns(2, &[unit(2, 0), unit(2, 0)]).unwrap();
        let report = Homomorphism::new(m).validate(&g, &s, &g, &s);
        assert!(report.violations().contains(&Violation::BracketNotPreserved { i: 0, j: 1 }));
    }
}
