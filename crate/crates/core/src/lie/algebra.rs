use num_traits::Zero;

use super::report::{ValidationReport, Violation};
use crate::error::{check_dim, Error, Result};
use crate::exact::{vector, EchelonBasis, Matrix, Rational, Subspace, Vector};

/// Finite-dimensional Lie algebra over ℚ given by structure constants.
///
/// `table[i * dim + j]` holds `[eᵢ, eⱼ]` in basis coordinates. Construction
/// only checks shapes; [`LieAlgebra::validate`] checks the axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: Vec<Vector>,
}

impl LieAlgebra {
    pub fn from_table(names: Vec<String>, table: Vec<Vec<Vector>>) -> Result<Self> {
        let n = names.len();
        check_dim(n, table.len())?;
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            check_dim(n, row.len())?;
            for v in row {
                check_dim(n, v.len())?;
                flat.push(v);
            }
        }
        Ok(Self { names, table: flat })
    }

    /// Fills `[eⱼ, eᵢ] = -[eᵢ, eⱼ]` for every listed bracket; unlisted
    /// brackets are zero.
    pub fn from_brackets(names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = names.len();
        let mut table = vec![vector::zeros(n); n * n];
        for (i, j, v) in brackets {
            if *i >= n || *j >= n {
                return Err(Error::InvalidArgument(format!("bracket index ({i}, {j}) out of range")));
            }
            check_dim(n, v.len())?;
            table[i * n + j] = v.clone();
            table[j * n + i] = v.iter().map(|x| -x).collect();
        }
        Ok(Self { names, table })
    }

    pub fn abelian(names: Vec<String>) -> Self {
        let n = names.len();
        Self {
            names,
            table: vec![vector::zeros(n); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[eᵢ, eⱼ]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        check_dim(n, x.len())?;
        check_dim(n, y.len())?;
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x`; column `j` is `[x, eⱼ]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        let n = self.dim();
        let cols: Result<Vec<Vector>> = (0..n)
            .map(|j| self.bracket(x, &vector::unit(n, j)))
            .collect();
        Matrix::from_columns(n, &cols?)
    }

    /// Span of `[a, b]` over basis vectors of `a` and `b`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut e = EchelonBasis::new(self.dim());
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                e.insert(&self.bracket(x, y)?)?;
            }
        }
        Ok(e.into_subspace())
    }

    pub fn is_subalgebra(&self, space: &Subspace) -> Result<bool> {
        self.bracket_space(space, space)?.leq(space)
    }

    /// Ideal of the whole algebra: `[𝔤, space] ⊆ space`.
    pub fn is_ideal(&self, space: &Subspace) -> Result<bool> {
        self.bracket_space(&Subspace::full(self.dim()), space)?.leq(space)
    }

    /// Smallest subalgebra containing the given vectors.
    pub fn generated_subalgebra(&self, vectors: &[Vector]) -> Result<Subspace> {
        let mut space = Subspace::span(self.dim(), vectors.iter().cloned())?;
        loop {
            let next = space.sum(&self.bracket_space(&space, &space)?)?;
            if next == space {
                return Ok(space);
            }
            space = next;
        }
    }

    /// 𝔤 ⊇ [𝔤,𝔤] ⊇ … until the sequence stabilizes (at most dim + 1 terms).
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_space(last, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| vector::is_zero(v))
    }

    /// Checks antisymmetry, the Jacobi identity and solvability, collecting
    /// every violation.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::new(self.names.clone());
        for i in 0..n {
            for j in i..n {
                let ij = self.basis_bracket(i, j);
                let ji = self.basis_bracket(j, i);
                if !vector::is_zero(&vector::add(ij, ji)) {
                    report.push(Violation::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let sum = self.jacobi_sum(i, j, k);
                    if !vector::is_zero(&sum) {
                        report.push(Violation::Jacobi { i, j, k, sum });
                    }
                }
            }
        }
        if report.is_valid() {
            let series = self.derived_series();
            if !series.last().is_some_and(Subspace::is_zero) {
                report.push(Violation::NotSolvable {
                    derived_dims: series.iter().map(Subspace::dim).collect(),
                });
            }
        }
        report
    }

    /// `[eᵢ,[eⱼ,eₖ]] + [eⱼ,[eₖ,eᵢ]] + [eₖ,[eᵢ,eⱼ]]`
    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim();
        let e = |a| vector::unit(n, a);
        let term = |a: usize, b: usize, c: usize| {
            self.bracket(&e(a), self.basis_bracket(b, c)).expect("dims")
        };
        let mut s = term(i, j, k);
        s = vector::add(&s, &term(j, k, i));
        vector::add(&s, &term(k, i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(names(&["x", "y", "z"]), &[(0, 1, vector::unit(3, 2))]).unwrap()
    }

    fn axb() -> LieAlgebra {
        LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, vector::unit(2, 1))]).unwrap()
    }

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg();
        assert_eq!(h.bracket(&vector::unit(3, 0), &vector::unit(3, 1)).unwrap(), vector::unit(3, 2));
        let v = vec![int(1), int(2), int(3)];
        assert!(vector::is_zero(&h.bracket(&v, &v).unwrap()));
        assert!(h.validate().is_valid());
    }

    #[test]
    fn axb_bracket_is_antisymmetric() {
        let g = axb();
        let yx = g.bracket(&vector::unit(2, 1), &vector::unit(2, 0)).unwrap();
        assert_eq!(yx, vec![int(0), int(-1)]);
    }

    #[test]
    fn bracket_rejects_wrong_length() {
        assert!(axb().bracket(&vector::unit(3, 0), &vector::unit(2, 0)).is_err());
    }

    #[test]
    fn cyclic_bracket_violates_jacobi() {
        // [x,y]=x, [y,z]=y, [z,x]=z
        let g = LieAlgebra::from_brackets(
            names(&["x", "y", "z"]),
            &[
                (0, 1, vector::unit(3, 0)),
                (1, 2, vector::unit(3, 1)),
                (2, 0, vector::unit(3, 2)),
            ],
        )
        .unwrap();
        let report = g.validate();
        let jacobi: Vec<_> = report
            .violations()
            .iter()
            .filter_map(|v| match v {
                Violation::Jacobi { sum, .. } => Some(sum.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(jacobi, vec![vec![int(1), int(1), int(1)]]);
    }

    #[test]
    fn abelian_is_valid() {
        for n in 0..5 {
            let g = LieAlgebra::abelian((0..n).map(|i| format!("e{i}")).collect());
            assert!(g.validate().is_valid());
            assert!(g.is_abelian());
        }
    }

    #[test]
    fn sl2_is_not_solvable() {
        // [h,e]=2e, [h,f]=-2f, [e,f]=h
        let g = LieAlgebra::from_brackets(
            names(&["h", "e", "f"]),
            &[
                (0, 1, vec![int(0), int(2), int(0)]),
                (0, 2, vec![int(0), int(0), int(-2)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .unwrap();
        let report = g.validate();
        assert!(matches!(report.violations(), [Violation::NotSolvable { .. }]));
    }

    #[test]
    fn inconsistent_table_violates_antisymmetry() {
        let n = 2;
        let mut table = vec![vec![vector::zeros(n); n]; n];
        table[0][1] = vector::unit(2, 1);
        table[1][1] = vector::unit(2, 0);
        let g = LieAlgebra::from_table(names(&["x", "y"]), table).unwrap();
        let report = g.validate();
        assert!(report.violations().contains(&Violation::Antisymmetry { i: 0, j: 1 }));
        assert!(report.violations().contains(&Violation::Antisymmetry { i: 1, j: 1 }));
    }

    #[test]
    fn derived_series_of_heisenberg() {
        let dims: Vec<_> = heisenberg().derived_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 1, 0]);
    }
}
