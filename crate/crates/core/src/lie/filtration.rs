use super::report::{ValidationReport, Violation};
use super::LieAlgebra;
use crate::error::Result;
use crate::exact::{vector, Subspace};

/// Chain of ideals `𝔤 = 𝔤₀ ⊇ 𝔤₁ ⊇ … ⊇ 𝔤ₖ = 0`. Repeated members are kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filtration {
    members: Vec<Subspace>,
}

impl Filtration {
    /// Stores the chain as given; see [`Filtration::validate`].
    pub fn new(members: Vec<Subspace>) -> Self {
        Self { members }
    }

    /// `span{eᵢ, …, e_{n-1}}` for `i = 0..=n`.
    pub fn coordinate_tails(n: usize) -> Self {
        let members = (0..=n)
            .map(|i| Subspace::span(n, (i..n).map(|j| vector::unit(n, j))).expect("unit vectors"))
            .collect();
        Self { members }
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Subspace {
        &self.members[i]
    }

    /// Number of steps `k`.
    pub fn len(&self) -> usize {
        self.members.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// First member strictly smaller than the whole algebra, with its index.
    pub fn first_proper(&self) -> Option<(usize, &Subspace)> {
        self.members.iter().enumerate().find(|(_, m)| !m.is_full())
    }

    /// Members with consecutive repeats collapsed.
    pub fn distinct_members(&self) -> Vec<Subspace> {
        let mut out: Vec<Subspace> = Vec::new();
        for m in &self.members {
            if out.last() != Some(m) {
                out.push(m.clone());
            }
        }
        out
    }

    /// Equality up to multiplicity of members.
    pub fn equals(&self, other: &Filtration) -> bool {
        self.distinct_members() == other.distinct_members()
    }

    /// Endpoints, nesting, codimension steps in {0, 1}, and the ideal
    /// property against the whole algebra.
    pub fn validate(&self, algebra: &LieAlgebra) -> ValidationReport {
        let n = algebra.dim();
        let mut report = ValidationReport::new(algebra.names().to_vec());
        let Some(first) = self.members.first() else {
            report.push(Violation::EmptyFiltration);
            return report;
        };
        for (member, s) in self.members.iter().enumerate() {
            if s.ambient_dim() != n {
                report.push(Violation::MemberAmbient {
                    member,
                    expected: n,
                    found: s.ambient_dim(),
                });
            }
        }
        if !report.is_valid() {
            return report;
        }
        if !first.is_full() {
            report.push(Violation::FirstNotWhole { dim: first.dim() });
        }
        let last = self.members.last().expect("nonempty");
        if !last.is_zero() {
            report.push(Violation::LastNotZero { dim: last.dim() });
        }
        for member in 1..self.members.len() {
            let (outer, inner) = (&self.members[member - 1], &self.members[member]);
            if !inner.leq(outer).expect("same ambient") {
                report.push(Violation::NotNested { member });
            } else if outer.dim() - inner.dim() > 1 {
                report.push(Violation::CodimensionStep {
                    member,
                    step: outer.dim() - inner.dim(),
                });
            }
        }
        for (member, s) in self.members.iter().enumerate() {
            if let Some(v) = ideal_witness(algebra, s) {
                report.push(Violation::NotIdeal {
                    member,
                    basis: v.0,
                    element: v.1,
                    bracket: v.2,
                });
            }
        }
        report
    }
}

fn ideal_witness(
    algebra: &LieAlgebra,
    space: &Subspace,
) -> Option<(usize, crate::exact::Vector, crate::exact::Vector)> {
    let n = algebra.dim();
    for a in 0..n {
        for v in space.basis_vectors() {
            let b = algebra.bracket(&vector::unit(n, a), v).expect("dims");
            if !space.contains(&b).expect("dims") {
                return Some((a, v.to_vec(), b));
            }
        }
    }
    None
}

/// Restriction of `filtration` to a subalgebra; members are intersections,
/// still in the coordinates of the parent.
pub(crate) fn intersect_members(filtration: &Filtration, space: &Subspace) -> Result<Vec<Subspace>> {
    filtration.members.iter().map(|m| m.intersect(space)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vector::unit;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["x".into(), "y".into(), "z".into()],
            &[(0, 1, unit(3, 2))],
        )
        .unwrap()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, idx.iter().map(|&i| unit(n, i))).unwrap()
    }

    #[test]
    fn heisenberg_standard_filtration_is_valid() {
        let s = Filtration::coordinate_tails(3);
        assert!(s.validate(&heisenberg()).is_valid());
    }

    #[test]
    fn non_ideal_member_is_reported() {
        let s = Filtration::new(vec![Subspace::full(3), span(3, &[0]), Subspace::zero(3)]);
        let report = s.validate(&heisenberg());
        let witness = report.violations().iter().find_map(|v| match v {
            Violation::NotIdeal { member, bracket, .. } => Some((*member, bracket.clone())),
            _ => None,
        });
        // [y, x] = -z
        let minus_z: Vec<_> = unit(3, 2).iter().map(|c| -c).collect();
        assert_eq!(witness, Some((1, minus_z)));
        // the step from the whole algebra down to span{x} skips a dimension
        assert!(report
            .violations()
            .iter()
            .any(|v| matches!(v, Violation::CodimensionStep { member: 1, step: 2 })));
    }

    #[test]
    fn missing_steps_are_reported() {
        let s = Filtration::new(vec![Subspace::full(3), Subspace::full(3), Subspace::zero(3)]);
        let report = s.validate(&heisenberg());
        assert!(report
            .violations()
            .contains(&Violation::CodimensionStep { member: 2, step: 3 }));
    }

    #[test]
    fn endpoints_are_checked() {
        let s = Filtration::new(vec![span(3, &[1, 2]), span(3, &[2])]);
        let report = s.validate(&heisenberg());
        assert!(report.violations().contains(&Violation::FirstNotWhole { dim: 2 }));
        assert!(report.violations().contains(&Violation::LastNotZero { dim: 1 }));
    }

    #[test]
    fn equality_ignores_multiplicity() {
        let g1 = span(3, &[1, 2]);
        let a = Filtration::new(vec![Subspace::full(3), g1.clone(), Subspace::zero(3)]);
        let b = Filtration::new(vec![
            Subspace::full(3),
            Subspace::full(3),
            g1.clone(),
            g1,
            Subspace::zero(3),
        ]);
        assert!(a.equals(&b));
        assert!(a.equals(&a));
        let c = Filtration::new(vec![Subspace::full(3), span(3, &[0, 2]), Subspace::zero(3)]);
        assert!(!a.equals(&c));
    }
}
