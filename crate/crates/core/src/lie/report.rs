use std::fmt;

use super::format_linear;
use crate::exact::Vector;

/// One failed axiom, with the basis indices or filtration member that
/// witnesses it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// `[eᵢ, eⱼ] ≠ -[eⱼ, eᵢ]` (for `i == j`: `[eᵢ, eᵢ] ≠ 0`).
    Antisymmetry { i: usize, j: usize },
    /// The cyclic Jacobi sum over `(eᵢ, eⱼ, eₖ)` equals `sum ≠ 0`.
    Jacobi { i: usize, j: usize, k: usize, sum: Vector },
    NotSolvable { derived_dims: Vec<usize> },
    EmptyFiltration,
    MemberAmbient { member: usize, expected: usize, found: usize },
    FirstNotWhole { dim: usize },
    LastNotZero { dim: usize },
    /// Member `member` is not contained in member `member - 1`.
    NotNested { member: usize },
    CodimensionStep { member: usize, step: usize },
    /// `[e_basis, v] = bracket` leaves member `member`.
    NotIdeal { member: usize, basis: usize, element: Vector, bracket: Vector },
    BracketNotPreserved { i: usize, j: usize },
    FiltrationNotPreserved { member: usize },
    FiltrationLength { source: usize, target: usize },
}

/// Collected violations; empty means valid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    names: Vec<String>,
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(names: Vec<String>) -> Self {
        Self {
            names,
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Human-readable lines, one per violation.
    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(|v| self.describe(v)).collect()
    }

    fn describe(&self, v: &Violation) -> String {
        let n = |i: usize| self.names.get(i).map_or_else(|| format!("e{i}"), Clone::clone);
        let lin = |x: &Vector| format_linear(&self.names, x);
        match v {
            Violation::Antisymmetry { i, j } if i == j => {
                format!("antisymmetry: [{0}, {0}] is nonzero", n(*i))
            }
            Violation::Antisymmetry { i, j } => {
                format!("antisymmetry: [{a}, {b}] != -[{b}, {a}]", a = n(*i), b = n(*j))
            }
            Violation::Jacobi { i, j, k, sum } => format!(
                "jacobi: cyclic sum over ({}, {}, {}) equals {}",
                n(*i),
                n(*j),
                n(*k),
                lin(sum)
            ),
            Violation::NotSolvable { derived_dims } => {
                format!("not solvable: derived series dimensions {derived_dims:?}")
            }
            Violation::EmptyFiltration => "filtration has no members".to_string(),
            Violation::MemberAmbient {
                member,
                expected,
                found,
            } => format!("member {member} lives in dimension {found}, expected {expected}"),
            Violation::FirstNotWhole { dim } => {
                format!("first member has dimension {dim}, expected the whole algebra")
            }
            Violation::LastNotZero { dim } => {
                format!("last member has dimension {dim}, expected zero")
            }
            Violation::NotNested { member } => {
                format!("member {member} is not contained in member {}", member - 1)
            }
            Violation::CodimensionStep { member, step } => {
                format!("member {member} has codimension {step} in member {}", member - 1)
            }
            Violation::NotIdeal {
                member,
                basis,
                element,
                bracket,
            } => format!(
                "member {member} is not an ideal: [{}, {}] = {} lies outside it",
                n(*basis),
                lin(element),
                lin(bracket)
            ),
            Violation::BracketNotPreserved { i, j } => {
                format!("map does not preserve the bracket [{}, {}]", n(*i), n(*j))
            }
            Violation::FiltrationNotPreserved { member } => {
                format!("map sends source member {member} outside target member {member}")
            }
            Violation::FiltrationLength { source, target } => {
                format!("filtration lengths differ: source {source}, target {target}")
            }
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "  valid");
        }
        let lines = self.messages();
        write!(f, "{}", crate::error::Lines(&lines))
    }
}
