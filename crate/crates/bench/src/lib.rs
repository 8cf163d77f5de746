//! Fixtures shared by the benchmarks.

use solvrep_core::problem::builtin;
use solvrep_core::random::{generate, Family, RandomSpec};
use solvrep_core::{FilteredAlgebra, Functional};

pub fn heisenberg() -> (FilteredAlgebra, Functional) {
    (builtin("heisenberg").expect("bundled").algebra, Functional::from_ints(&[0, 0, 1]))
}

/// Strictly upper-triangular `n x n` matrices with a generic functional.
pub fn triangular(n: usize) -> (FilteredAlgebra, Functional) {
    let fa = solvrep_core::random::upper_triangular(n);
    let dim = fa.dim();
    let f = Functional::from_ints(&(1..=dim as i64).map(|i| i % 3 - 1).collect::<Vec<_>>());
    (fa, f)
}

/// A fixed iterated extension of dimension `dim`.
pub fn extension(dim: usize, seed: u64) -> (FilteredAlgebra, Functional) {
    let fa = generate(&RandomSpec::new(seed, Family::Extension, dim, dim)).expect("generator is valid");
    let f = Functional::from_ints(&(0..dim as i64).map(|i| (i * 7 + 3) % 5 - 2).collect::<Vec<_>>());
    (fa, f)
}
