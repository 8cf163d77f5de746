use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `x₁^{k₁} ⋯ x_m^{k_m}` over the complement variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Self(vec![0; vars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut m = Self::one(vars);
        m.0[i] = 1;
        m
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// Index of the first variable with a nonzero exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&k| k > 0)
    }

    pub fn times_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// Divides by `x_i`; panics if `x_i` does not divide.
    pub fn without_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.0[i] = m.0[i].checked_sub(1).expect("variable divides");
        m
    }

    /// Graded-lex order: total degree first, then the exponent of `x₁`,
    /// then `x₂`, and so on (larger exponent = larger monomial).
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// All monomials in `vars` variables of total degree exactly `d`, in
    /// ascending graded-lex order.
    pub fn of_degree(vars: usize, d: u32) -> Vec<Monomial> {
        fn rec(vars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == vars {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in 0..=left {
                prefix.push(k);
                rec(vars, left - k, prefix, out);
                prefix.pop();
            }
        }
        if vars == 0 {
            return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(vars, d, &mut Vec::with_capacity(vars), &mut out);
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.vars()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}
