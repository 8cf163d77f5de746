use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::AdaptedBasis;
use crate::error::{check_dim, Result};
use crate::exact::Rational;

/// Element of U(𝔤) as a combination of words in basis letters.
///
/// Which basis the letters refer to is up to the caller: [`normal_order`]
/// reads them in an [`AdaptedBasis`], the module action reads them as
/// indices of the standard basis of 𝔤.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct UeaElement {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(letters: Vec<usize>) -> Self {
        Self::term(letters, Rational::one())
    }

    pub fn term(letters: Vec<usize>, c: Rational) -> Self {
        let mut u = Self::zero();
        u.add_term(letters, c);
        u
    }

    /// The degree-one element `Σ xᵢ eᵢ`.
    pub fn linear(x: &[Rational]) -> Self {
        let mut u = Self::zero();
        for (i, c) in x.iter().enumerate() {
            u.add_term(vec![i], c.clone());
        }
        u
    }

    pub fn add_term(&mut self, letters: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(letters);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coefficient(&self, letters: &[usize]) -> Rational {
        self.terms.get(letters).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Every word is weakly ascending.
    pub fn is_normal_ordered(&self) -> bool {
        self.terms.keys().all(|w| w.windows(2).all(|p| p[0] <= p[1]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("*")
                };
                format!("{c} * {word}")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.terms.keys().flatten().copied().max().map_or(0, |m| m + 1);
        let names: Vec<String> = (0..max).map(|i| format!("e{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

impl Add<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        self + &(-rhs)
    }
}

impl Sub for UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: UeaElement) -> UeaElement {
        &self - &rhs
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&-Rational::one())
    }
}

/// Concatenation product.
impl Mul<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }
}

/// Rewrites `u` (letters in `basis`) into ascending words by repeatedly
/// replacing an adjacent descent `u_j u_i` (j > i) with
/// `u_i u_j + [u_j, u_i]`.
pub fn normal_order(u: &UeaElement, basis: &AdaptedBasis) -> Result<UeaElement> {
    let n = basis.dim();
    if let Some(&bad) = u.terms.keys().flatten().find(|&&i| i >= n) {
        check_dim(n, bad + 1)?;
    }
    let mut pending: BTreeMap<Vec<usize>, Rational> = u.terms.clone();
    let mut out = UeaElement::zero();
    // Longest words first so that rewrites of equal words merge before
    // they are expanded.
    while let Some((w, c)) = pop_longest(&mut pending) {
        if c.is_zero() {
            continue;
        }
        let Some(pos) = w.windows(2).position(|p| p[0] > p[1]) else {
            out.add_term(w, c);
            continue;
        };
        let (j, i) = (w[pos], w[pos + 1]);
        let mut swapped = w.clone();
        swapped.swap(pos, pos + 1);
        push(&mut pending, swapped, c.clone());
        for (k, b) in basis.bracket_terms(j, i) {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..pos]);
            shorter.push(*k);
            shorter.extend_from_slice(&w[pos + 2..]);
            push(&mut pending, shorter, &c * b);
        }
    }
    Ok(out)
}

fn pop_longest(map: &mut BTreeMap<Vec<usize>, Rational>) -> Option<(Vec<usize>, Rational)> {
    let key = map.keys().max_by_key(|w| w.len())?.clone();
    map.remove_entry(&key)
}

fn push(map: &mut BTreeMap<Vec<usize>, Rational>, w: Vec<usize>, c: Rational) {
    *map.entry(w).or_insert_with(Rational::zero) += c;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, vector::unit};
    use crate::lie::LieAlgebra;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(vec!["x".into(), "y".into(), "z".into()], &[(0, 1, unit(3, 2))]).unwrap()
    }

    #[test]
    fn heisenberg_yx() {
        let b = AdaptedBasis::standard(&heisenberg());
        let out = normal_order(&UeaElement::word(vec![1, 0]), &b).unwrap();
        let expected = &UeaElement::word(vec![0, 1]) - &UeaElement::word(vec![2]);
        assert_eq!(out, expected);
    }

    #[test]
    fn axb_yx() {
        let g = LieAlgebra::from_brackets(vec!["x".into(), "y".into()], &[(0, 1, unit(2, 1))]).unwrap();
        let b = AdaptedBasis::standard(&g);
        let out = normal_order(&UeaElement::word(vec![1, 0]), &b).unwrap();
        let expected = &UeaElement::word(vec![0, 1]) - &UeaElement::word(vec![1]);
        assert_eq!(out, expected);
    }

    #[test]
    fn ordered_words_are_fixed() {
        let b = AdaptedBasis::standard(&heisenberg());
        let u = &UeaElement::word(vec![0, 0, 1, 2]) + &UeaElement::term(vec![], int(3));
        assert_eq!(normal_order(&u, &b).unwrap(), u);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let b = AdaptedBasis::standard(&heisenberg());
        let u = UeaElement::word(vec![1, 0]) - (&UeaElement::word(vec![0, 1]) - &UeaElement::word(vec![2]));
        assert!(normal_order(&u, &b).unwrap().is_zero());
    }

    #[test]
    fn out_of_range_letter_is_an_error() {
        let b = AdaptedBasis::standard(&heisenberg());
        assert!(normal_order(&UeaElement::word(vec![3]), &b).is_err());
    }
}
