use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};

use super::{AdaptedBasis, Monomial, UeaElement};
use crate::error::{check_dim, Error, Result};
use crate::exact::{vector, Rational, Subspace, Vector};
use crate::lie::{FilteredAlgebra, LieAlgebra};
use crate::polar::{skew_form, vergne_polarization, Functional};

/// Finite combination of basis vectors `x^μ·l` of an induced module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl ModuleElement {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(mono, Rational::one())
    }

    pub fn term(mono: Monomial, c: Rational) -> Self {
        let mut v = Self::zero(mono.vars());
        v.add_term(mono, c);
        v
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        debug_assert_eq!(mono.vars(), self.vars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &ModuleElement) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars);
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `c * x^2*y + …`, terms in descending graded-lex order.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.grlex_cmp(a));
        let mut out = String::new();
        for (i, m) in keys.into_iter().enumerate() {
            let c = &self.terms[m];
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&format!("{} * {}", c.abs(), m.render(names)));
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.vars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// `U(𝔤) ⊗_{U(p)} K_χ` for a character `χ` of a subalgebra `p`, with basis
/// the ordered complement monomials `x^μ·l`.
pub struct InducedModule {
    basis: AdaptedBasis,
    character: Vector,
    cache: Mutex<HashMap<(usize, Monomial), ModuleElement>>,
}

impl fmt::Debug for InducedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InducedModule")
            .field("basis", &self.basis)
            .field("character", &self.character)
            .finish()
    }
}

impl Clone for InducedModule {
    fn clone(&self) -> Self {
        Self {
            basis: self.basis.clone(),
            character: self.character.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl InducedModule {
    /// `character` lists the values on the RREF basis of `p`; it must vanish
    /// on `[p, p]`.
    pub fn new(algebra: &LieAlgebra, p: &Subspace, character: Vector) -> Result<Self> {
        check_dim(p.dim(), character.len())?;
        if !algebra.is_subalgebra(p)? {
            return Err(Error::NotSubalgebra);
        }
        let basis = AdaptedBasis::new(algebra, p)?;
        let m = basis.complement_len();
        for a in m..basis.dim() {
            for b in a + 1..basis.dim() {
                let mut value = Rational::zero();
                for (k, c) in basis.bracket_terms(a, b) {
                    debug_assert!(*k >= m);
                    value += c * &character[k - m];
                }
                if !value.is_zero() {
                    return Err(Error::NotCharacter);
                }
            }
        }
        Ok(Self {
            basis,
            character,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Induced from `f|_p`.
    pub fn from_functional(algebra: &LieAlgebra, p: &Subspace, f: &Functional) -> Result<Self> {
        check_dim(algebra.dim(), f.dim())?;
        if !skew_form(algebra, f, p)?.is_zero() {
            return Err(Error::NotCharacter);
        }
        Self::new(algebra, p, f.values_on(p)?)
    }

    /// `M(f)`, induced from the Vergne polarization.
    pub fn vergne(fa: &FilteredAlgebra, f: &Functional) -> Result<Self> {
        let pol = vergne_polarization(fa, f)?;
        Self::from_functional(fa.algebra(), pol.space(), f)
    }

    pub fn basis(&self) -> &AdaptedBasis {
        &self.basis
    }

    pub fn character(&self) -> &[Rational] {
        &self.character
    }

    pub fn algebra_dim(&self) -> usize {
        self.basis.dim()
    }

    /// Number of PBW variables `m`.
    pub fn vars(&self) -> usize {
        self.basis.complement_len()
    }

    pub fn variable_names(&self) -> &[String] {
        &self.basis.names()[..self.vars()]
    }

    /// The cyclic vector `l = 1 ⊗ 1`.
    pub fn cyclic(&self) -> ModuleElement {
        ModuleElement::monomial(Monomial::one(self.vars()))
    }

    pub fn render(&self, v: &ModuleElement) -> String {
        v.render(self.variable_names())
    }

    fn check(&self, v: &ModuleElement) -> Result<()> {
        if v.vars != self.vars() {
            return Err(Error::ModuleMismatch(format!(
                "element has {} variables, module has {}",
                v.vars,
                self.vars()
            )));
        }
        Ok(())
    }

    /// `u_a · x^μ l` for an adapted basis vector `u_a`.
    fn act_adapted(&self, a: usize, mono: &Monomial) -> ModuleElement {
        let key = (a, mono.clone());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let m = self.vars();
        let result = match mono.first_var() {
            None if a >= m => ModuleElement::term(mono.clone(), self.character[a - m].clone()),
            None => ModuleElement::monomial(mono.times_var(a)),
            Some(i) if a <= i => ModuleElement::monomial(mono.times_var(a)),
            Some(i) => {
                // u_a u_i ρ = u_i (u_a ρ) + [u_a, u_i] ρ
                let rest = mono.without_var(i);
                let inner = self.act_adapted(a, &rest);
                let mut out = ModuleElement::zero(m);
                for (nu, c) in inner.terms() {
                    out.add_scaled(c, &self.act_adapted(i, nu));
                }
                for (k, c) in self.basis.bracket_terms(a, i) {
                    out.add_scaled(c, &self.act_adapted(*k, &rest));
                }
                out
            }
        };
        self.cache.lock().expect("cache lock").insert(key, result.clone());
        result
    }

    /// `x · v` for `x ∈ 𝔤` in standard coordinates.
    pub fn act(&self, x: &[Rational], v: &ModuleElement) -> Result<ModuleElement> {
        check_dim(self.algebra_dim(), x.len())?;
        self.check(v)?;
        let coords = self.basis.to_adapted(x)?;
        let mut out = ModuleElement::zero(self.vars());
        for (mono, c) in v.terms() {
            for (a, xa) in coords.iter().enumerate() {
                if !xa.is_zero() {
                    out.add_scaled(&(c * xa), &self.act_adapted(a, mono));
                }
            }
        }
        Ok(out)
    }

    /// `e_i · v` for the `i`-th standard basis vector.
    pub fn act_basis(&self, i: usize, v: &ModuleElement) -> Result<ModuleElement> {
        if i >= self.algebra_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra_dim(),
                found: i + 1,
            });
        }
        self.act(&vector::unit(self.algebra_dim(), i), v)
    }

    /// `u · v`, where the letters of `u` index the standard basis of 𝔤;
    /// each word acts right to left.
    pub fn act_uea(&self, u: &UeaElement, v: &ModuleElement) -> Result<ModuleElement> {
        self.check(v)?;
        let mut out = ModuleElement::zero(self.vars());
        for (word, c) in u.terms() {
            let mut w = v.clone();
            for &letter in word.iter().rev() {
                w = self.act_basis(letter, &w)?;
                if w.is_zero() {
                    break;
                }
            }
            out.add_scaled(c, &w);
        }
        Ok(out)
    }

    /// Image of a normal-ordered element (letters in the adapted basis)
    /// applied to `l`: complement letters give the monomial, the trailing
    /// `p`-letters are evaluated through the character.
    pub fn project(&self, u: &UeaElement) -> Result<ModuleElement> {
        if !u.is_normal_ordered() {
            return Err(Error::InvalidArgument("element is not normal ordered".into()));
        }
        let m = self.vars();
        let mut out = ModuleElement::zero(m);
        for (word, c) in u.terms() {
            let mut exps = vec![0u32; m];
            let mut coef = c.clone();
            for &letter in word {
                if letter >= self.algebra_dim() {
                    return Err(Error::DimensionMismatch {
                        expected: self.algebra_dim(),
                        found: letter + 1,
                    });
                }
                if letter < m {
                    exps[letter] += 1;
                } else {
                    coef *= &self.character[letter - m];
                }
            }
            out.add_term(Monomial::from_exponents(exps), coef);
        }
        Ok(out)
    }

    /// Rewrites a word in standard letters into adapted letters.
    pub fn to_adapted_letters(&self, u: &UeaElement) -> Result<UeaElement> {
        let n = self.algebra_dim();
        let images: Vec<Vector> = (0..n)
            .map(|i| self.basis.to_adapted(&vector::unit(n, i)))
            .collect::<Result<_>>()?;
        let mut out = UeaElement::zero();
        for (word, c) in u.terms() {
            let mut acc = UeaElement::term(Vec::new(), c.clone());
            for &letter in word {
                let img = images.get(letter).ok_or(Error::DimensionMismatch {
                    expected: n,
                    found: letter + 1,
                })?;
                acc = &acc * &UeaElement::linear(img);
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}
