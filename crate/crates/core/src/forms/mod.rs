//! Polynomial forms in n commuting variables with rational coefficients,
//! the substitution action of the symmetric group on them, and the spaces
//! built from them: L_λ, Specht modules and the two-row spaces F_k.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactla::{format_rational, Rational};
use crate::perm::Permutation;

mod example4;
mod lambda;
mod space;
mod specht;
mod two_row;

pub use example4::{example4_check, Example4Component, Example4Report};
pub use lambda::{l_lambda, statement2_character, statement2_check, x_monomials};
pub use space::{d_kernel, FormSpace};
pub use specht::{
    specht_module, specht_poly, standard_specht_polys, theorem5_check, Theorem5Report,
};
pub use two_row::{
    elementary_symmetric, square_free_monomials, two_row_decomposition, TwoRowComponent,
    TwoRowReport,
};

/// Exponent vector. Ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// x_i, 0-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// x_i ↦ x_{σ(i)}.
    pub fn act(&self, sigma: &Permutation) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma.apply(i)] = e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x1^2·x3`, or `1` for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("·"))
        }
    }
}

/// A polynomial in `n` variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Form {
    pub fn zero(n: usize) -> Self {
        Form {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Form { n, terms }
    }

    /// x_i, 0-based.
    pub fn var(n: usize, i: usize) -> Self {
        Self::term(Monomial::var(n, i), Rational::one())
    }

    /// x_a − x_b, 0-based.
    pub fn difference(n: usize, a: usize, b: usize) -> Self {
        Self::var(n, a).sub(&Self::var(n, b))
    }

    /// Sum of all variables.
    pub fn linear_sum(n: usize) -> Self {
        (0..n).fold(Self::zero(n), |acc, i| acc.add(&Self::var(n, i)))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Form) {
        assert_eq!(self.n, other.n, "forms in different numbers of variables");
    }

    pub fn add(&self, other: &Form) -> Form {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.n);
        }
        Form {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Form) -> Form {
        self.assert_same_vars(other);
        let mut out = Form::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn product<'a, I>(n: usize, factors: I) -> Form
    where
        I: IntoIterator<Item = &'a Form>,
    {
        factors
            .into_iter()
            .fold(Form::constant(n, Rational::one()), |acc, f| acc.mul(f))
    }

    /// Substitution x_i ↦ x_{σ(i)}.
    pub fn act(&self, sigma: &Permutation) -> Result<Form> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: sigma.degree(),
            });
        }
        Ok(Form {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.act(sigma), c.clone()))
                .collect(),
        })
    }

    /// ∂/∂x_i.
    pub fn partial(&self, i: usize) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e > 0 {
                let mut exps = m.exps.clone();
                exps[i] -= 1;
                out.add_term(Monomial { exps }, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// D = Σ_i ∂/∂x_i. A form is annihilated by D exactly when it is
    /// invariant under the shift x_i ↦ x_i + t (over a field of
    /// characteristic zero).
    pub fn total_derivative(&self) -> Form {
        (0..self.n).fold(Form::zero(self.n), |acc, i| acc.add(&self.partial(i)))
    }

    /// Replaces every exponent e by `map[e]` (used for the degree swap
    /// x_i²x_j ↦ x_i x_j²). Exponents beyond `map` are kept.
    pub fn relabel_exponents(&self, map: &[u32]) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in &self.terms {
            let exps = m
                .exps
                .iter()
                .map(|&e| map.get(e as usize).copied().unwrap_or(e))
                .collect();
            out.add_term(Monomial { exps }, c.clone());
        }
        out
    }
}

impl fmt::Display for Form {
    /// Terms in decreasing monomial order, as `coef * monomial` joined by
    /// ` + ` (negative coefficients keep their sign); `0` for the zero form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{} * {}", format_rational(c), m))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
