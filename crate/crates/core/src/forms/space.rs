use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Form, Monomial};
use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::exactla::{restricted_action, Rational, RationalMatrix, Subspace};
use crate::partitions::Partition;
use crate::perm::Permutation;

/// Ordered monomial basis shared by all subspaces of one ambient space.
#[derive(Debug, PartialEq, Eq)]
struct Ambient {
    n: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// A subspace of the span of a fixed, ordered set of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    ambient: Arc<Ambient>,
    subspace: Subspace,
}

impl FormSpace {
    /// The full span of `monomials`, which are sorted and deduplicated.
    pub fn full(n: usize, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort();
        monomials.dedup();
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let dim = monomials.len();
        FormSpace {
            ambient: Arc::new(Ambient {
                n,
                monomials,
                index,
            }),
            subspace: Subspace::full(dim),
        }
    }

    /// Span of `forms` inside the ambient space of `self`.
    pub fn span_of(&self, forms: &[Form]) -> Result<FormSpace> {
        let vectors = forms
            .iter()
            .map(|f| self.coordinates_in_ambient(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_subspace(Subspace::span(self.ambient_dim(), vectors)?))
    }

    pub fn with_subspace(&self, subspace: Subspace) -> FormSpace {
        assert_eq!(subspace.ambient_dim(), self.ambient_dim());
        FormSpace {
            ambient: Arc::clone(&self.ambient),
            subspace,
        }
    }

    pub fn nvars(&self) -> usize {
        self.ambient.n
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.ambient.monomials
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.monomials.len()
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Coefficient vector over the ambient monomials; fails if `f` uses a
    /// monomial outside them.
    pub fn coordinates_in_ambient(&self, f: &Form) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (m, c) in f.terms() {
            let i = *self.ambient.index.get(m).ok_or_else(|| {
                Error::InvalidFilling(format!("monomial {m} lies outside the ambient space"))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn form_of(&self, v: &[Rational]) -> Form {
        Form {
            n: self.nvars(),
            terms: self
                .ambient
                .monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Basis forms, from the reduced echelon basis of the subspace.
    pub fn basis_forms(&self) -> Vec<Form> {
        self.subspace
            .basis()
            .iter()
            .map(|v| self.form_of(v))
            .collect()
    }

    pub fn contains(&self, f: &Form) -> Result<bool> {
        match self.coordinates_in_ambient(f) {
            Ok(v) => self.subspace.contains(&v),
            Err(_) => Ok(false),
        }
    }

    fn check_ambient(&self, other: &FormSpace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &FormSpace) -> Result<FormSpace> {
        self.check_ambient(other)?;
        Ok(self.with_subspace(self.subspace.intersect(&other.subspace)?))
    }

    pub fn sum(&self, other: &FormSpace) -> Result<FormSpace> {
        self.check_ambient(other)?;
        Ok(self.with_subspace(self.subspace.sum(&other.subspace)?))
    }

    /// Matrix of σ on the subspace in its echelon basis; `NotInvariant` if
    /// σ moves the subspace.
    pub fn action_matrix(&self, sigma: &Permutation) -> Result<RationalMatrix> {
        restricted_action(&self.subspace, |v| {
            let image = self.form_of(v).act(sigma)?;
            self.coordinates_in_ambient(&image)
                .map_err(|_| Error::NotInvariant)
        })
    }

    /// Invariant under the whole group, checked on the adjacent
    /// transpositions that generate it.
    pub fn is_invariant(&self) -> Result<bool> {
        for g in Permutation::generators(self.nvars()) {
            match self.action_matrix(&g) {
                Ok(_) => {}
                Err(Error::NotInvariant) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    }

    /// Character of the restricted action, one trace per cycle type.
    pub fn character(&self) -> Result<ClassFunction> {
        let n = self.nvars();
        let mut err = None;
        let chi = ClassFunction::from_fn(n, |rho: &Partition| {
            match self.action_matrix(&Permutation::of_cycle_type(rho)) {
                Ok(m) => m.trace(),
                Err(e) => {
                    err.get_or_insert(e);
                    Rational::zero()
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(chi),
        }
    }
}

/// Kernel of D = Σ ∂/∂x_i on the span of `space`'s ambient monomials.
pub fn d_kernel(space: &FormSpace) -> Result<FormSpace> {
    let mut targets: BTreeMap<Monomial, usize> = BTreeMap::new();
    let images: Vec<Form> = space
        .monomials()
        .iter()
        .map(|m| Form::term(m.clone(), Rational::one()).total_derivative())
        .collect();
    for f in &images {
        for m in f.terms().keys() {
            let next = targets.len();
            targets.entry(m.clone()).or_insert(next);
        }
    }
    let mut d = RationalMatrix::zeros(targets.len(), space.ambient_dim());
    for (j, f) in images.iter().enumerate() {
        for (m, c) in f.terms() {
            d.set(targets[m], j, c.clone());
        }
    }
    Ok(space.with_subspace(d.kernel()))
}
