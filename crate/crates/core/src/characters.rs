//! Class functions of the symmetric group on cycle types.
//!
//! Permutation characters ψ_λ of Young subgroups are computed by counting
//! distributions of cycles into rows. Irreducible characters come from
//! orthogonalizing the ψ_λ in dominance order, starting from the trivial
//! character, so no Murnaghan–Nakayama machinery is involved and Kostka
//! numbers computed from tableaux remain an independent check.
//!
//! All class functions here are rational valued, so the pairing needs no
//! complex conjugation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{format_rational, Rational};
use crate::partitions::{enumerate_partitions, Partition};
use crate::tableaux::{check_adjacent_sizes, kostka, Weight};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// z_ρ = Π_i i^{m_i} m_i!, the centralizer order of an element of type ρ.
pub fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in cycle_type.parts() {
        *mult.entry(p).or_default() += 1;
    }
    mult.iter().fold(BigInt::one(), |acc, (&i, &m)| {
        acc * BigInt::from(i).pow(m as u32) * factorial(m)
    })
}

/// Number of permutations with cycle type ρ.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// (−1)^{n − ℓ(ρ)}.
pub fn sign_of(cycle_type: &Partition) -> i64 {
    if (cycle_type.size() - cycle_type.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A rational-valued function on the cycle types of degree `n`, stored in
/// the order of [`enumerate_partitions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(&Partition) -> Rational,
    {
        ClassFunction {
            n,
            values: enumerate_partitions(n).iter().map(&mut f).collect(),
        }
    }

    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = enumerate_partitions(n).len();
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: values.len(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |rho| Rational::from_integer(sign_of(rho).into()))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, cycle_type: &Partition) -> Result<Rational> {
        if cycle_type.size() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: cycle_type.size(),
            });
        }
        let pos = enumerate_partitions(self.n)
            .iter()
            .position(|p| p == cycle_type)
            .expect("every partition is listed");
        Ok(self.values[pos].clone())
    }

    /// Value at the identity, i.e. the degree of the character.
    pub fn dimension(&self) -> Rational {
        self.values.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn check_degree(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_degree(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_degree(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise product with the sign character.
    pub fn sign_twist(&self) -> ClassFunction {
        let classes = enumerate_partitions(self.n);
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&classes)
                .map(|(v, rho)| if sign_of(rho) < 0 { -v } else { v.clone() })
                .collect(),
        }
    }

    /// Restriction to the point stabilizer of degree n−1: the value at ρ is
    /// the value at ρ with a fixed point appended.
    pub fn restrict(&self) -> Result<ClassFunction> {
        if self.n == 0 {
            return Err(Error::EmptyPartition);
        }
        let values = enumerate_partitions(self.n - 1)
            .iter()
            .map(|rho| {
                let mut parts = rho.parts().to_vec();
                parts.push(1);
                self.value(&Partition::from_parts_unchecked(parts))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction {
            n: self.n - 1,
            values,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

/// `(1/n!) Σ_ρ |C_ρ| f(ρ) g(ρ)`.
pub fn inner(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    f.check_degree(g)?;
    let classes = enumerate_partitions(f.n);
    let total: Rational = classes
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(rho, (a, b))| Rational::from_integer(class_size(rho)) * a * b)
        .sum();
    Ok(total / Rational::from_integer(factorial(f.n)))
}

/// ψ_λ(ρ): number of ways to distribute the (distinguishable) cycles of a
/// permutation of type ρ among the rows of λ so that each row's cycles
/// fill it exactly. Equivalently, the number of λ-tabloids it fixes.
pub fn perm_character_value(lambda: &Partition, cycle_type: &Partition) -> u64 {
    fn go(
        cycles: &[usize],
        caps: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (cycles.len(), caps.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..caps.len() {
            if caps[i] >= c {
                caps[i] -= c;
                total += go(rest, caps, memo);
                caps[i] += c;
            }
        }
        memo.insert(key, total);
        total
    }
    if lambda.size() != cycle_type.size() {
        return 0;
    }
    go(
        cycle_type.parts(),
        &mut lambda.parts().to_vec(),
        &mut HashMap::new(),
    )
}

/// ψ_λ, the character of the permutation module on λ-tabloids.
pub fn perm_character(lambda: &Partition) -> ClassFunction {
    ClassFunction::from_fn(lambda.size(), |rho| {
        Rational::from_integer(perm_character_value(lambda, rho).into())
    })
}

pub fn sign_twist(f: &ClassFunction) -> ClassFunction {
    f.sign_twist()
}

/// φ_λ: the sign character of the column group induced up, which is the
/// sign twist of ψ_{λ'}.
pub fn ind_sgn_character(lambda: &Partition) -> ClassFunction {
    perm_character(&lambda.conjugate()).sign_twist()
}

/// ⟨ψ_λ, φ_λ⟩; equals one for every λ.
pub fn theorem1_check(lambda: &Partition) -> Rational {
    inner(&perm_character(lambda), &ind_sgn_character(lambda)).expect("same degree")
}

/// Character data for one degree, computed once and then shared read-only.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    class_sizes: Vec<BigInt>,
    perm: Vec<ClassFunction>,
    irreducible: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Builds the table by dominance-ordered orthogonalization:
    /// χ^λ = ψ_λ − Σ_{μ ▷ λ} ⟨ψ_λ, χ^μ⟩ χ^μ, with every χ^μ for μ ▷ λ
    /// already available because the listing order extends reverse
    /// dominance.
    pub fn new(n: usize) -> Result<Self> {
        let partitions = enumerate_partitions(n);
        let class_sizes = partitions.iter().map(class_size).collect();
        let perm: Vec<ClassFunction> = partitions.iter().map(perm_character).collect();
        let mut irreducible: Vec<ClassFunction> = Vec::with_capacity(partitions.len());
        for (k, lambda) in partitions.iter().enumerate() {
            let mut chi = perm[k].clone();
            for (j, mu) in partitions[..k].iter().enumerate() {
                if mu.dominates_same(lambda) {
                    let c = inner(&perm[k], &irreducible[j])?;
                    if !c.is_zero() {
                        chi = chi.sub(&irreducible[j].scale(&c))?;
                    }
                }
            }
            let norm = inner(&chi, &chi)?;
            if !norm.is_one() {
                return Err(Error::OrthogonalizationFailure(format!(
                    "χ^({lambda}) has norm {}",
                    format_rational(&norm)
                )));
            }
            if !chi.is_integral() {
                return Err(Error::OrthogonalizationFailure(format!(
                    "χ^({lambda}) has a non-integer value"
                )));
            }
            if chi.dimension().is_negative() {
                return Err(Error::OrthogonalizationFailure(format!(
                    "χ^({lambda}) has negative degree"
                )));
            }
            irreducible.push(chi);
        }
        Ok(CharacterTable {
            n,
            partitions,
            class_sizes,
            perm,
            irreducible,
        })
    }

    /// Shared, lazily built table for degree `n`.
    pub fn get(n: usize) -> Result<Arc<CharacterTable>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(t));
        }
        // Built outside the lock; a concurrent duplicate build is harmless.
        let table = Arc::new(CharacterTable::new(n)?);
        let mut guard = cache.lock().expect("cache lock");
        Ok(Arc::clone(guard.entry(n).or_insert(table)))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[BigInt] {
        &self.class_sizes
    }

    pub fn index_of(&self, lambda: &Partition) -> Result<usize> {
        if lambda.size() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: lambda.size(),
            });
        }
        Ok(self
            .partitions
            .iter()
            .position(|p| p == lambda)
            .expect("every partition is listed"))
    }

    pub fn irreducible(&self, lambda: &Partition) -> Result<&ClassFunction> {
        Ok(&self.irreducible[self.index_of(lambda)?])
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducible
    }

    pub fn perm_character(&self, lambda: &Partition) -> Result<&ClassFunction> {
        Ok(&self.perm[self.index_of(lambda)?])
    }

    /// Multiplicity of χ^μ in a class function that is a genuine character.
    pub fn multiplicity(&self, mu: &Partition, f: &ClassFunction) -> Result<u64> {
        let m = inner(f, self.irreducible(mu)?)?;
        as_count(&m).ok_or_else(|| {
            Error::OrthogonalizationFailure(format!(
                "multiplicity of χ^({mu}) is {}",
                format_rational(&m)
            ))
        })
    }
}

fn as_count(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_u64()
    } else {
        None
    }
}

/// M(μ,λ) = ⟨ψ_λ, χ^μ⟩ for all μ, λ ⊢ n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `entries[i][j]` = M(partitions[i], partitions[j]).
    pub entries: Vec<Vec<u64>>,
}

impl MultiplicityTable {
    pub fn get(&self, mu: &Partition, lambda: &Partition) -> Option<u64> {
        let i = self.partitions.iter().position(|p| p == mu)?;
        let j = self.partitions.iter().position(|p| p == lambda)?;
        Some(self.entries[i][j])
    }
}

pub fn multiplicity_table(n: usize) -> Result<MultiplicityTable> {
    let table = CharacterTable::get(n)?;
    let partitions = table.partitions().to_vec();
    let entries = partitions
        .iter()
        .map(|mu| {
            partitions
                .iter()
                .map(|lambda| table.multiplicity(mu, table.perm_character(lambda)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable {
        n,
        partitions,
        entries,
    })
}

/// A pair where the character multiplicity and the Kostka number differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YoungsRuleMismatch {
    pub mu: Partition,
    pub lambda: Partition,
    pub multiplicity: u64,
    pub kostka: u64,
}

/// Compares M(μ,λ) with K(μ,λ) (by tableau enumeration) over all pairs.
pub fn youngs_rule_mismatches(n: usize) -> Result<Vec<YoungsRuleMismatch>> {
    let m = multiplicity_table(n)?;
    let pairs: Vec<(usize, usize)> = (0..m.partitions.len())
        .flat_map(|i| (0..m.partitions.len()).map(move |j| (i, j)))
        .collect();
    let out = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (mu, lambda) = (&m.partitions[i], &m.partitions[j]);
            let k = kostka(mu, &Weight::from(lambda))?;
            Ok((k != m.entries[i][j]).then(|| YoungsRuleMismatch {
                mu: mu.clone(),
                lambda: lambda.clone(),
                multiplicity: m.entries[i][j],
                kostka: k,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(out.into_iter().flatten().collect())
}

pub fn youngs_rule_check(n: usize) -> Result<bool> {
    Ok(youngs_rule_mismatches(n)?.is_empty())
}

/// Checks Res ψ_λ = Σ_{γ≺λ} c(λ,γ) ψ_γ as class functions of degree n−1.
pub fn lemma1_check(lambda: &Partition) -> Result<bool> {
    let n = lambda.size();
    let lhs = perm_character(lambda).restrict()?;
    let mut rhs = ClassFunction::from_fn(n - 1, |_| Rational::zero());
    for (gamma, c) in lambda.predecessors()? {
        rhs = rhs.add(&perm_character(&gamma).scale(&Rational::from_integer(c.into())))?;
    }
    Ok(lhs == rhs)
}

/// Both sides of `Σ_{μ≻ρ} M(μ,λ) = Σ_{γ≺λ} c(λ,γ) M(ρ,γ)`.
pub fn eq1_check(lambda: &Partition, rho: &Partition) -> Result<(u64, u64)> {
    check_adjacent_sizes(lambda, rho)?;
    let n = lambda.size();
    let upper = CharacterTable::get(n)?;
    let lower = CharacterTable::get(n - 1)?;
    let psi = upper.perm_character(lambda)?;
    let left = rho
        .successors()
        .iter()
        .map(|mu| upper.multiplicity(mu, psi))
        .sum::<Result<u64>>()?;
    let right = lambda
        .predecessors()?
        .iter()
        .map(|(gamma, c)| Ok(*c as u64 * lower.multiplicity(rho, lower.perm_character(gamma)?)?))
        .sum::<Result<u64>>()?;
    Ok((left, right))
}

/// Checks sgn ⊗ χ^μ = χ^{μ'} for all μ ⊢ n, and ⟨φ_λ, χ^μ⟩ = K(μ', λ')
/// for all μ, λ ⊢ n.
pub fn conjugate_twist_check(n: usize) -> Result<bool> {
    let table = CharacterTable::get(n)?;
    for mu in table.partitions() {
        if table.irreducible(mu)?.sign_twist() != *table.irreducible(&mu.conjugate())? {
            return Ok(false);
        }
    }
    for lambda in table.partitions() {
        let phi = ind_sgn_character(lambda);
        for mu in table.partitions() {
            let m = table.multiplicity(mu, &phi)?;
            if m != kostka(&mu.conjugate(), &Weight::from(&lambda.conjugate()))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Irreducibles occurring in both ψ_λ and φ_λ, with both multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub lambda: Partition,
    /// ⟨ψ_λ, φ_λ⟩ rendered exactly.
    pub inner: String,
    pub common: Vec<(Partition, u64, u64)>,
}

impl Theorem1Report {
    /// The pairing is one and the only shared constituent is χ^λ, once in each.
    pub fn holds(&self) -> bool {
        self.inner == "1" && self.common == vec![(self.lambda.clone(), 1, 1)]
    }
}

pub fn theorem1_report(lambda: &Partition) -> Result<Theorem1Report> {
    let table = CharacterTable::get(lambda.size())?;
    let psi = table.perm_character(lambda)?;
    let phi = ind_sgn_character(lambda);
    let mut common = Vec::new();
    for mu in table.partitions() {
        let a = table.multiplicity(mu, psi)?;
        let b = table.multiplicity(mu, &phi)?;
        if a > 0 && b > 0 {
            common.push((mu.clone(), a, b));
        }
    }
    Ok(Theorem1Report {
        lambda: lambda.clone(),
        inner: format_rational(&inner(psi, &phi)?),
        common,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p("1,1,1,1")), BigInt::from(1));
        assert_eq!(class_size(&p("5")), BigInt::from(24));
        assert_eq!(class_size(&p("2,1,1")), BigInt::from(6));
        let total: BigInt = enumerate_partitions(6).iter().map(class_size).sum();
        assert_eq!(total, factorial(6));
    }

    #[test]
    fn perm_character_values() {
        let lam = p("3,2,1");
        assert_eq!(perm_character(&lam).dimension(), rat(60));
        assert_eq!(perm_character(&p("5")), ClassFunction::trivial(5));
        assert_eq!(
            perm_character(&p("3,1")).value(&p("2,1,1")).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn sign_twists() {
        let f = perm_character(&p("2,1,1"));
        assert_eq!(f.sign_twist().sign_twist(), f);
        assert_eq!(
            ind_sgn_character(&Partition::column(4)),
            ClassFunction::sign(4)
        );
        assert_eq!(ind_sgn_character(&p("2,1,1")).dimension(), rat(4));
    }

    #[test]
    fn inner_products() {
        let n = 5;
        assert_eq!(
            inner(&perm_character(&p("5")), &perm_character(&p("5"))).unwrap(),
            rat(1)
        );
        for lam in enumerate_partitions(n) {
            assert_eq!(
                inner(&perm_character(&lam), &ClassFunction::trivial(n)).unwrap(),
                rat(1)
            );
        }
        let psi = perm_character(&p("2,1"));
        assert_eq!(inner(&psi, &psi.sign_twist()).unwrap(), rat(1));
        assert_eq!(
            inner(&psi, &ClassFunction::trivial(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn theorem1_small() {
        assert_eq!(theorem1_check(&p("6")), rat(1));
        assert_eq!(theorem1_check(&p("2,1,1")), rat(1));
        assert!(theorem1_report(&p("3,2,1")).unwrap().holds());
    }

    #[test]
    fn degree_three_characters() {
        let t = CharacterTable::new(3).unwrap();
        assert_eq!(*t.irreducible(&p("3")).unwrap(), ClassFunction::trivial(3));
        assert_eq!(*t.irreducible(&p("1,1,1")).unwrap(), ClassFunction::sign(3));
        let chi = t.irreducible(&p("2,1")).unwrap();
        assert_eq!(chi.value(&p("1,1,1")).unwrap(), rat(2));
        assert_eq!(chi.value(&p("3")).unwrap(), rat(-1));
        assert_eq!(chi.value(&p("2,1")).unwrap(), rat(0));
    }

    #[test]
    fn multiplicities_of_two_one_one() {
        let m = multiplicity_table(4).unwrap();
        let lam = p("2,1,1");
        assert_eq!(m.get(&p("4"), &lam), Some(1));
        assert_eq!(m.get(&p("3,1"), &lam), Some(2));
        assert_eq!(m.get(&p("2,2"), &lam), Some(1));
        assert_eq!(m.get(&lam, &lam), Some(1));
        assert_eq!(m.get(&p("1,1,1,1"), &lam), Some(0));
    }

    #[test]
    fn lemma1_and_eq1_examples() {
        assert!(lemma1_check(&p("4")).unwrap());
        assert!(lemma1_check(&p("2,2,1")).unwrap());
        let res = perm_character(&p("2,2,1")).restrict().unwrap();
        let expect = perm_character(&p("2,1,1"))
            .scale(&rat(2))
            .add(&perm_character(&p("2,2")))
            .unwrap();
        assert_eq!(res, expect);
        assert_eq!(eq1_check(&p("3,2,1"), &p("4,1")).unwrap(), (5, 5));
        assert_eq!(eq1_check(&p("5"), &p("4")).unwrap(), (1, 1));
        assert_eq!(eq1_check(&p("5"), &p("3,1")).unwrap(), (0, 0));
    }

    #[test]
    fn conjugate_twist_small() {
        assert!(conjugate_twist_check(4).unwrap());
        let t = CharacterTable::get(4).unwrap();
        let lam = p("2,1,1");
        assert_eq!(t.multiplicity(&lam, &ind_sgn_character(&lam)).unwrap(), 1);
    }

    #[test]
    fn degree_zero_table() {
        let t = CharacterTable::new(0).unwrap();
        assert_eq!(t.irreducibles().len(), 1);
        assert_eq!(t.irreducibles()[0].dimension(), rat(1));
    }
}
