use super::{FormSpace, Monomial};
use crate::characters::{perm_character, ClassFunction};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::partitions::Partition;
use crate::perm::Permutation;

/// The monomials X_λ in `n` variables: every variable assigned to row i
/// carries exponent i−1 and row i receives λ_i variables. Sorted.
pub fn x_monomials(lambda: &Partition, n: usize) -> Result<Vec<Monomial>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    // Distinct permutations of the exponent multiset, in increasing order.
    let mut exps: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| std::iter::repeat_n(i as u32, len))
        .collect();
    exps.sort_unstable();
    let mut out = vec![Monomial::new(exps.clone())];
    while let Some(i) = (1..n).rev().find(|&i| exps[i - 1] < exps[i]) {
        let j = (i..n)
            .rev()
            .find(|&j| exps[j] > exps[i - 1])
            .expect("pivot has a larger successor");
        exps.swap(i - 1, j);
        exps[i..].reverse();
        out.push(Monomial::new(exps.clone()));
    }
    out.sort();
    let before = out.len();
    out.dedup();
    assert_eq!(before, out.len(), "X_λ monomials are distinct");
    Ok(out)
}

/// L_λ: the span of the X_λ monomials.
pub fn l_lambda(lambda: &Partition) -> Result<FormSpace> {
    let n = lambda.size();
    Ok(FormSpace::full(n, x_monomials(lambda, n)?))
}

/// Permutation character of the substitution action on the X_λ monomials:
/// the number of monomials fixed by one element of each cycle type.
pub fn statement2_character(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.size();
    let monomials = x_monomials(lambda, n)?;
    Ok(ClassFunction::from_fn(n, |rho| {
        let g = Permutation::of_cycle_type(rho);
        let fixed = monomials.iter().filter(|m| m.act(&g) == **m).count();
        Rational::from_integer(fixed.into())
    }))
}

/// dim L_λ = n!/Π λ_i! and the monomial action has character ψ_λ.
pub fn statement2_check(lambda: &Partition) -> Result<bool> {
    let space = l_lambda(lambda)?;
    let expected = perm_character(lambda);
    let rank = space.subspace().basis_matrix().rank();
    Ok(Rational::from_integer(rank.into()) == expected.dimension()
        && statement2_character(lambda)? == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(x_monomials(&p("4"), 4).unwrap(), vec![Monomial::one(4)]);
        assert_eq!(x_monomials(&p("1,1,1,1"), 4).unwrap().len(), 24);
        let m = x_monomials(&p("2,1,1"), 4).unwrap();
        assert_eq!(m.len(), 12);
        assert!(m
            .iter()
            .all(|m| m.degree() == 3 && m.exps().iter().filter(|&&e| e == 2).count() == 1));
        assert!(x_monomials(&p("2,1"), 4).is_err());
    }

    #[test]
    fn regular_representation_at_four() {
        let chi = statement2_character(&p("1,1,1,1")).unwrap();
        assert_eq!(chi.dimension(), Rational::from_integer(24.into()));
        assert!(chi.values()[..chi.values().len() - 1]
            .iter()
            .all(|v| *v == Rational::from_integer(0.into())));
        assert!(statement2_check(&p("1,1,1,1")).unwrap());
        assert_eq!(
            statement2_character(&p("5")).unwrap(),
            ClassFunction::trivial(5)
        );
    }
}
