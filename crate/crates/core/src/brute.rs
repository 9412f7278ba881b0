//! Slow reference computations by explicit enumeration over the symmetric
//! group. They share no code paths with the fast routines beyond the
//! `Partition` and `Permutation` types and are meant for cross-checks at
//! small n (n ≤ 6 or so).

use num_traits::Zero;

use crate::exactla::Rational;
use crate::partitions::Partition;
use crate::perm::Permutation;

/// Row labels of the Young-subgroup block structure: points are assigned to
/// consecutive blocks of sizes λ_1, λ_2, ...
fn block_labels(lambda: &Partition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| std::iter::repeat_n(i, len))
        .collect()
}

/// All ways to label `n` points with row indices so that row i receives
/// exactly λ_i points (these are the λ-tabloids).
pub fn tabloids(lambda: &Partition) -> Vec<Vec<usize>> {
    fn go(
        pos: usize,
        caps: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        n: usize,
    ) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..caps.len() {
            if caps[i] > 0 {
                caps[i] -= 1;
                cur.push(i);
                go(pos + 1, caps, cur, out, n);
                cur.pop();
                caps[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        &mut lambda.parts().to_vec(),
        &mut Vec::new(),
        &mut out,
        lambda.size(),
    );
    out
}

/// ψ_λ at a permutation: the number of tabloids it fixes.
pub fn tabloid_fixed_points(lambda: &Partition, g: &Permutation) -> u64 {
    tabloids(lambda)
        .iter()
        .filter(|labels| (0..g.degree()).all(|i| labels[g.apply(i)] == labels[i]))
        .count() as u64
}

/// Induced character from the Young subgroup of λ, evaluated at `g` by the
/// full group sum `(1/|H|) Σ_{x : x⁻¹gx ∈ H} χ(x⁻¹gx)`, where χ is trivial
/// or, with `signed`, the sign character.
pub fn induced_from_young_subgroup(lambda: &Partition, signed: bool, g: &Permutation) -> Rational {
    let labels = block_labels(lambda);
    let n = lambda.size();
    let in_h = |h: &Permutation| (0..n).all(|i| labels[h.apply(i)] == labels[i]);
    let group = Permutation::all(n);
    let order_h = group.iter().filter(|h| in_h(h)).count() as i64;
    let mut total = 0i64;
    for x in &group {
        let conj = x.inverse().compose(g).compose(x);
        if in_h(&conj) {
            total += if signed { conj.sign() } else { 1 };
        }
    }
    Rational::new(total.into(), order_h.into())
}

/// Standard tableaux of shape λ counted by trying every filling with 1..n.
pub fn standard_count_by_fillings(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let shape = lambda.parts();
    Permutation::all(n)
        .iter()
        .filter(|p| {
            let img = p.images();
            let mut rows: Vec<&[usize]> = Vec::new();
            let mut start = 0;
            for &len in shape {
                rows.push(&img[start..start + len]);
                start += len;
            }
            rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
                && rows
                    .windows(2)
                    .all(|w| w[1].iter().zip(w[0].iter()).all(|(lo, hi)| hi < lo))
        })
        .count() as u64
}

/// `(1/n!) Σ_g f(g) h(g)` summed over the whole group.
pub fn group_inner<F, H>(n: usize, f: F, h: H) -> Rational
where
    F: Fn(&Permutation) -> Rational,
    H: Fn(&Permutation) -> Rational,
{
    let group = Permutation::all(n);
    let total = group
        .iter()
        .fold(Rational::zero(), |acc, g| acc + f(g) * h(g));
    total / Rational::from_integer((group.len() as i64).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn tabloid_counts() {
        let lam: Partition = "2,1,1".parse().unwrap();
        assert_eq!(tabloids(&lam).len(), 12);
        assert_eq!(tabloid_fixed_points(&lam, &Permutation::identity(4)), 12);
    }

    #[test]
    fn induced_trivial_matches_fixed_points() {
        let lam: Partition = "2,1".parse().unwrap();
        for g in Permutation::all(3) {
            assert_eq!(
                induced_from_young_subgroup(&lam, false, &g),
                rat(tabloid_fixed_points(&lam, &g) as i64)
            );
        }
    }

    #[test]
    fn standard_fillings() {
        assert_eq!(standard_count_by_fillings(&"2,1".parse().unwrap()), 2);
        assert_eq!(standard_count_by_fillings(&"3,2".parse().unwrap()), 5);
    }
}
