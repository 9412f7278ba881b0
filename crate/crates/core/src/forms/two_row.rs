use rayon::prelude::*;
use serde::Serialize;

use super::{d_kernel, Form, FormSpace, Monomial};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exactla::{format_rational, Rational, Subspace};
use crate::partitions::Partition;

/// The C(n,k) square-free monomials of degree k.
pub fn square_free_monomials(n: usize, k: usize) -> Vec<Monomial> {
    fn go(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            go(i + 1, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, k, &mut vec![0; n], &mut out);
    }
    out.sort();
    out
}

/// σ_p in the variables `vars` (0-based): the sum of all products of p
/// distinct variables among them.
pub fn elementary_symmetric(n: usize, vars: &[usize], p: usize) -> Form {
    let mut out = Form::zero(n);
    if p > vars.len() {
        return out;
    }
    let mut chosen = Vec::with_capacity(p);
    fn go(vars: &[usize], p: usize, chosen: &mut Vec<usize>, n: usize, out: &mut Form) {
        if chosen.len() == p {
            let mut exps = vec![0; n];
            for &i in chosen.iter() {
                exps[i] = 1;
            }
            *out = out.add(&Form::term(
                Monomial::new(exps),
                Rational::from_integer(1.into()),
            ));
            return;
        }
        for (idx, &v) in vars.iter().enumerate() {
            if p - chosen.len() > vars.len() - idx {
                break;
            }
            chosen.push(v);
            go(&vars[idx + 1..], p, chosen, n, out);
            chosen.pop();
        }
    }
    go(vars, p, &mut chosen, n, &mut out);
    out
}

/// Sets of `l` disjoint pairs (a, b), a < b, listed with first elements
/// increasing so each matching appears once.
fn matchings(n: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        n: usize,
        l: usize,
        from: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for a in from..n {
            if used[a] {
                continue;
            }
            for b in a + 1..n {
                if used[b] {
                    continue;
                }
                used[a] = true;
                used[b] = true;
                cur.push((a, b));
                go(n, l, a + 1, used, cur, out);
                cur.pop();
                used[a] = false;
                used[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, l, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// X_I = (x_a1 − x_b1)···(x_al − x_bl) · σ_{k−l}(other variables).
fn x_i(n: usize, k: usize, pairs: &[(usize, usize)]) -> Form {
    let mut in_pairs = vec![false; n];
    let diffs: Vec<Form> = pairs
        .iter()
        .map(|&(a, b)| {
            in_pairs[a] = true;
            in_pairs[b] = true;
            Form::difference(n, a, b)
        })
        .collect();
    let rest: Vec<usize> = (0..n).filter(|&i| !in_pairs[i]).collect();
    Form::product(n, &diffs).mul(&elementary_symmetric(n, &rest, k - pairs.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoRowComponent {
    pub l: usize,
    pub partition: Partition,
    pub generators: usize,
    pub dim: usize,
    pub expected_dim: u64,
    pub invariant: bool,
    pub character: Vec<String>,
    pub character_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoRowReport {
    pub n: usize,
    pub k: usize,
    pub f_k_dim: usize,
    pub components: Vec<TwoRowComponent>,
    /// Distinct components meet only in zero.
    pub pairwise_trivial: bool,
    /// The components together span F_k.
    pub sum_is_full: bool,
    /// For even n and k = n/2: the l = k component is the D-kernel of F_k.
    pub top_is_d_kernel: Option<bool>,
}

impl TwoRowReport {
    pub fn holds(&self) -> bool {
        let dims: usize = self.components.iter().map(|c| c.dim).sum();
        dims == self.f_k_dim
            && self.pairwise_trivial
            && self.sum_is_full
            && self.top_is_d_kernel != Some(false)
            && self
                .components
                .iter()
                .all(|c| c.dim as u64 == c.expected_dim && c.invariant && c.character_matches)
    }
}

/// F_k = ⊕_{l ≤ k} L_{l,k}, L_{l,k} ≅ π_{(n−l,l)}.
pub fn two_row_decomposition(n: usize, k: usize) -> Result<TwoRowReport> {
    if 2 * k > n {
        return Err(Error::InvalidPartition(format!(
            "k = {k} exceeds n/2 for n = {n}"
        )));
    }
    let f_k = FormSpace::full(n, square_free_monomials(n, k));
    let table = CharacterTable::get(n)?;
    let spaces: Vec<(usize, FormSpace, usize)> = (0..=k)
        .into_par_iter()
        .map(|l| {
            let gens: Vec<Form> = matchings(n, l).iter().map(|m| x_i(n, k, m)).collect();
            Ok((l, f_k.span_of(&gens)?, gens.len()))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut components = Vec::with_capacity(spaces.len());
    for (l, space, generators) in &spaces {
        let partition = Partition::new([n - l, *l].into_iter().filter(|&x| x > 0).collect())?;
        let chi = space.character()?;
        components.push(TwoRowComponent {
            l: *l,
            expected_dim: partition.standard_count(),
            generators: *generators,
            dim: space.dim(),
            invariant: space.is_invariant()?,
            character: chi.values().iter().map(format_rational).collect(),
            character_matches: chi == *table.irreducible(&partition)?,
            partition,
        });
    }

    let mut pairwise_trivial = true;
    for (i, (_, a, _)) in spaces.iter().enumerate() {
        for (_, b, _) in &spaces[i + 1..] {
            pairwise_trivial &= a.intersect(b)?.dim() == 0;
        }
    }
    let mut total = f_k.with_subspace(Subspace::zero(f_k.ambient_dim()));
    for (_, s, _) in &spaces {
        total = total.sum(s)?;
    }
    let top_is_d_kernel = if n.is_multiple_of(2) && 2 * k == n {
        Some(d_kernel(&f_k)? == spaces[k].1)
    } else {
        None
    };
    Ok(TwoRowReport {
        n,
        k,
        f_k_dim: f_k.ambient_dim(),
        components,
        pairwise_trivial,
        sum_is_full: total.dim() == f_k.ambient_dim(),
        top_is_d_kernel,
    })
}
