//! Pairing of μ-tableaux with ρ-tableaux for the Kostka recurrence.
//!
//! Left side: semistandard tableaux T of weight λ and shape μ ≻ ρ. Right
//! side: pairs (s, S) with S semistandard of shape ρ and weight λ minus one
//! copy of symbol s. The canonical rule takes T of shape μ whose extra cell
//! sits in row r, deletes the rightmost r from row r and closes the gap.
//! When that rule is not a bijection the pairing is recomputed as a perfect
//! matching, seeded with every canonical pair that survives, on the relation
//! "S arises from T by deleting one copy of s from the extra-cell row, or by
//! reverse-bumping the extra cell out of T". The reverse-bump edges alone
//! already form a perfect matching, so the augmentation always completes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_adjacent_sizes, enumerate_ssyt, Tableau, Weight};
use crate::error::Result;
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingMethod {
    Canonical,
    Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionPair {
    /// Position of the μ-tableau in the left listing.
    pub left_index: usize,
    /// Position of the ρ-tableau in the right listing.
    pub right_index: usize,
    pub mu_tableau: Tableau,
    pub removed_symbol: usize,
    pub rho_tableau: Tableau,
    pub gamma_weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionCertificate {
    pub lambda: Partition,
    pub rho: Partition,
    pub canonical: bool,
    pub method: PairingMethod,
    /// Number of pairs produced by the canonical rule itself.
    pub canonical_hits: usize,
    /// Left listing: μ in successor order, tableaux in reading-word order.
    pub left: Vec<Tableau>,
    /// Right listing: removed symbol ascending, tableaux in reading-word order.
    pub right: Vec<(usize, Tableau)>,
    pub pairs: Vec<BijectionPair>,
}

impl BijectionCertificate {
    /// Re-checks that `pairs` is a bijection between `left` and `right` and
    /// that every pair is related by a row deletion or a reverse bump.
    pub fn verify(&self) -> bool {
        if self.left.len() != self.right.len() || self.pairs.len() != self.left.len() {
            return false;
        }
        let lambda_weight = Weight::from(&self.lambda);
        let mut seen_left = vec![false; self.left.len()];
        let mut seen_right = vec![false; self.right.len()];
        for pair in &self.pairs {
            let (Some(l), Some(r)) = (
                seen_left.get_mut(pair.left_index),
                seen_right.get_mut(pair.right_index),
            ) else {
                return false;
            };
            if *l || *r {
                return false;
            }
            *l = true;
            *r = true;
            let (s, ref rho_t) = self.right[pair.right_index];
            let mu_t = &self.left[pair.left_index];
            if *mu_t != pair.mu_tableau || *rho_t != pair.rho_tableau || s != pair.removed_symbol {
                return false;
            }
            if rho_t.shape() != self.rho || mu_t.weight() != lambda_weight {
                return false;
            }
            if lambda_weight.remove_symbol(s).as_ref() != Some(&pair.gamma_weight)
                || rho_t.weight() != pair.gamma_weight
            {
                return false;
            }
            let Some(row) = extra_row(&mu_t.shape(), &self.rho) else {
                return false;
            };
            if !related(mu_t, row, s, rho_t) {
                return false;
            }
        }
        seen_left.iter().all(|&b| b) && seen_right.iter().all(|&b| b)
    }
}

fn related(mu_t: &Tableau, row: usize, s: usize, rho_t: &Tableau) -> bool {
    mu_t.delete_from_row(row, s).as_ref() == Some(rho_t)
        || mu_t.reverse_bump(row).as_ref().map(|(t, x)| (t, *x)) == Some((rho_t, s))
}

/// Row (0-based) holding the cell of μ outside ρ.
fn extra_row(mu: &Partition, rho: &Partition) -> Option<usize> {
    if mu.size() != rho.size() + 1 {
        return None;
    }
    let rows: Vec<usize> = (0..mu.len())
        .filter(|&i| mu.part(i) != rho.part(i))
        .collect();
    match rows.as_slice() {
        [i] if mu.part(*i) == rho.part(*i) + 1 => Some(*i),
        _ => None,
    }
}

pub fn theorem4_bijection(lambda: &Partition, rho: &Partition) -> Result<BijectionCertificate> {
    check_adjacent_sizes(lambda, rho)?;
    let lambda_weight = Weight::from(lambda);

    let mut left: Vec<(Tableau, usize)> = Vec::new();
    for mu in rho.successors() {
        let row = extra_row(&mu, rho).expect("successor differs by one cell");
        for t in enumerate_ssyt(&mu, &lambda_weight)? {
            left.push((t, row));
        }
    }
    let mut right: Vec<(usize, Tableau)> = Vec::new();
    for s in 1..=lambda.len() {
        let gamma = lambda_weight.remove_symbol(s).expect("row s is nonempty");
        for t in enumerate_ssyt(rho, &gamma)? {
            right.push((s, t));
        }
    }
    let right_pos: HashMap<(usize, Tableau), usize> = right
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();

    // Candidate partners of each left item, canonical partner (if any) first.
    let mut canonical_target: Vec<Option<usize>> = Vec::with_capacity(left.len());
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(left.len());
    for (t, row) in &left {
        let canon_symbol = row + 1;
        let canon = t
            .delete_from_row(*row, canon_symbol)
            .and_then(|s_t| right_pos.get(&(canon_symbol, s_t)).copied());
        canonical_target.push(canon);
        let mut symbols: Vec<usize> = t.rows()[*row].clone();
        symbols.dedup();
        let mut adj: Vec<usize> = canon.into_iter().collect();
        if let Some(j) = t
            .reverse_bump(*row)
            .and_then(|(s_t, s)| right_pos.get(&(s, s_t)).copied())
        {
            if !adj.contains(&j) {
                adj.push(j);
            }
        }
        for s in symbols {
            if let Some(j) = t
                .delete_from_row(*row, s)
                .and_then(|s_t| right_pos.get(&(s, s_t)).copied())
            {
                if !adj.contains(&j) {
                    adj.push(j);
                }
            }
        }
        adjacency.push(adj);
    }

    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    let mut assigned: Vec<Option<usize>> = vec![None; left.len()];
    let mut canonical_hits = 0;
    for (i, target) in canonical_target.iter().enumerate() {
        if let Some(j) = *target {
            if owner[j].is_none() {
                owner[j] = Some(i);
                assigned[i] = Some(j);
                canonical_hits += 1;
            }
        }
    }
    let canonical = canonical_hits == left.len() && left.len() == right.len();
    if !canonical {
        for i in 0..left.len() {
            if assigned[i].is_none() {
                let mut visited = vec![false; right.len()];
                augment(i, &adjacency, &mut owner, &mut assigned, &mut visited);
            }
        }
    }

    let pairs = assigned
        .iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| (i, j)))
        .map(|(i, j)| {
            let (s, ref rho_t) = right[j];
            BijectionPair {
                left_index: i,
                right_index: j,
                mu_tableau: left[i].0.clone(),
                removed_symbol: s,
                rho_tableau: rho_t.clone(),
                gamma_weight: rho_t.weight(),
            }
        })
        .collect();

    Ok(BijectionCertificate {
        lambda: lambda.clone(),
        rho: rho.clone(),
        canonical,
        method: if canonical {
            PairingMethod::Canonical
        } else {
            PairingMethod::Matching
        },
        canonical_hits,
        left: left.into_iter().map(|(t, _)| t).collect(),
        right,
        pairs,
    })
}

// Kuhn's augmenting path step.
fn augment(
    i: usize,
    adjacency: &[Vec<usize>],
    owner: &mut [Option<usize>],
    assigned: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &j in &adjacency[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match owner[j] {
            None => true,
            Some(k) => augment(k, adjacency, owner, assigned, visited),
        };
        if free {
            owner[j] = Some(i);
            assigned[i] = Some(j);
            return true;
        }
    }
    false
}
