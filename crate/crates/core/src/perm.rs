//! Permutations of `{0, .., n-1}` (shown 1-based).

use std::fmt;

use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `images[i]` is the image of `i`. Returns `None` unless `images` is a
    /// permutation of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// A fixed permutation of the given cycle type: consecutive blocks of
    /// points form the cycles, longest first.
    pub fn of_cycle_type(cycle_type: &Partition) -> Self {
        let n = cycle_type.size();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degrees differ");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts_unchecked(lens)
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Adjacent transpositions `(i, i+1)`, which generate the group.
    pub fn generators(n: usize) -> Vec<Permutation> {
        (0..n.saturating_sub(1))
            .map(|i| Self::transposition(n, i, i + 1))
            .collect()
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation {
            images: cur.clone(),
        }];
        // Standard next-permutation step.
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation {
                images: cur.clone(),
            });
        }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            f.write_str("()")
        } else {
            f.write_str(&cycles.concat())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
