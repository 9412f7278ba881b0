//! Upper bounds on n for the enumerations behind each family of checks.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Partitions, tableaux, Kostka numbers, flows.
    pub combinatorics: usize,
    /// Character tables and multiplicities.
    pub characters: usize,
    /// L_λ and its monomial action.
    pub monomial_spaces: usize,
    /// Specht modules over all permutations of a filling.
    pub specht: usize,
    /// Square-free form spaces F_k.
    pub two_row: usize,
    /// Covering-system sweeps over every λ ⊢ n.
    pub systems: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            combinatorics: 20,
            characters: 10,
            monomial_spaces: 6,
            specht: 5,
            two_row: 8,
            systems: 14,
        }
    }
}

impl Limits {
    /// Lowers every bound to at most `cap`.
    pub fn capped(self, cap: usize) -> Self {
        Limits {
            combinatorics: self.combinatorics.min(cap),
            characters: self.characters.min(cap),
            monomial_spaces: self.monomial_spaces.min(cap),
            specht: self.specht.min(cap),
            two_row: self.two_row.min(cap),
            systems: self.systems.min(cap),
        }
    }

    pub fn check(what: &'static str, n: usize, max: usize) -> Result<()> {
        if n > max {
            return Err(Error::LimitExceeded { what, n, max });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capping() {
        let l = Limits::default().capped(6);
        assert_eq!((l.combinatorics, l.specht), (6, 5));
        assert!(Limits::check("characters", 9, l.characters).is_err());
        assert!(Limits::check("characters", 6, l.characters).is_ok());
    }
}
