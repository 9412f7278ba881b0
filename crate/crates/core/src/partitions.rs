//! Integer partitions as Young diagrams.
//!
//! Partitions are immutable values. The canonical listing order is reverse
//! lexicographic, `(n)` first and `(1^n)` last; it is a linear extension of
//! reverse dominance, so any partition is listed after everything that
//! strictly dominates it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is plain lexicographic order on the parts, so
/// [`enumerate_partitions`] returns partitions in *descending* `Ord` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts: cols }
    }

    /// `self ⊵ other` in the dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::MismatchedSize { left: a, right: b });
        }
        let rows = self.len().max(other.len());
        let mut sa = 0;
        let mut sb = 0;
        for i in 0..rows {
            sa += self.part(i);
            sb += other.part(i);
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance test for partitions already known to have the same size.
    pub(crate) fn dominates_same(&self, other: &Partition) -> bool {
        self.dominates(other).expect("partitions of equal size")
    }

    /// Row indices (0-based) whose last cell can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.parts[i] > self.part(i + 1))
            .collect()
    }

    /// Row indices (0-based) where a cell can be added, including the new row.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .collect()
    }

    /// The partition with one cell removed from row `i`. Caller guarantees
    /// that `i` is removable.
    pub(crate) fn remove_cell(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Partition::from_parts_unchecked(parts)
    }

    /// The partition with one cell added to row `i`. Caller guarantees
    /// that `i` is addable.
    pub(crate) fn add_cell(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// Every γ ≺ λ together with c(λ,γ), the multiplicity in λ of the row
    /// length being shortened. Listed from the dominance-minimal γ upward.
    pub fn predecessors(&self) -> Result<Vec<(Partition, usize)>> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(self
            .removable_rows()
            .into_iter()
            .map(|i| {
                let len = self.parts[i];
                let mult = self.parts.iter().filter(|&&p| p == len).count();
                (self.remove_cell(i), mult)
            })
            .collect())
    }

    /// Every μ ≻ self, in enumeration (reverse lexicographic) order.
    pub fn successors(&self) -> Vec<Partition> {
        self.addable_rows()
            .into_iter()
            .map(|i| self.add_cell(i))
            .collect()
    }

    /// Removes a cell from the topmost removable row; this is the
    /// dominance-minimal predecessor.
    pub fn bar(&self) -> Result<Partition> {
        match self.removable_rows().first() {
            Some(&i) => Ok(self.remove_cell(i)),
            None => Err(Error::EmptyPartition),
        }
    }

    /// Number of partitions of the same size dominating `self`.
    pub fn h(&self) -> usize {
        enumerate_partitions(self.size())
            .iter()
            .filter(|mu| mu.dominates_same(self))
            .count()
    }

    pub fn hbar(&self) -> Result<usize> {
        Ok(self.bar()?.h())
    }

    /// f^λ, the number of paths from ∅ to λ in the Young graph.
    pub fn standard_count(&self) -> u64 {
        let mut memo = HashMap::new();
        standard_count_memo(self, &mut memo)
    }

    /// Renders the diagram as rows of `#` cells.
    pub fn ascii_diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "# ".repeat(p).trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn standard_count_memo(lambda: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(lambda) {
        return v;
    }
    let v = lambda
        .removable_rows()
        .into_iter()
        .map(|i| standard_count_memo(&lambda.remove_cell(i), memo))
        .sum();
    memo.insert(lambda.clone(), v);
    v
}

/// All partitions of `n`, reverse lexicographic.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every cover edge between partitions of `n - 1` and `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEdge {
    pub lower: Partition,
    pub upper: Partition,
    /// 1-based row receiving the new cell.
    pub row_index: usize,
}

pub fn cover_edges(n: usize) -> Vec<CoverEdge> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_partitions(n - 1)
        .into_iter()
        .flat_map(|lower| {
            lower
                .addable_rows()
                .into_iter()
                .map(|i| CoverEdge {
                    upper: lower.add_cell(i),
                    lower: lower.clone(),
                    row_index: i + 1,
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2,1").conjugate(), p("3,2,1"));
        assert_eq!(p("4,1").conjugate(), p("2,1,1,1"));
        assert_eq!(p("2,2,1").conjugate(), p("3,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p("3,2").dominates(&p("2,2,1")).unwrap());
        assert!(p("2,2,1").dominates(&p("2,2,1")).unwrap());
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")).unwrap());
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")).unwrap());
        assert_eq!(
            p("3").dominates(&p("2,1,1")),
            Err(Error::MismatchedSize { left: 3, right: 4 })
        );
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(
            p("2,2,1").predecessors().unwrap(),
            vec![(p("2,1,1"), 2), (p("2,2"), 1)]
        );
        assert_eq!(
            p("3,2,1").predecessors().unwrap(),
            vec![(p("2,2,1"), 1), (p("3,1,1"), 1), (p("3,2"), 1)]
        );
        assert_eq!(p("5").predecessors().unwrap(), vec![(p("4"), 1)]);
        assert_eq!(
            Partition::empty().predecessors(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn successor_examples() {
        assert_eq!(p("1").successors(), vec![p("2"), p("1,1")]);
        assert_eq!(p("4,1").successors(), vec![p("5,1"), p("4,2"), p("4,1,1")]);
        assert_eq!(p("3,1").successors(), vec![p("4,1"), p("3,2"), p("3,1,1")]);
        assert_eq!(Partition::empty().successors(), vec![p("1")]);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("3,2,1").bar().unwrap(), p("2,2,1"));
        assert_eq!(p("2,2,1").bar().unwrap(), p("2,1,1"));
        assert_eq!(Partition::empty().bar(), Err(Error::EmptyPartition));
    }

    #[test]
    fn h_examples() {
        assert_eq!(p("2,1,1").h(), 4);
        assert_eq!(p("7").h(), 1);
        assert_eq!(Partition::column(7).h(), 15);
        assert_eq!(p("2,2").hbar().unwrap(), 2);
    }

    #[test]
    fn standard_counts() {
        assert_eq!(p("2,1,1").standard_count(), 3);
        assert_eq!(p("2,2").standard_count(), 2);
        assert_eq!(p("3,1").standard_count(), 3);
        assert_eq!(p("2,1").standard_count(), 2);
        assert_eq!(p("6").standard_count(), 1);
        assert_eq!(Partition::empty().standard_count(), 1);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn json_is_an_integer_array() {
        let s = serde_json::to_string(&p("3,2,1")).unwrap();
        assert_eq!(s, "[3,2,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p("3,2,1"));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn cover_edges_rows() {
        let edges = cover_edges(2);
        assert_eq!(edges.len(), 2);
        assert_eq!(edges[1].upper, p("1,1"));
        assert_eq!(edges[1].row_index, 2);
    }
}
