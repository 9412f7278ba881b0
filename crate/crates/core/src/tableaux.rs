//! Semistandard tableaux, Kostka numbers and the two-way count of
//! tableaux with one symbol removed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

mod bijection;

pub use bijection::{theorem4_bijection, BijectionCertificate, BijectionPair, PairingMethod};

/// Symbol multiplicities: `counts[i]` is the number of entries equal to
/// `i + 1`. Zero entries are allowed, so a weight is a composition rather
/// than a partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Number of occurrences of `symbol` (1-based).
    pub fn count(&self, symbol: usize) -> usize {
        symbol
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// The weight with one occurrence of `symbol` removed, if there is one.
    pub fn remove_symbol(&self, symbol: usize) -> Option<Weight> {
        if self.count(symbol) == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[symbol - 1] -= 1;
        Some(Weight::new(counts))
    }

    /// The standard weight `(1, 1, ..., 1)`.
    pub fn standard(n: usize) -> Self {
        Weight { counts: vec![1; n] }
    }
}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight::new(p.parts().to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight::new(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad weight entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }
}

/// A semistandard tableau: rows weakly increase, columns strictly increase.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

pub type SemistandardTableau = Tableau;

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if self.rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease".into(),
            ));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", i + 1)));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails between rows {} and {}",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_semistandard(rows: &[Vec<usize>]) -> bool {
        Tableau {
            rows: rows.to_vec(),
        }
        .validate()
        .is_ok()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn weight(&self) -> Weight {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &e in self.rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        Weight::new(counts)
    }

    /// Entries read row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Columns, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect()
    }

    /// Removes the last cell of row `row` (0-based). `None` if that cell is
    /// not a removable corner.
    pub fn remove_corner(&self, row: usize) -> Option<Tableau> {
        let len = self.rows.get(row)?.len();
        if self.rows.get(row + 1).map_or(0, Vec::len) >= len {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[row].pop();
        if rows[row].is_empty() {
            rows.pop();
        }
        Some(Tableau { rows })
    }

    /// Deletes one occurrence of `symbol` from row `row` (0-based), closing
    /// the gap. Returns `None` if the symbol is absent or the result is not
    /// a semistandard tableau.
    pub fn delete_from_row(&self, row: usize, symbol: usize) -> Option<Tableau> {
        let r = self.rows.get(row)?;
        let pos = r.iter().rposition(|&e| e == symbol)?;
        let mut rows = self.rows.clone();
        rows[row].remove(pos);
        if rows[row].is_empty() {
            if row + 1 != rows.len() {
                return None;
            }
            rows.pop();
        }
        Tableau::new(rows).ok()
    }

    /// Row-inserts `symbol` (bumping the leftmost strictly larger entry
    /// into the next row). Returns the new tableau and the 0-based row of
    /// the new cell.
    pub fn row_insert(&self, symbol: usize) -> (Tableau, usize) {
        let mut rows = self.rows.clone();
        let mut x = symbol;
        for (i, row) in rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    return (Tableau { rows }, i);
                }
            }
        }
        let i = rows.len();
        rows.push(vec![x]);
        (Tableau { rows }, i)
    }

    /// Inverse of [`Tableau::row_insert`]: removes the corner at the end of
    /// row `row` (0-based) and bumps it upward, returning the smaller tableau
    /// and the ejected symbol.
    pub fn reverse_bump(&self, row: usize) -> Option<(Tableau, usize)> {
        let mut shrunk = self.remove_corner(row)?;
        let mut x = *self.rows[row].last()?;
        for i in (0..row).rev() {
            let r = &mut shrunk.rows[i];
            let pos = r.iter().rposition(|&e| e < x)?;
            x = std::mem::replace(&mut r[pos], x);
        }
        Some((shrunk, x))
    }

    /// Space-separated rows joined by ` / `.
    pub fn ascii(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau { rows: Vec::new() });
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// All semistandard tableaux of the given shape and weight, ordered
/// lexicographically by reading word.
///
/// Cells are filled in reading order by backtracking; a branch is cut as
/// soon as some smaller symbol with copies left can no longer be placed.
pub fn enumerate_ssyt(shape: &Partition, weight: &Weight) -> Result<Vec<Tableau>> {
    if shape.size() != weight.total() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: weight.total(),
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut remaining = weight.counts().to_vec();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut [usize],
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    // The smallest symbol still owed must fit somewhere at or after this
    // cell: later cells in this row take values >= v, later rows only
    // values > r + 1.
    let smallest_owed = remaining.iter().position(|&x| x > 0).map(|i| i + 1);
    for v in lo..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        if let Some(u) = smallest_owed {
            if u < v && u <= r + 1 {
                break;
            }
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v;
        fill(cells, k + 1, rows, remaining, out);
        rows[r][c] = 0;
        remaining[v - 1] += 1;
    }
}

/// K(μ, w): the number of semistandard tableaux of shape μ and weight w.
pub fn kostka(shape: &Partition, weight: &Weight) -> Result<u64> {
    Ok(enumerate_ssyt(shape, weight)?.len() as u64)
}

/// All standard tableaux of shape λ.
pub fn enumerate_standard(shape: &Partition) -> Vec<Tableau> {
    enumerate_ssyt(shape, &Weight::standard(shape.size())).expect("sizes agree by construction")
}

/// Both sides of the Kostka recurrence for λ ⊢ n and ρ ⊢ n−1:
/// `Σ_{μ≻ρ} K(μ,λ)` and `Σ_{γ≺λ} c(λ,γ)·K(ρ,γ)`.
pub fn eq2_check(lambda: &Partition, rho: &Partition) -> Result<(u64, u64)> {
    check_adjacent_sizes(lambda, rho)?;
    let lw = Weight::from(lambda);
    let left = rho
        .successors()
        .iter()
        .map(|mu| kostka(mu, &lw))
        .sum::<Result<u64>>()?;
    let right = lambda
        .predecessors()?
        .iter()
        .map(|(gamma, c)| Ok(*c as u64 * kostka(rho, &Weight::from(gamma))?))
        .sum::<Result<u64>>()?;
    Ok((left, right))
}

pub(crate) fn check_adjacent_sizes(lambda: &Partition, rho: &Partition) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if rho.size() + 1 != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size() - 1,
            found: rho.size(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(
            enumerate_ssyt(&p("4,2"), &w("3,2,1")).unwrap(),
            vec![t("1,1,1,2/2,3"), t("1,1,1,3/2,2")]
        );
        assert_eq!(
            enumerate_ssyt(&p("3,1"), &w("1,2,1")).unwrap(),
            vec![t("1,2,2/3"), t("1,2,3/2")]
        );
        let lam = p("4,2,2,1");
        assert_eq!(
            enumerate_ssyt(&lam, &Weight::from(&lam)).unwrap(),
            vec![t("1,1,1,1/2,2/3,3/4")]
        );
        assert_eq!(
            enumerate_ssyt(&p("2,1"), &w("2,2")),
            Err(Error::SizeMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("5,1"), &w("3,2,1")).unwrap(), 2);
        assert_eq!(kostka(&p("3,1,1"), &w("2,2,1")).unwrap(), 1);
        assert_eq!(kostka(&p("2,2"), &w("3,1")).unwrap(), 0);
        assert_eq!(kostka(&p("2,1"), &w("0,2,1")).unwrap(), 1);
    }

    #[test]
    fn standard_examples() {
        assert_eq!(enumerate_standard(&p("2,1,1")).len(), 3);
        assert_eq!(enumerate_standard(&p("5")).len(), 1);
        assert_eq!(
            enumerate_standard(&p("2,2")),
            vec![t("1,2/3,4"), t("1,3/2,4")]
        );
    }

    #[test]
    fn eq2_examples() {
        assert_eq!(eq2_check(&p("3,2,1"), &p("4,1")).unwrap(), (5, 5));
        assert_eq!(eq2_check(&p("2,2,1"), &p("3,1")).unwrap(), (5, 5));
        assert!(eq2_check(&p("2,2,1"), &p("3")).is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!("1,2/1".parse::<Tableau>().is_err());
        assert!("2,1".parse::<Tableau>().is_err());
        assert!("1/2,3".parse::<Tableau>().is_err());
        assert_eq!(t("1,1,2/2,3").weight(), w("2,2,1"));
        assert_eq!(t("1,1,2/2,3").ascii(), "1 1 2 / 2 3");
        assert_eq!(t("1,2,4/3").columns(), vec![vec![1, 3], vec![2], vec![4]]);
    }

    #[test]
    fn bumping_examples() {
        let x = t("1,1,2/2,3");
        let (y, row) = x.row_insert(1);
        assert_eq!(y, t("1,1,1/2,2/3"));
        assert_eq!(row, 2);
        assert_eq!(y.reverse_bump(2), Some((x.clone(), 1)));
        assert_eq!(x.row_insert(3), (t("1,1,2,3/2,3"), 0));
    }

    #[test]
    fn corner_and_row_deletion() {
        let x = t("1,1,2/2,3");
        assert_eq!(x.remove_corner(0), Some(t("1,1/2,3")));
        assert_eq!(x.remove_corner(1), Some(t("1,1,2/2")));
        assert_eq!(x.delete_from_row(1, 2), Some(t("1,1,2/3")));
        assert_eq!(x.delete_from_row(0, 1), Some(t("1,2/2,3")));
        assert_eq!(t("1,1/2,2").delete_from_row(0, 1), None);
        assert_eq!(x.delete_from_row(1, 7), None);
    }
}
