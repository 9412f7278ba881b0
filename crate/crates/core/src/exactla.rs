//! Dense linear algebra over arbitrary-precision rationals.
//!
//! Gauss–Jordan elimination is the reference path. A fraction-free Bareiss
//! rank is provided for integer matrices and cross-checked against it in
//! tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |e: String| Error::Parse(format!("bad rational {s:?}: {e}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|e| bad(format!("{e}")))?;
    let d: BigInt = d.parse().map_err(|e| bad(format!("{e}")))?;
    if d.is_zero() {
        return Err(bad("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Serialized as `{rows, cols, entries}` with entries as `"p/q"` strings.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MatrixText", try_from = "MatrixText")]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&x| rat(x))
            })
            .collect();
        RationalMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Gauss–Jordan elimination. Pivots are the first nonzero entry at or
    /// below the current row, scanning columns left to right.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by fraction-free (Bareiss) elimination. Each row is first scaled
    /// to integers by its denominators' lcm, which does not change the rank.
    pub fn bareiss_rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, f).clone();
                }
                v
            })
            .collect();
        debug_assert!(vectors
            .iter()
            .all(|v| self.mul_vec(v).unwrap().iter().all(Zero::is_zero)));
        Subspace::span(self.cols, vectors).expect("kernel vectors have ambient length")
    }

    /// Some `x` with `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let Rref {
            matrix: r, pivots, ..
        } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols).clone();
        }
        debug_assert_eq!(self.mul_vec(&x).unwrap(), b);
        Ok(Some(x))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixText {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl From<RationalMatrix> for MatrixText {
    fn from(m: RationalMatrix) -> Self {
        MatrixText {
            rows: m.rows,
            cols: m.cols,
            entries: (0..m.rows)
                .map(|i| m.row(i).iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixText> for RationalMatrix {
    type Error = Error;

    fn try_from(t: MatrixText) -> Result<Self> {
        if t.entries.len() != t.rows {
            return Err(Error::DimensionMismatch {
                expected: t.rows,
                found: t.entries.len(),
            });
        }
        let rows = t
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| parse_rational(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_rows(t.cols, rows)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// A subspace of `Q^ambient_dim`, stored as the nonzero rows of a reduced
/// row echelon basis. The representation is canonical, so equality of
/// subspaces is equality of values.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = RationalMatrix::identity(ambient_dim).row_vectors();
        Subspace {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut s = Self::zero(ambient_dim);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.ambient_dim, self.basis.clone())
            .expect("basis rows have ambient length")
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis, returning the remainder.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        v
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> Result<bool> {
        self.check_len(&v)?;
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pc].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.basis.insert(at, v);
        self.pivots.insert(at, pc);
        Ok(true)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.reduce(v.to_vec()).iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        self.check_len(v)?;
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in rebuilt.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x += c * b;
                }
            }
        }
        Ok((rebuilt == v).then_some(coords))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b.clone())?;
        }
        Ok(s)
    }

    /// S₁ ∩ S₂, from the left kernel of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let k1 = self.dim();
        let stacked: Vec<Vec<Rational>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = RationalMatrix::from_rows(self.ambient_dim, stacked)?;
        let left_kernel = m.transpose().kernel();
        let vectors = left_kernel.basis.iter().map(|z| {
            let mut v = vec![Rational::zero(); self.ambient_dim];
            for (c, row) in z[..k1].iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(row) {
                    *x += c * b;
                }
            }
            v
        });
        let s = Subspace::span(self.ambient_dim, vectors)?;
        debug_assert!(s.is_subspace_of(self).unwrap() && s.is_subspace_of(other).unwrap());
        Ok(s)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in Q^{}, pivots {:?})",
            self.dim(),
            self.ambient_dim,
            self.pivots
        )
    }
}

/// Applies `op` to every basis vector of `s` and returns the coordinate
/// matrix C (row i holds the coordinates of op(bᵢ)), failing with
/// `NotInvariant` if some image leaves the subspace.
pub fn restricted_action<F>(s: &Subspace, mut op: F) -> Result<RationalMatrix>
where
    F: FnMut(&[Rational]) -> Result<Vec<Rational>>,
{
    let rows = s
        .basis()
        .iter()
        .map(|b| s.coordinates(&op(b)?)?.ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_rows(s.dim(), rows)
}

/// Trace of the operator `a` restricted to the invariant subspace `s`.
pub fn restricted_trace(a: &RationalMatrix, s: &Subspace) -> Result<Rational> {
    if a.rows() != s.ambient_dim() || a.cols() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: a.rows(),
        });
    }
    Ok(restricted_action(s, |b| a.mul_vec(b))?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = RationalMatrix::zeros(2, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);

        let a = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.rref().pivots, vec![0]);
    }

    #[test]
    fn kernel_and_solve() {
        assert_eq!(RationalMatrix::identity(4).kernel().dim(), 0);
        let a = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[1, -1, 1])).unwrap());

        let x = a.solve(&v(&[2, 3])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), v(&[2, 3]));
        let b = RationalMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&v(&[1, 3])).unwrap(), None);
        assert!(b.solve(&v(&[1])).is_err());
    }

    #[test]
    fn subspace_ops() {
        let s1 = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let s2 = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = s1.intersect(&s2).unwrap();
        assert_eq!(i, Subspace::span(3, vec![v(&[0, 5, 0])]).unwrap());
        assert_eq!(s1.sum(&s2).unwrap(), Subspace::full(3));
        assert!(s1.contains(&v(&[3, -2, 0])).unwrap());
        assert!(!s1.contains(&v(&[0, 0, 1])).unwrap());
        assert!(s1.contains(&v(&[1, 2])).is_err());
        assert_eq!(s1.coordinates(&v(&[3, -2, 0])).unwrap(), Some(v(&[3, -2])));
    }

    #[test]
    fn restricted_traces() {
        let a = RationalMatrix::from_i64(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 7]]);
        assert_eq!(restricted_trace(&a, &Subspace::full(3)).unwrap(), rat(12));
        let s = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(restricted_trace(&a, &s).unwrap(), rat(5));
        assert_eq!(
            restricted_trace(&RationalMatrix::identity(3), &s).unwrap(),
            rat(2)
        );
        // Swap of two coordinates restricted to its fixed line.
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let line = Subspace::span(2, vec![v(&[1, 1])]).unwrap();
        assert_eq!(restricted_trace(&swap, &line).unwrap(), rat(1));
        let not_inv = Subspace::span(2, vec![v(&[1, 0])]).unwrap();
        assert_eq!(restricted_trace(&swap, &not_inv), Err(Error::NotInvariant));
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("4").unwrap(), rat(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn bareiss_matches_gauss_jordan_on_fixed_cases() {
        let a = RationalMatrix::from_i64(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]]);
        assert_eq!(a.bareiss_rank(), a.rank());
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = RationalMatrix::from_rows(
            2,
            vec![vec![ratio(1, 2), rat(-3)], vec![rat(0), ratio(7, 4)]],
        )
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"entries":[["1/2","-3"],["0","7/4"]]}"#
        );
        assert_eq!(serde_json::from_str::<RationalMatrix>(&text).unwrap(), m);
        let empty = RationalMatrix::zeros(0, 3);
        let back: RationalMatrix =
            serde_json::from_str(&serde_json::to_string(&empty).unwrap()).unwrap();
        assert_eq!(back.cols(), 3);
        assert!(serde_json::from_str::<RationalMatrix>(
            r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#
        )
        .is_err());
    }
}
