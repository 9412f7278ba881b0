use serde::Serialize;

use super::{d_kernel, l_lambda, Form, FormSpace};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exactla::format_rational;
use crate::partitions::Partition;
use crate::perm::Permutation;
use crate::tableaux::{enumerate_standard, Tableau};

/// SP_t = Π over columns of Π_{s above k} (x_s − x_k), for a filling `rows`
/// of a Young diagram by the distinct indices 1..n.
pub fn specht_poly(rows: &[Vec<usize>]) -> Result<Form> {
    let n: usize = rows.iter().map(Vec::len).sum();
    if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::InvalidFilling(
            "rows must be nonempty and weakly decreasing".into(),
        ));
    }
    let mut seen = vec![false; n + 1];
    for &x in rows.iter().flatten() {
        if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidFilling(format!(
                "entries must be the distinct indices 1..{n}"
            )));
        }
    }
    let mut factors = Vec::new();
    for j in 0..rows.first().map_or(0, Vec::len) {
        let column: Vec<usize> = rows.iter().filter_map(|r| r.get(j).copied()).collect();
        for (a, &s) in column.iter().enumerate() {
            for &k in &column[a + 1..] {
                factors.push(Form::difference(n, s - 1, k - 1));
            }
        }
    }
    Ok(Form::product(n, &factors))
}

/// Specht polynomials of the standard tableaux of shape λ.
pub fn standard_specht_polys(lambda: &Partition) -> Result<Vec<(Tableau, Form)>> {
    enumerate_standard(lambda)
        .into_iter()
        .map(|t| {
            let f = specht_poly(t.rows())?;
            Ok((t, f))
        })
        .collect()
}

/// Span in L_λ of σ·SP_t over all σ, with t the row-by-row filling.
pub fn specht_module(lambda: &Partition) -> Result<FormSpace> {
    let n = lambda.size();
    let mut next = 1;
    let rows: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .map(|&len| {
            let r = (next..next + len).collect();
            next += len;
            r
        })
        .collect();
    let base = specht_poly(&rows)?;
    let images = Permutation::all(n)
        .iter()
        .map(|s| base.act(s))
        .collect::<Result<Vec<_>>>()?;
    l_lambda(lambda)?.span_of(&images)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem5Report {
    pub lambda: Partition,
    /// f^λ.
    pub standard_tableaux: usize,
    /// Rank of the standard Specht polynomials.
    pub standard_rank: usize,
    /// Dimension of the span of all Specht polynomials.
    pub module_dim: usize,
    /// The standard ones already span the module.
    pub standard_spans_module: bool,
    /// Every Specht polynomial lies in L_λ.
    pub inside_l_lambda: bool,
    pub d_kernel_dim: usize,
    pub module_equals_d_kernel: bool,
    pub invariant: bool,
    /// Character of the module, one value per cycle type in partition order.
    pub character: Vec<String>,
    pub character_matches: bool,
}

impl Theorem5Report {
    pub fn holds(&self) -> bool {
        self.standard_rank == self.standard_tableaux
            && self.standard_spans_module
            && self.inside_l_lambda
            && self.module_equals_d_kernel
            && self.invariant
            && self.character_matches
    }
}

/// Standard Specht polynomials are a basis of the Specht module, which is
/// the D-kernel of L_λ and affords χ^λ.
pub fn theorem5_check(lambda: &Partition) -> Result<Theorem5Report> {
    let n = lambda.size();
    let l = l_lambda(lambda)?;
    let standard: Vec<Form> = standard_specht_polys(lambda)?
        .into_iter()
        .map(|(_, f)| f)
        .collect();
    let inside_l_lambda = standard
        .iter()
        .map(|f| l.contains(f))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let standard_span = l.span_of(&standard)?;
    let module = specht_module(lambda)?;
    let kernel = d_kernel(&l)?;
    let invariant = module.is_invariant()?;
    let chi = module.character()?;
    let table = CharacterTable::get(n)?;
    Ok(Theorem5Report {
        lambda: lambda.clone(),
        standard_tableaux: standard.len(),
        standard_rank: standard_span.dim(),
        module_dim: module.dim(),
        standard_spans_module: standard_span == module,
        inside_l_lambda,
        d_kernel_dim: kernel.dim(),
        module_equals_d_kernel: kernel == module,
        invariant,
        character: chi.values().iter().map(format_rational).collect(),
        character_matches: chi == *table.irreducible(lambda)?,
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
    fn column_vandermonde() {
        let sp = specht_poly(&[vec![1], vec![2], vec![3]]).unwrap();
        let n = 3;
        let expect = Form::product(
            n,
            &[
                Form::difference(n, 0, 1),
                Form::difference(n, 0, 2),
                Form::difference(n, 1, 2),
            ],
        );
        assert_eq!(sp, expect);
        assert_eq!(
            specht_poly(&[vec![1, 2, 3]]).unwrap(),
            Form::constant(3, rat(1))
        );
    }

    #[test]
    fn bad_fillings() {
        assert!(specht_poly(&[vec![1], vec![1]]).is_err());
        assert!(specht_poly(&[vec![1], vec![2, 3]]).is_err());
        assert!(specht_poly(&[vec![1, 4]]).is_err());
    }

    #[test]
    fn two_one_one() {
        let r = theorem5_check(&p("2,1,1")).unwrap();
        assert_eq!(r.standard_rank, 3);
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn two_two_and_row() {
        let r = theorem5_check(&p("2,2")).unwrap();
        assert_eq!(r.standard_rank, 2);
        assert!(r.holds());
        let r = theorem5_check(&p("4")).unwrap();
        assert_eq!((r.module_dim, r.d_kernel_dim), (1, 1));
        assert!(r.holds());
    }
}
