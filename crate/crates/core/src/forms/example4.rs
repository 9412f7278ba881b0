//! The decomposition of L_(2,1,1) in four variables into the trivial,
//! (2,2), (2,1,1) and two copies of the (3,1) representation, with
//! explicit bases, and its splitting by the degree swap x_i²x_j ↔ x_i x_j².

use num_traits::{One, Zero};
use serde::Serialize;

use super::{l_lambda, Form, FormSpace, Monomial};
use crate::characters::CharacterTable;
use crate::error::Result;
use crate::exactla::{format_rational, Rational, RationalMatrix};
use crate::partitions::Partition;

const N: usize = 4;

fn cube_term(i: usize, j: usize, c: i64) -> Form {
    let mut exps = vec![0; N];
    exps[i] = 2;
    exps[j] = 1;
    Form::term(Monomial::new(exps), Rational::from_integer(c.into()))
}

fn sum<I: IntoIterator<Item = Form>>(forms: I) -> Form {
    forms.into_iter().fold(Form::zero(N), |acc, f| acc.add(&f))
}

fn ordered_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..N).flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// D = Σ_{i≠j} x_i² x_j.
fn form_d() -> Form {
    sum(ordered_pairs().map(|(i, j)| cube_term(i, j, 1)))
}

/// (x_a − x_b)(x_c − x_d)(x1 + x2 + x3 + x4), 1-based indices.
fn form_c(a: usize, b: usize, c: usize, d: usize) -> Form {
    Form::product(
        N,
        &[
            Form::difference(N, a - 1, b - 1),
            Form::difference(N, c - 1, d - 1),
            Form::linear_sum(N),
        ],
    )
}

/// (x_a − x_b)(x_a − x_c)(x_b − x_c), 1-based indices.
fn form_sp(a: usize, b: usize, c: usize) -> Form {
    Form::product(
        N,
        &[
            Form::difference(N, a - 1, b - 1),
            Form::difference(N, a - 1, c - 1),
            Form::difference(N, b - 1, c - 1),
        ],
    )
}

/// A_k = Σ_{i≠j} ε_{ij} x_i² x_j with ε_{ij} = +1 when k ∈ {i, j} and −1
/// otherwise (k 1-based).
fn form_a(k: usize) -> Form {
    let k = k - 1;
    sum(ordered_pairs().map(|(i, j)| cube_term(i, j, if i == k || j == k { 1 } else { -1 })))
}

/// B_k = x_k²·Σ_{j≠k} x_j − x_k·Σ_{j≠k} x_j² (k 1-based).
fn form_b(k: usize) -> Form {
    let k = k - 1;
    sum((0..N)
        .filter(|&j| j != k)
        .map(|j| cube_term(k, j, 1).add(&cube_term(j, k, -1))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example4Component {
    pub name: String,
    pub basis: Vec<Form>,
    pub dim: usize,
    pub invariant: bool,
    /// Character values in partition order of the cycle types.
    pub character: Vec<String>,
    /// The irreducible whose character this is, if any.
    pub irreducible: Option<Partition>,
    pub expected: Partition,
    /// "even" or "odd" under the degree swap, or "mixed".
    pub parity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example4Report {
    pub lambda: Partition,
    pub l_dim: usize,
    /// ⟨ψ_λ, χ^μ⟩ for every μ with a nonzero value, in partition order.
    pub multiplicities: Vec<(Partition, u64)>,
    pub components: Vec<Example4Component>,
    /// Rank of all component bases together.
    pub total_rank: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub c3: Form,
    /// (a, b) with C₃ = a·C₁ + b·C₂, found by solving the linear system.
    pub c3_coefficients: Option<(String, String)>,
    /// C₁ − C₂ + C₃ expands to zero.
    pub c_relation_holds: bool,
}

impl Example4Report {
    pub fn holds(&self) -> bool {
        let dims: Vec<usize> = self.components.iter().map(|c| c.dim).collect();
        let parity: Vec<&str> = self.components.iter().map(|c| c.parity.as_str()).collect();
        self.l_dim == 12
            && dims == [1, 2, 3, 3, 3]
            && self.total_rank == 12
            && self
                .components
                .iter()
                .all(|c| c.invariant && c.irreducible.as_ref() == Some(&c.expected))
            && (self.even_dim, self.odd_dim) == (6, 6)
            && parity == ["even", "even", "odd", "even", "odd"]
            && self.c3_coefficients == Some(("-1".into(), "1".into()))
            && self.c_relation_holds
    }
}

fn parity_of(space: &FormSpace, even: &FormSpace, odd: &FormSpace) -> Result<&'static str> {
    Ok(if space.sum(even)? == *even {
        "even"
    } else if space.sum(odd)? == *odd {
        "odd"
    } else {
        "mixed"
    })
}

pub fn example4_check() -> Result<Example4Report> {
    let lambda = Partition::new(vec![2, 1, 1])?;
    let l = l_lambda(&lambda)?;
    let table = CharacterTable::get(N)?;

    // Degree swap x_i²x_j ↔ x_i x_j² as a matrix on L_λ coordinates.
    let swap_map = [0, 2, 1];
    let dim = l.ambient_dim();
    let mut swap = RationalMatrix::zeros(dim, dim);
    for (j, m) in l.monomials().iter().enumerate() {
        let image = Form::term(m.clone(), Rational::one()).relabel_exponents(&swap_map);
        for (i, c) in l.coordinates_in_ambient(&image)?.into_iter().enumerate() {
            if !c.is_zero() {
                swap.set(i, j, c);
            }
        }
    }
    let shifted = |sign: i64| {
        let mut m = swap.clone();
        for i in 0..dim {
            let v = m.get(i, i) - Rational::from_integer(sign.into());
            m.set(i, i, v);
        }
        m
    };
    let even = l.with_subspace(shifted(1).kernel());
    let odd = l.with_subspace(shifted(-1).kernel());

    let c1 = form_c(1, 2, 3, 4);
    let c2 = form_c(1, 3, 2, 4);
    let c3 = form_c(1, 4, 2, 3);
    let specs: Vec<(&str, Vec<Form>, &str)> = vec![
        ("D", vec![form_d()], "4"),
        ("C", vec![c1.clone(), c2.clone()], "2,2"),
        (
            "SP",
            vec![form_sp(1, 2, 3), form_sp(2, 3, 4), form_sp(1, 3, 4)],
            "2,1,1",
        ),
        ("A", (1..=3).map(form_a).collect(), "3,1"),
        ("B", (1..=3).map(form_b).collect(), "3,1"),
    ];

    let mut components = Vec::new();
    let mut all = Vec::new();
    for (name, basis, expected) in specs {
        let space = l.span_of(&basis)?;
        let invariant = space.is_invariant()?;
        let (character, irreducible) = if invariant {
            let chi = space.character()?;
            let which = table
                .partitions()
                .iter()
                .find(|mu| table.irreducible(mu).map(|x| *x == chi).unwrap_or(false))
                .cloned();
            (chi.values().iter().map(format_rational).collect(), which)
        } else {
            (Vec::new(), None)
        };
        all.extend(basis.iter().cloned());
        components.push(Example4Component {
            name: name.into(),
            dim: space.dim(),
            invariant,
            character,
            irreducible,
            expected: expected.parse()?,
            parity: parity_of(&space, &even, &odd)?.into(),
            basis,
        });
    }

    let columns = RationalMatrix::from_rows(
        dim,
        vec![
            l.coordinates_in_ambient(&c1)?,
            l.coordinates_in_ambient(&c2)?,
        ],
    )?
    .transpose();
    let c3_coefficients = columns
        .solve(&l.coordinates_in_ambient(&c3)?)?
        .map(|x| (format_rational(&x[0]), format_rational(&x[1])));

    let psi = table.perm_character(&lambda)?;
    let mut multiplicities = Vec::new();
    for mu in table.partitions() {
        let m = table.multiplicity(mu, psi)?;
        if m > 0 {
            multiplicities.push((mu.clone(), m));
        }
    }

    Ok(Example4Report {
        l_dim: l.ambient_dim(),
        multiplicities,
        total_rank: l.span_of(&all)?.dim(),
        even_dim: even.dim(),
        odd_dim: odd.dim(),
        c_relation_holds: c1.sub(&c2).add(&c3).is_zero(),
        c3,
        c3_coefficients,
        components,
        lambda,
    })
}
