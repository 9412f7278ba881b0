//! The covering-relation system on multiplicity deviations, and the flow
//! problem of spreading the uniform distribution on partitions of n−1 along
//! Young-graph edges onto the uniform distribution on partitions of n.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::multiplicity_table;
use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix};
use crate::partitions::{cover_edges, enumerate_partitions, Partition};
use crate::tableaux::{kostka, Weight};

/// Rows ρ ⊢ n−1 with ρ ⊵ bar(λ), columns μ ⊢ n with μ ⊵ λ, entry 1 iff μ ≻ ρ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct System3 {
    pub lambda: Partition,
    pub row_index: Vec<Partition>,
    pub col_index: Vec<Partition>,
    pub matrix: RationalMatrix,
}

fn covers(mu: &Partition, rho: &Partition) -> bool {
    mu.size() == rho.size() + 1 && (0..mu.len().max(rho.len())).all(|i| mu.part(i) >= rho.part(i))
}

fn require_n_at_least_two(lambda: &Partition) -> Result<()> {
    if lambda.size() < 2 {
        return Err(Error::InvalidPartition(format!(
            "({lambda}) must have at least two cells"
        )));
    }
    Ok(())
}

pub fn build_system3(lambda: &Partition) -> Result<System3> {
    require_n_at_least_two(lambda)?;
    let n = lambda.size();
    let bar = lambda.bar()?;
    let row_index: Vec<Partition> = enumerate_partitions(n - 1)
        .into_iter()
        .filter(|rho| rho.dominates_same(&bar))
        .collect();
    let col_index: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|mu| mu.dominates_same(lambda))
        .collect();
    let mut matrix = RationalMatrix::zeros(row_index.len(), col_index.len());
    for (i, rho) in row_index.iter().enumerate() {
        for (j, mu) in col_index.iter().enumerate() {
            if covers(mu, rho) {
                matrix.set(i, j, Rational::one());
            }
        }
    }
    Ok(System3 {
        lambda: lambda.clone(),
        row_index,
        col_index,
        matrix,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement1Report {
    pub lambda: Partition,
    pub rows: usize,
    pub cols: usize,
    pub bar_bijective: bool,
    pub square: bool,
    pub kernel_dim: usize,
    pub unipotent: bool,
}

impl Statement1Report {
    /// bar-bijective ⇒ square, trivial kernel and unipotent.
    pub fn implication_holds(&self) -> bool {
        !self.bar_bijective || (self.square && self.kernel_dim == 0 && self.unipotent)
    }
}

impl System3 {
    /// Whether μ ↦ bar(μ) maps the columns one-to-one onto the rows.
    pub fn bar_bijective(&self) -> Result<bool> {
        let mut images = self
            .col_index
            .iter()
            .map(Partition::bar)
            .collect::<Result<Vec<_>>>()?;
        images.sort();
        let before = images.len();
        images.dedup();
        if images.len() != before {
            return Ok(false);
        }
        let mut rows = self.row_index.clone();
        rows.sort();
        Ok(images == rows)
    }

    /// With column μ identified with row bar(μ): unit diagonal, and a
    /// nonzero entry in row ρ, column μ only when bar(μ) ⊴ ρ. Ordering both
    /// sides by a linear extension of dominance then makes the matrix
    /// triangular with ones on the diagonal.
    pub fn unipotent(&self) -> Result<bool> {
        if !self.bar_bijective()? {
            return Ok(false);
        }
        for (j, mu) in self.col_index.iter().enumerate() {
            let b = mu.bar()?;
            for (i, rho) in self.row_index.iter().enumerate() {
                let nonzero = !self.matrix.get(i, j).is_zero();
                if *rho == b && !nonzero {
                    return Ok(false);
                }
                if nonzero && !rho.dominates_same(&b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn kernel_dim(&self) -> usize {
        self.matrix.cols() - self.matrix.rank()
    }

    pub fn report(&self) -> Result<Statement1Report> {
        Ok(Statement1Report {
            lambda: self.lambda.clone(),
            rows: self.matrix.rows(),
            cols: self.matrix.cols(),
            bar_bijective: self.bar_bijective()?,
            square: self.matrix.rows() == self.matrix.cols(),
            kernel_dim: self.kernel_dim(),
            unipotent: self.unipotent()?,
        })
    }
}

pub fn statement1_check(lambda: &Partition) -> Result<Statement1Report> {
    build_system3(lambda)?.report()
}

/// Covering-system reports for every λ ⊢ n, in partition order.
pub fn kernel_sweep(n: usize) -> Result<Vec<Statement1Report>> {
    enumerate_partitions(n)
        .par_iter()
        .map(statement1_check)
        .collect()
}

/// Partitions λ ⊢ n with 2λ₁ ≥ n whose bar map is not bijective. Only the
/// boundary case 2λ₁ = n occurs: there (n/2, n/2) and (n/2+1, n/2−1) both
/// dominate λ and share the bar (n/2, n/2−1).
pub fn lemma4_counterexamples(n: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        if 2 * lambda.part(0) >= n && !build_system3(&lambda)?.bar_bijective()? {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// λ₁ > n/2 forces the bar map to be bijective on the index sets.
pub fn lemma4_check(n: usize) -> Result<bool> {
    Ok(lemma4_counterexamples(n)?
        .iter()
        .all(|lambda| 2 * lambda.part(0) == n))
}

/// With Y = M − K, checks Σ_{μ≻ρ} Y(μ,λ) = 0 for all λ ⊢ n, ρ ⊢ n−1.
pub fn eq3_residual_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidPartition(format!("n = {n} is below 2")));
    }
    let m = multiplicity_table(n)?;
    let mut y: HashMap<(usize, usize), i128> = HashMap::new();
    for (i, mu) in m.partitions.iter().enumerate() {
        for (j, lambda) in m.partitions.iter().enumerate() {
            let k = kostka(mu, &Weight::from(lambda))?;
            y.insert((i, j), m.entries[i][j] as i128 - k as i128);
        }
    }
    let index: HashMap<&Partition, usize> = m
        .partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    for rho in enumerate_partitions(n - 1) {
        let succ: Vec<usize> = rho.successors().iter().map(|mu| index[mu]).collect();
        for j in 0..m.partitions.len() {
            if succ.iter().map(|&i| y[&(i, j)]).sum::<i128>() != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Scaled integer network: each γ ⊢ n−1 supplies p(n), each λ ⊢ n demands
/// p(n−1), edges are the covering pairs. Total supply = demand = p(n−1)·p(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowInstance {
    pub n: usize,
    pub left: Vec<Partition>,
    pub right: Vec<Partition>,
    /// (index into `left`, index into `right`).
    pub edges: Vec<(usize, usize)>,
    pub supply: u64,
    pub demand: u64,
}

impl FlowInstance {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPartition(format!("n = {n} is below 2")));
        }
        let left = enumerate_partitions(n - 1);
        let right = enumerate_partitions(n);
        let li: HashMap<&Partition, usize> = left.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let ri: HashMap<&Partition, usize> =
            right.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut edges: Vec<(usize, usize)> = cover_edges(n)
            .iter()
            .map(|e| (li[&e.lower], ri[&e.upper]))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(FlowInstance {
            n,
            supply: right.len() as u64,
            demand: left.len() as u64,
            left,
            right,
            edges,
        })
    }

    pub fn total(&self) -> u64 {
        self.supply * self.left.len() as u64
    }

    /// Exact check of a candidate transport matrix (rows γ, columns λ):
    /// nonnegative, zero off covering pairs, row sums 1/p(n−1), column sums
    /// 1/p(n).
    pub fn verify_witness(&self, c: &RationalMatrix) -> bool {
        if c.rows() != self.left.len() || c.cols() != self.right.len() {
            return false;
        }
        let row_target = Rational::new(1.into(), (self.left.len() as i64).into());
        let col_target = Rational::new(1.into(), (self.right.len() as i64).into());
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                let v = c.get(i, j);
                if *v < Rational::zero() {
                    return false;
                }
                if !v.is_zero() && self.edges.binary_search(&(i, j)).is_err() {
                    return false;
                }
            }
        }
        let rows_ok = (0..c.rows()).all(|i| c.row(i).iter().sum::<Rational>() == row_target);
        let cols_ok = (0..c.cols())
            .all(|j| (0..c.rows()).map(|i| c.get(i, j)).sum::<Rational>() == col_target);
        rows_ok && cols_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymorphismReport {
    pub n: usize,
    pub feasible: bool,
    /// Value of a maximum flow in the scaled network.
    pub max_flow: u64,
    /// Flow needed for feasibility, p(n−1)·p(n).
    pub required: u64,
    /// Capacity of the minimum cut found from the final residual graph;
    /// equals `max_flow`, so it certifies the flow is maximum.
    pub cut_capacity: u64,
    /// Left nodes on the source side of the minimum cut.
    pub cut_left: Vec<Partition>,
    /// Right nodes on the source side of the minimum cut.
    pub cut_right: Vec<Partition>,
    /// Transport matrix c(γ,λ) when feasible; rows `left`, columns `right`.
    pub matrix: Option<RationalMatrix>,
}

struct Network {
    cap: Vec<HashMap<usize, u64>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            cap: vec![HashMap::new(); nodes],
        }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: u64) {
        *self.cap[a].entry(b).or_default() += c;
        self.cap[b].entry(a).or_default();
    }

    // Shortest augmenting paths (Edmonds–Karp). Neighbours are visited in
    // sorted order so the resulting flow is deterministic.
    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let adj: Vec<Vec<usize>> = self
            .cap
            .iter()
            .map(|m| {
                let mut v: Vec<usize> = m.keys().copied().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut total = 0;
        loop {
            let mut prev = vec![usize::MAX; self.cap.len()];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &v in &adj[u] {
                    if prev[v] == usize::MAX && self.cap[u][&v] > 0 {
                        prev[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut v = t;
            while v != s {
                let u = prev[v];
                bottleneck = bottleneck.min(self.cap[u][&v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = prev[v];
                *self.cap[u].get_mut(&v).unwrap() -= bottleneck;
                *self.cap[v].get_mut(&u).unwrap() += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.cap.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (&v, &c) in &self.cap[u] {
                if c > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

pub fn polymorphism_feasibility(n: usize) -> Result<PolymorphismReport> {
    let inst = FlowInstance::new(n)?;
    let (nl, nr) = (inst.left.len(), inst.right.len());
    let source = 0;
    let sink = 1 + nl + nr;
    let total = inst.total();
    let mut net = Network::new(nl + nr + 2);
    for i in 0..nl {
        net.add_edge(source, 1 + i, inst.supply);
    }
    for &(i, j) in &inst.edges {
        net.add_edge(1 + i, 1 + nl + j, total);
    }
    for j in 0..nr {
        net.add_edge(1 + nl + j, sink, inst.demand);
    }
    let original = net.cap.clone();
    let max_flow = net.max_flow(source, sink);

    let side = net.reachable(source);
    let mut cut_capacity = 0;
    for (u, edges) in original.iter().enumerate() {
        for (&v, &c) in edges {
            if side[u] && !side[v] {
                cut_capacity += c;
            }
        }
    }
    if cut_capacity != max_flow {
        return Err(Error::CertificateFailure(format!(
            "flow {max_flow} does not match cut {cut_capacity}"
        )));
    }

    let matrix = if max_flow == total {
        let mut c = RationalMatrix::zeros(nl, nr);
        let scale = Rational::from_integer((total as i64).into());
        for &(i, j) in &inst.edges {
            let used = original[1 + i][&(1 + nl + j)] - net.cap[1 + i][&(1 + nl + j)];
            if used > 0 {
                c.set(i, j, Rational::from_integer((used as i64).into()) / &scale);
            }
        }
        if !inst.verify_witness(&c) {
            return Err(Error::CertificateFailure(format!(
                "flow witness for n = {n} fails its constraints"
            )));
        }
        Some(c)
    } else {
        None
    };

    Ok(PolymorphismReport {
        n,
        feasible: matrix.is_some(),
        max_flow,
        required: total,
        cut_capacity,
        cut_left: (0..nl)
            .filter(|&i| side[1 + i])
            .map(|i| inst.left[i].clone())
            .collect(),
        cut_right: (0..nr)
            .filter(|&j| side[1 + nl + j])
            .map(|j| inst.right[j].clone())
            .collect(),
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_row_system() {
        let s = build_system3(&p("5")).unwrap();
        assert_eq!(s.row_index, vec![p("4")]);
        assert_eq!(s.col_index, vec![p("5")]);
        assert_eq!(s.matrix, RationalMatrix::from_i64(&[&[1]]));
        let r = s.report().unwrap();
        assert!(r.bar_bijective && r.square && r.unipotent);
        assert_eq!(r.kernel_dim, 0);
    }

    #[test]
    fn two_one_one() {
        let s = build_system3(&p("2,1,1")).unwrap();
        assert_eq!(s.row_index, vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(s.col_index, vec![p("4"), p("3,1"), p("2,2"), p("2,1,1")]);
        assert_eq!(
            s.matrix,
            RationalMatrix::from_i64(&[&[1, 1, 0, 0], &[0, 1, 1, 1], &[0, 0, 0, 1]])
        );
        let r = s.report().unwrap();
        assert!(!r.bar_bijective && !r.square);
        assert_eq!(r.kernel_dim, 1);
        assert!(r.implication_holds());
    }

    #[test]
    fn two_two() {
        let s = build_system3(&p("2,2")).unwrap();
        assert_eq!(s.col_index, vec![p("4"), p("3,1"), p("2,2")]);
        assert_eq!(s.row_index, vec![p("3"), p("2,1")]);
    }

    #[test]
    fn too_small() {
        assert!(build_system3(&p("1")).is_err());
        assert!(polymorphism_feasibility(1).is_err());
    }

    #[test]
    fn residual_small() {
        assert!(eq3_residual_check(4).unwrap());
        assert!(eq3_residual_check(5).unwrap());
    }

    #[test]
    fn lemma4_small() {
        for n in 2..=8 {
            assert!(lemma4_check(n).unwrap());
        }
        assert_eq!(lemma4_counterexamples(5).unwrap(), vec![]);
        assert_eq!(
            lemma4_counterexamples(4).unwrap(),
            vec![p("2,2"), p("2,1,1")]
        );
        let r = statement1_check(&p("3,3")).unwrap();
        assert_eq!((r.rows, r.cols, r.kernel_dim), (3, 4, 1));
    }

    #[test]
    fn flow_two_and_three() {
        let r = polymorphism_feasibility(2).unwrap();
        assert!(r.feasible);
        let m = r.matrix.unwrap();
        assert_eq!(*m.get(0, 0), ratio(1, 2));
        assert_eq!(*m.get(0, 1), ratio(1, 2));

        let r = polymorphism_feasibility(3).unwrap();
        assert!(r.feasible);
        let inst = FlowInstance::new(3).unwrap();
        let hand = RationalMatrix::from_rows(
            3,
            vec![
                vec![ratio(1, 3), ratio(1, 6), rat(0)],
                vec![rat(0), ratio(1, 6), ratio(1, 3)],
            ],
        )
        .unwrap();
        assert!(inst.verify_witness(&hand));
        assert!(inst.verify_witness(r.matrix.as_ref().unwrap()));
    }

    #[test]
    fn witness_checker_rejects_bad_matrices() {
        let inst = FlowInstance::new(3).unwrap();
        let off_support = RationalMatrix::from_rows(
            3,
            vec![
                vec![ratio(1, 3), ratio(1, 6), rat(0)],
                vec![rat(0), ratio(1, 6), ratio(1, 3)],
            ],
        )
        .unwrap();
        let mut bad = off_support.clone();
        bad.set(0, 2, ratio(1, 6));
        bad.set(0, 1, rat(0));
        assert!(!inst.verify_witness(&bad));
        let mut bad_sum = off_support;
        bad_sum.set(0, 0, ratio(1, 2));
        assert!(!inst.verify_witness(&bad_sum));
    }
}
