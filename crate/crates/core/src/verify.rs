//! Sweeps of the identities over all partitions up to a bound, producing
//! uniform reports. Work fans out over a rayon pool; counterexamples are
//! listed in partition order regardless of completion order.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{
    conjugate_twist_check, eq1_check, lemma1_check, theorem1_report, youngs_rule_mismatches,
};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::tableaux::{enumerate_standard, eq2_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameters: Value,
    pub status: Status,
    pub counterexamples: Vec<Value>,
    /// Wall-clock time; kept out of serialized payloads so output is
    /// reproducible.
    #[serde(skip)]
    pub timing_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<Value>,
}

impl VerificationReport {
    pub fn new(
        check_name: &str,
        parameters: Value,
        counterexamples: Vec<Value>,
        started: Instant,
    ) -> Self {
        VerificationReport {
            check_name: check_name.into(),
            parameters,
            status: if counterexamples.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            counterexamples,
            timing_ms: started.elapsed().as_millis(),
            artifact: None,
        }
    }

    pub fn with_artifact(mut self, artifact: Value) -> Self {
        self.artifact = Some(artifact);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The identities reachable through `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Theorem1,
    YoungsRule,
    Eq1,
    Eq2,
    Lemma1,
    Dimension,
    ConjugateTwist,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theorem1,
        Check::YoungsRule,
        Check::Eq1,
        Check::Eq2,
        Check::Lemma1,
        Check::Dimension,
        Check::ConjugateTwist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::YoungsRule => "youngs-rule",
            Check::Eq1 => "eq1",
            Check::Eq2 => "eq2",
            Check::Lemma1 => "lemma1",
            Check::Dimension => "dimension",
            Check::ConjugateTwist => "conjugate-twist",
        }
    }

    /// Whether the sweep needs character tables (and so the character limit).
    pub fn uses_characters(self) -> bool {
        !matches!(self, Check::Eq2 | Check::Dimension)
    }

    pub fn run(self, max_n: usize) -> Result<VerificationReport> {
        match self {
            Check::Theorem1 => verify_theorem1(max_n),
            Check::YoungsRule => verify_youngs_rule(max_n),
            Check::Eq1 => verify_eq1(max_n),
            Check::Eq2 => verify_eq2(max_n),
            Check::Lemma1 => verify_lemma1(max_n),
            Check::Dimension => verify_dimension(max_n),
            Check::ConjugateTwist => verify_conjugate_twist(max_n),
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

fn all_partitions(from: usize, max_n: usize) -> Vec<Partition> {
    (from..=max_n).flat_map(enumerate_partitions).collect()
}

/// All (λ ⊢ n, ρ ⊢ n−1) with 1 ≤ n ≤ max_n.
fn all_adjacent_pairs(max_n: usize) -> Vec<(Partition, Partition)> {
    (1..=max_n)
        .flat_map(|n| {
            let lower = enumerate_partitions(n - 1);
            enumerate_partitions(n)
                .into_iter()
                .flat_map(move |l| lower.clone().into_iter().map(move |r| (l.clone(), r)))
        })
        .collect()
}

fn collect_failures<T, F>(items: &[T], f: F) -> Result<Vec<Value>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Value>> + Sync + Send,
{
    let out = items.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(out.into_iter().flatten().collect())
}

/// ⟨ψ_λ, φ_λ⟩ = 1 with χ^λ the only common constituent.
pub fn verify_theorem1(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let items = all_partitions(1, max_n);
    let bad = collect_failures(&items, |l| {
        let r = theorem1_report(l)?;
        Ok((!r.holds()).then(|| serde_json::to_value(&r).expect("serializable")))
    })?;
    Ok(VerificationReport::new(
        "theorem1",
        json!({ "max_n": max_n }),
        bad,
        t,
    ))
}

/// M(μ,λ) from characters equals K(μ,λ) from tableaux.
pub fn verify_youngs_rule(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for m in youngs_rule_mismatches(n)? {
            bad.push(serde_json::to_value(&m).expect("serializable"));
        }
    }
    Ok(VerificationReport::new(
        "youngs-rule",
        json!({ "max_n": max_n }),
        bad,
        t,
    ))
}

fn pair_value(l: &Partition, r: &Partition, left: u64, right: u64) -> Value {
    json!({ "lambda": l, "rho": r, "left": left, "right": right })
}

pub fn verify_eq1(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let items = all_adjacent_pairs(max_n);
    let bad = collect_failures(&items, |(l, r)| {
        let (a, b) = eq1_check(l, r)?;
        Ok((a != b).then(|| pair_value(l, r, a, b)))
    })?;
    Ok(VerificationReport::new(
        "eq1",
        json!({ "max_n": max_n, "pairs": items.len() }),
        bad,
        t,
    ))
}

pub fn verify_eq2(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let items = all_adjacent_pairs(max_n);
    let bad = collect_failures(&items, |(l, r)| {
        let (a, b) = eq2_check(l, r)?;
        Ok((a != b).then(|| pair_value(l, r, a, b)))
    })?;
    Ok(VerificationReport::new(
        "eq2",
        json!({ "max_n": max_n, "pairs": items.len() }),
        bad,
        t,
    ))
}

pub fn verify_lemma1(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let items = all_partitions(1, max_n);
    let bad = collect_failures(&items, |l| {
        Ok((!lemma1_check(l)?).then(|| json!({ "lambda": l })))
    })?;
    Ok(VerificationReport::new(
        "lemma1",
        json!({ "max_n": max_n }),
        bad,
        t,
    ))
}

/// n·f^ρ = Σ_{μ≻ρ} f^μ for ρ ⊢ n−1, and f^λ equals the number of standard
/// tableaux found by enumeration.
pub fn verify_dimension(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let rhos: Vec<Partition> = (0..max_n).flat_map(enumerate_partitions).collect();
    let mut bad = collect_failures(&rhos, |rho| {
        let n = rho.size() as u64 + 1;
        let left = n * rho.standard_count();
        let right: u64 = rho.successors().iter().map(Partition::standard_count).sum();
        Ok((left != right).then(|| json!({ "rho": rho, "left": left, "right": right })))
    })?;
    let lambdas = all_partitions(1, max_n);
    bad.extend(collect_failures(&lambdas, |l| {
        let direct = enumerate_standard(l).len() as u64;
        let f = l.standard_count();
        Ok((direct != f).then(|| json!({ "lambda": l, "recursion": f, "enumerated": direct })))
    })?);
    Ok(VerificationReport::new(
        "dimension",
        json!({ "max_n": max_n }),
        bad,
        t,
    ))
}

pub fn verify_conjugate_twist(max_n: usize) -> Result<VerificationReport> {
    let t = Instant::now();
    let ns: Vec<usize> = (1..=max_n).collect();
    let bad = collect_failures(&ns, |&n| {
        Ok((!conjugate_twist_check(n)?).then(|| json!({ "n": n })))
    })?;
    Ok(VerificationReport::new(
        "conjugate-twist",
        json!({ "max_n": max_n }),
        bad,
        t,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for c in Check::ALL {
            let r = c.run(5).unwrap();
            assert!(r.passed(), "{}: {:?}", c.name(), r.counterexamples);
        }
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("theorem9".parse::<Check>().is_err());
    }

    #[test]
    fn serialized_report_has_no_timing() {
        let r = verify_lemma1(3).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "pass");
        assert!(v.get("timing_ms").is_none());
    }
}
