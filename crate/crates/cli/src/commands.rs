use serde_json::{json, Value};
use younglab::characters::CharacterTable;
use younglab::exactla::format_rational;
use younglab::forms::{
    example4_check, l_lambda, statement2_character, statement2_check, theorem5_check,
    two_row_decomposition,
};
use younglab::limits::Limits;
use younglab::linsys::{build_system3, kernel_sweep, polymorphism_feasibility};
use younglab::tableaux::theorem4_bijection;
use younglab::verify::Check;
use younglab::{enumerate_partitions, enumerate_ssyt, kostka, Partition};

use crate::output::{row, Output};
use crate::{CheckArg, Command, Failure, FormsCheck};

type Result<T> = std::result::Result<T, Failure>;

fn limit(what: &'static str, n: usize, max: usize) -> Result<()> {
    Ok(Limits::check(what, n, max)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run(command: &Command, limits: Limits) -> Result<Output> {
    match command {
        Command::Partitions { n } => {
            limit("combinatorics", *n, limits.combinatorics)?;
            Ok(partitions(*n))
        }
        Command::Kostka { mu, lambda } => {
            limit("combinatorics", mu.size(), limits.combinatorics)?;
            let k = kostka(mu, lambda)?;
            Ok(Output::new(
                json!({ "mu": mu, "lambda": lambda, "kostka": k }),
                vec![
                    row(["mu", "lambda", "kostka"]),
                    row([mu.to_string(), lambda.to_string(), k.to_string()]),
                ],
                k.to_string(),
            ))
        }
        Command::Ssyt { mu, lambda } => {
            limit("combinatorics", mu.size(), limits.combinatorics)?;
            let all = enumerate_ssyt(mu, lambda)?;
            let mut table = vec![row(["index", "tableau"])];
            table.extend(
                all.iter()
                    .enumerate()
                    .map(|(i, t)| row([i.to_string(), t.ascii()])),
            );
            let text = all.iter().map(|t| t.ascii()).collect::<Vec<_>>().join("\n");
            Ok(Output::new(
                json!({ "mu": mu, "lambda": lambda, "count": all.len(), "tableaux": all }),
                table,
                text,
            ))
        }
        Command::Bijection { lambda, rho } => {
            limit("combinatorics", lambda.size(), limits.combinatorics.min(10))?;
            let cert = theorem4_bijection(lambda, rho)?;
            let mut table = vec![row([
                "left",
                "mu_tableau",
                "removed",
                "right",
                "rho_tableau",
                "gamma_weight",
            ])];
            let mut text = format!(
                "λ = ({lambda}), ρ = ({rho}): {} pairs, method {:?}\n",
                cert.pairs.len(),
                cert.method
            );
            for p in &cert.pairs {
                table.push(row([
                    p.left_index.to_string(),
                    p.mu_tableau.ascii(),
                    p.removed_symbol.to_string(),
                    p.right_index.to_string(),
                    p.rho_tableau.ascii(),
                    p.gamma_weight.to_string(),
                ]));
                text += &format!(
                    "{}  --{}-->  {}\n",
                    p.mu_tableau.ascii(),
                    p.removed_symbol,
                    p.rho_tableau.ascii()
                );
            }
            let ok = cert.verify();
            Ok(Output::new(to_json(&cert), table, text).failing_if(!ok))
        }
        Command::CharacterTable { n } => {
            limit("characters", *n, limits.characters)?;
            character_table(*n)
        }
        Command::Verify { check, max_n } => {
            let check = match check {
                CheckArg::Theorem1 => Check::Theorem1,
                CheckArg::YoungsRule => Check::YoungsRule,
                CheckArg::Eq1 => Check::Eq1,
                CheckArg::Eq2 => Check::Eq2,
                CheckArg::Lemma1 => Check::Lemma1,
                CheckArg::Dimension => Check::Dimension,
                CheckArg::ConjugateTwist => Check::ConjugateTwist,
            };
            if check.uses_characters() {
                limit("characters", *max_n, limits.characters)?;
            } else {
                limit("combinatorics", *max_n, limits.combinatorics)?;
            }
            let r = check.run(*max_n)?;
            eprintln!("{}: {} ms", r.check_name, r.timing_ms);
            let status = if r.passed() { "pass" } else { "fail" };
            let text = format!(
                "{} (max n = {max_n}): {status}, {} counterexamples",
                r.check_name,
                r.counterexamples.len()
            );
            let mut table = vec![row(["check", "max_n", "status", "counterexamples"])];
            table.push(row([
                r.check_name.clone(),
                max_n.to_string(),
                status.into(),
                r.counterexamples.len().to_string(),
            ]));
            Ok(Output::new(to_json(&r), table, text).failing_if(!r.passed()))
        }
        Command::Linsys {
            lambda: Some(lambda),
            ..
        } => {
            limit("combinatorics", lambda.size(), limits.combinatorics)?;
            let system = build_system3(lambda)?;
            let report = system.report()?;
            let mut text = format!(
                "λ = ({lambda}): {} × {}, kernel dim {}, bar-bijective {}, unipotent {}\n",
                report.rows, report.cols, report.kernel_dim, report.bar_bijective, report.unipotent
            );
            let mut table = vec![{
                let mut h = vec!["rho \\ mu".to_string()];
                h.extend(system.col_index.iter().map(|c| c.to_string()));
                h
            }];
            for (i, r) in system.row_index.iter().enumerate() {
                let entries: Vec<String> = (0..system.matrix.cols())
                    .map(|j| format_rational(system.matrix.get(i, j)))
                    .collect();
                text += &format!("{:>12}  {}\n", format!("({r})"), entries.join(" "));
                let mut cells = vec![r.to_string()];
                cells.extend(entries);
                table.push(cells);
            }
            let ok = report.implication_holds();
            Ok(
                Output::new(json!({ "system": system, "report": report }), table, text)
                    .failing_if(!ok),
            )
        }
        Command::Linsys { n, .. } => {
            let n = n.expect("clap requires --lambda or --n");
            limit("systems", n, limits.systems)?;
            let reports = kernel_sweep(n)?;
            let mut table = vec![row([
                "lambda",
                "rows",
                "cols",
                "bar_bijective",
                "kernel_dim",
                "unipotent",
            ])];
            let mut text = String::new();
            for r in &reports {
                table.push(row([
                    r.lambda.to_string(),
                    r.rows.to_string(),
                    r.cols.to_string(),
                    r.bar_bijective.to_string(),
                    r.kernel_dim.to_string(),
                    r.unipotent.to_string(),
                ]));
                text += &format!("({}): kernel dim {}\n", r.lambda, r.kernel_dim);
            }
            let ok = reports.iter().all(|r| r.implication_holds());
            Ok(Output::new(json!({ "n": n, "reports": reports }), table, text).failing_if(!ok))
        }
        Command::Polymorphism { n } => {
            limit("combinatorics", *n, limits.combinatorics)?;
            let r = polymorphism_feasibility(*n)?;
            let text = format!(
                "n = {n}: {} (max flow {} of {}, cut {})",
                if r.feasible { "feasible" } else { "infeasible" },
                r.max_flow,
                r.required,
                r.cut_capacity
            );
            let table = vec![
                row(["n", "feasible", "max_flow", "required", "cut_capacity"]),
                row([
                    n.to_string(),
                    r.feasible.to_string(),
                    r.max_flow.to_string(),
                    r.required.to_string(),
                    r.cut_capacity.to_string(),
                ]),
            ];
            Ok(Output::new(to_json(&r), table, text))
        }
        Command::Forms {
            check,
            lambda,
            n,
            k,
        } => forms(*check, lambda.as_ref(), *n, *k, limits),
    }
}

fn partitions(n: usize) -> Output {
    let ps = enumerate_partitions(n);
    let mut table = vec![row(["partition", "conjugate", "standard_tableaux"])];
    let mut items = Vec::new();
    let mut text = String::new();
    for p in &ps {
        let f = p.standard_count();
        table.push(row([
            p.to_string(),
            p.conjugate().to_string(),
            f.to_string(),
        ]));
        items.push(json!({ "partition": p, "conjugate": p.conjugate(), "standard_tableaux": f }));
        text += &format!("({p})\n{}\n\n", p.ascii_diagram());
    }
    Output::new(
        json!({ "n": n, "count": ps.len(), "partitions": items }),
        table,
        text.trim_end().to_string(),
    )
}

fn character_table(n: usize) -> Result<Output> {
    let t = CharacterTable::get(n)?;
    let classes: Vec<Value> = t
        .partitions()
        .iter()
        .zip(t.class_sizes())
        .map(|(c, s)| json!({ "cycle_type": c, "class_size": s.to_string() }))
        .collect();
    let mut chars = Vec::new();
    let mut header = vec!["lambda".to_string()];
    header.extend(t.partitions().iter().map(|c| c.to_string()));
    let mut table = vec![header];
    for (lambda, chi) in t.partitions().iter().zip(t.irreducibles()) {
        let values: Vec<String> = chi.values().iter().map(format_rational).collect();
        let mut cells = vec![lambda.to_string()];
        cells.extend(values.iter().cloned());
        table.push(cells);
        chars.push(json!({ "lambda": lambda, "values": values }));
    }
    let width = table.iter().flatten().map(String::len).max().unwrap_or(1) + 1;
    let text = table
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(
        json!({ "n": n, "classes": classes, "characters": chars }),
        table,
        text,
    ))
}

fn need<'a>(lambda: Option<&'a Partition>, what: &str) -> Result<&'a Partition> {
    lambda.ok_or_else(|| Failure::usage(format!("--lambda is required for {what}")))
}

fn forms(
    check: FormsCheck,
    lambda: Option<&Partition>,
    n: Option<usize>,
    k: Option<usize>,
    limits: Limits,
) -> Result<Output> {
    match check {
        FormsCheck::Example4 => {
            if let Some(l) = lambda {
                if l.parts() != [2, 1, 1] {
                    return Err(Failure::usage(format!(
                        "example4 is defined for λ = (2,1,1), got ({l})"
                    )));
                }
            }
            let r = example4_check()?;
            let mut table = vec![row([
                "component",
                "dim",
                "irreducible",
                "parity",
                "invariant",
            ])];
            let mut text = format!("L_(2,1,1): dim {}\n", r.l_dim);
            for c in &r.components {
                let irr = c.irreducible.as_ref().map_or("-".into(), |p| p.to_string());
                table.push(row([
                    c.name.clone(),
                    c.dim.to_string(),
                    irr.clone(),
                    c.parity.clone(),
                    c.invariant.to_string(),
                ]));
                text += &format!("{}: dim {}, ({irr}), {}\n", c.name, c.dim, c.parity);
                for f in &c.basis {
                    text += &format!("    {f}\n");
                }
            }
            text += &format!(
                "even {} + odd {}; C1 - C2 + C3 = 0: {}\n",
                r.even_dim, r.odd_dim, r.c_relation_holds
            );
            Ok(Output::new(to_json(&r), table, text).failing_if(!r.holds()))
        }
        FormsCheck::Statement2 => {
            let lambda = need(lambda, "statement2")?;
            limit("monomial_spaces", lambda.size(), limits.monomial_spaces)?;
            let holds = statement2_check(lambda)?;
            let dim = l_lambda(lambda)?.dim();
            let chi: Vec<String> = statement2_character(lambda)?
                .values()
                .iter()
                .map(format_rational)
                .collect();
            let table = vec![
                row(["lambda", "dim", "character", "holds"]),
                row([
                    lambda.to_string(),
                    dim.to_string(),
                    chi.join(","),
                    holds.to_string(),
                ]),
            ];
            let text = format!(
                "L_({lambda}): dim {dim}, character [{}], matches ψ_λ: {holds}",
                chi.join(", ")
            );
            Ok(Output::new(
                json!({ "lambda": lambda, "dim": dim, "character": chi, "holds": holds }),
                table,
                text,
            )
            .failing_if(!holds))
        }
        FormsCheck::Specht => {
            let lambda = need(lambda, "specht")?;
            limit("specht", lambda.size(), limits.specht)?;
            let r = theorem5_check(lambda)?;
            let table = vec![
                row([
                    "lambda",
                    "standard_tableaux",
                    "standard_rank",
                    "module_dim",
                    "d_kernel_dim",
                    "holds",
                ]),
                row([
                    lambda.to_string(),
                    r.standard_tableaux.to_string(),
                    r.standard_rank.to_string(),
                    r.module_dim.to_string(),
                    r.d_kernel_dim.to_string(),
                    r.holds().to_string(),
                ]),
            ];
            let text = format!(
                "({lambda}): {} standard Specht polynomials of rank {}; module dim {}; D-kernel dim {}; holds {}",
                r.standard_tableaux,
                r.standard_rank,
                r.module_dim,
                r.d_kernel_dim,
                r.holds()
            );
            let holds = r.holds();
            Ok(Output::new(to_json(&r), table, text).failing_if(!holds))
        }
        FormsCheck::TwoRow => {
            let (Some(n), Some(k)) = (n, k) else {
                return Err(Failure::usage("two-row needs --n and --k".into()));
            };
            limit("two_row", n, limits.two_row)?;
            let r = two_row_decomposition(n, k)?;
            let mut table = vec![row([
                "l",
                "partition",
                "generators",
                "dim",
                "expected_dim",
                "character_matches",
            ])];
            let mut text = format!("F_{k} in {n} variables: dim {}\n", r.f_k_dim);
            for c in &r.components {
                table.push(row([
                    c.l.to_string(),
                    c.partition.to_string(),
                    c.generators.to_string(),
                    c.dim.to_string(),
                    c.expected_dim.to_string(),
                    c.character_matches.to_string(),
                ]));
                text += &format!("  l = {}: ({}) dim {}\n", c.l, c.partition, c.dim);
            }
            let holds = r.holds();
            Ok(Output::new(to_json(&r), table, text).failing_if(!holds))
        }
    }
}
