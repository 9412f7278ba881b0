use std::process::{Command, Output};

use serde_json::Value;
use younglab::exactla::parse_rational;
use younglab::linsys::System3;
use younglab::tableaux::BijectionCertificate;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_younglab"))
        .args(args)
        .env_remove("YOUNGLAB_MAX_N")
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn kostka_of_worked_example() {
    let out = run(&["kostka", "--mu", "4,2", "--lambda", "3,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["kostka"], 2);
    let out = run(&[
        "kostka", "--mu", "4,2", "--lambda", "3,2,1", "--format", "ascii",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n");
}

#[test]
fn bijection_certificate_round_trips() {
    let out = run(&["bijection", "--lambda", "3,2,1", "--rho", "4,1"]);
    assert_eq!(out.status.code(), Some(0));
    let cert: BijectionCertificate = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert.pairs.len(), 5);
    assert!(cert.verify());
    assert!(cert.pairs.iter().all(|p| p.left_index == p.right_index));
}

#[test]
fn theorem1_sweep_passes() {
    let out = run(&["verify", "theorem1", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["counterexamples"], Value::Array(vec![]));
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn usage_errors_exit_two_with_json() {
    for args in [
        vec!["kostka", "--mu", "4,2"],
        vec!["nonsense"],
        vec!["kostka", "--mu", "4,x", "--lambda", "3,2,1"],
        vec!["kostka", "--mu", "4,3", "--lambda", "3,2,1"],
        vec!["forms", "--check", "two-row", "--n", "6"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(
            err["error"].is_string() && err["message"].is_string(),
            "{args:?}"
        );
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn environment_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_younglab"))
        .args(["partitions", "--n", "7"])
        .env("YOUNGLAB_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "limit_exceeded");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["character-table", "--n", "6"],
        vec!["verify", "youngs-rule", "--max-n", "6"],
        vec!["forms", "--check", "example4", "--format", "ascii"],
        vec!["linsys", "--n", "8", "--format", "tsv"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn character_values_are_exact_strings() {
    let v = json_of(&run(&["character-table", "--n", "3"]));
    let rows: Vec<Vec<i64>> = v["characters"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["values"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| {
                    parse_rational(x.as_str().unwrap())
                        .unwrap()
                        .to_integer()
                        .try_into()
                        .unwrap()
                })
                .collect()
        })
        .collect();
    // classes (3), (2,1), (1,1,1)
    assert_eq!(rows, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    assert_eq!(v["classes"][1]["class_size"], "3");
}

#[test]
fn system_json_round_trips() {
    let v = json_of(&run(&["linsys", "--lambda", "3,3"]));
    let s: System3 = serde_json::from_value(v["system"].clone()).unwrap();
    assert_eq!((s.matrix.rows(), s.matrix.cols()), (3, 4));
    assert_eq!(v["report"]["kernel_dim"], 1);
}

#[test]
fn out_flag_writes_the_payload() {
    let dir = std::env::temp_dir().join(format!("younglab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("partitions.tsv");
    let out = run(&[
        "partitions",
        "--n",
        "4",
        "--format",
        "tsv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        String::from_utf8(run(&["partitions", "--n", "4", "--format", "tsv"]).stdout).unwrap()
    );
    assert!(text.starts_with("partition\tconjugate\tstandard_tableaux\n4\t1,1,1,1\t1\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn forms_checks_pass() {
    for args in [
        vec!["forms", "--check", "statement2", "--lambda", "2,1,1"],
        vec!["forms", "--check", "specht", "--lambda", "3,2"],
        vec!["forms", "--check", "two-row", "--n", "6", "--k", "2"],
        vec!["polymorphism", "--n", "9"],
    ] {
        assert_eq!(run(&args).status.code(), Some(0), "{args:?}");
    }
}
