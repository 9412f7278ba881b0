//! Regression snapshots of structured reports. Run with YOUNGLAB_BLESS=1 to
//! rewrite the files under tests/golden after an intended change.

use std::path::PathBuf;

use serde::Serialize;
use younglab::forms::example4_check;
use younglab::linsys::build_system3;
use younglab::tableaux::theorem4_bijection;

fn check<T: Serialize>(name: &str, value: &T) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let text = serde_json::to_string_pretty(value).unwrap() + "\n";
    if std::env::var_os("YOUNGLAB_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with YOUNGLAB_BLESS=1", path.display()));
    assert_eq!(text, expected, "{name} differs from its snapshot");
}

#[test]
fn example4_report() {
    let r = example4_check().unwrap();
    assert!(r.holds());
    check("example4.json", &r);
}

#[test]
fn bijection_321_over_41() {
    let c = theorem4_bijection(&"3,2,1".parse().unwrap(), &"4,1".parse().unwrap()).unwrap();
    assert!(c.verify());
    check("bijection_321_41.json", &c);
}

#[test]
fn bijection_221_over_31() {
    let c = theorem4_bijection(&"2,2,1".parse().unwrap(), &"3,1".parse().unwrap()).unwrap();
    assert!(c.verify());
    check("bijection_221_31.json", &c);
}

#[test]
fn system_for_33() {
    let s = build_system3(&"3,3".parse().unwrap()).unwrap();
    check("system3_33.json", &s);
}
