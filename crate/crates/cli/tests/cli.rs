use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dedekind"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn theta_of_two_element_group() {
    let o = run(&["theta", "--group", "cyclic:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x_0^2 - x_1^2\n");
}

#[test]
fn theta_strategies_agree() {
    let reference = stdout(&run(&["theta", "--group", "cyclic:4"]));
    for s in ["leibniz", "minor", "dft", "cross-check"] {
        let o = run(&["theta", "--group", "cyclic:4", "--det-strategy", s]);
        assert_eq!(o.status.code(), Some(0), "{s}");
        assert_eq!(stdout(&o), reference, "{s}");
    }
}

#[test]
fn factorize_sym3_json() {
    let o = run(&["factorize", "--group", "sym:3", "--subgroup", "a3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    assert!(v["checks"]
        .as_object()
        .unwrap()
        .values()
        .all(|c| c == &serde_json::Value::Bool(true)));
    assert_eq!(v["coefficients"].as_object().unwrap().len(), 3);
}

#[test]
fn factorize_latex() {
    let o = run(&[
        "factorize",
        "--group",
        "cyclic:4",
        "--subgroup",
        "2",
        "--format",
        "latex",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("\\Theta(G) = "));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["theta", "--group", "nope"][..],
        &["theta"][..],
        &["bogus"][..],
        &["theta", "--group", "cyclic:2", "--format", "xml"][..],
        &["factorize", "--group", "sym:3"][..],
        &["theta", "--group", "sym:4"][..],
        &["verify"][..],
        &["conjugate", "--group", "cyclic:4", "--coeffs", "1,2"][..],
        &["groups", "--format", "latex"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn order_cap_flag() {
    assert_eq!(
        run(&["theta", "--group", "cyclic:4", "--order-cap", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_file_input() {
    let dir = std::env::temp_dir().join(format!("dedekind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("z2.json");
    std::fs::write(&good, r#"{"order": 2, "table": [[0,1],[1,0]], "names": ["e","t"]}"#).unwrap();
    let o = run(&["theta", "--group", good.to_str().unwrap()]);
    assert_eq!(stdout(&o), "x_0^2 - x_1^2\n");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    let o = run(&["theta", "--group", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a group"));
}

#[test]
fn groups_listing() {
    let o = run(&["groups", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["schema"], "1");
    assert!(v["groups"]
        .as_array()
        .unwrap()
        .iter()
        .any(|g| g["key"] == "quaternion8"));
}

#[test]
fn conjugate_numeric_element() {
    let o = run(&[
        "conjugate",
        "--group",
        "cyclic:4",
        "--subgroup",
        "2",
        "--coeffs",
        "1,2,3,-4",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["conjugate"]["1"]["text"], "-2");
    assert_eq!(v["conjugate"]["3"]["text"], "4");
}

#[test]
fn invert2_passes() {
    let o = run(&["invert2", "--group", "dihedral:4", "--samples", "10", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn lift_prints_transversal() {
    let o = run(&["lift", "--group", "cyclic:2", "--subgroup", "trivial"]);
    let s = stdout(&o);
    assert!(s.starts_with("transversal = [0, 1]\n"));
    assert!(s.contains("Det = (x_0^2 - x_1^2)·0"));
}

#[test]
fn verify_all_is_deterministic_and_reports_the_red_law() {
    let a = run(&["verify", "--all", "--seed", "42"]);
    let b = run(&["verify", "--all", "--seed", "42", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    // exactly one law fails, so the run is a verification failure rather than a usage error
    assert_eq!(a.status.code(), Some(1));
    let text = stdout(&a);
    assert_eq!(text.matches("FAIL").count(), 1);
    assert!(text.contains("criterion 11 FAIL"));
    let j = run(&["verify", "--all", "--format", "json"]);
    let v = json(&j);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["criteria"].as_array().unwrap().len(), 11);
}
