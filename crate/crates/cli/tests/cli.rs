use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supershift")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_all_matches_every_law() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("law matches: 12/12"), "{text}");
    assert!(!text.contains("RESIDUAL"));
}

#[test]
fn single_suite_with_one_sign() {
    let o = run(&["verify", "pauli", "--eps4", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pauli/eps-1/"));
    assert!(!text.contains("pauli/eps+1/"));
}

#[test]
fn component_filter() {
    let o = run(&["verify", "linear", "--component", "kappa"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("linear/kappa"));
    assert!(!text.contains("linear/psi"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "bogus"][..],
        &["verify", "linear", "--component", "omega"],
        &["derive"],
        &["derive", "omega-prime"],
        &["verify", "pauli", "--eps4", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_report_shape() {
    let o = run(&["verify", "composition", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid json");
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["check_name"].is_string());
        assert_eq!(c["status"], "match");
        assert!(c["millis"].is_u64());
    }
}

#[test]
fn derive_is_deterministic() {
    let a = run(&["derive", "phi-prime", "--format", "latex"]);
    let b = run(&["derive", "--component", "phi-prime", "--format", "latex"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with(r"\phi' = "));
}

#[test]
fn chiral_law_in_text() {
    let o = run(&["derive", "chiral-f-prime"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("F' = "));
}

#[test]
fn shifted_expansion_is_byte_identical() {
    let a = run(&["expand", "phi", "--shifted", "--format", "latex"]);
    let b = run(&["expand", "phi", "--shifted", "--format", "latex"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains(r"\theta^2 \overline{\theta}^2 \zeta^2 \overline{\zeta}^2"));
}

#[test]
fn unshifted_superfield() {
    let o = run(&["expand", "chiral"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chiral = "));
}
