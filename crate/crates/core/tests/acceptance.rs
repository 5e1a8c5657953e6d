use std::io::Write;
use std::time::{Duration, Instant};

use supershift::grassmann::{conjugate, grassmann_derive, ConjugationMap, Expression, GenKind, OddGenerator};
use supershift::laws::{run_suite, CheckResult, Suite, SuiteOptions, VerificationReport};
use supershift::random::{random_expression, random_homogeneous, rng, Shape};
use supershift::scalar::Scalar;
use supershift::spinor::{Chirality, Position, Spinor};
use supershift::superspace::{extract_components, reassemble, Components};

const CASES: u64 = 1000;

struct Outcome {
    number: usize,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn suite(s: Suite) -> VerificationReport {
    run_suite(s, &SuiteOptions::default())
}

fn select<'a>(report: &'a VerificationReport, prefixes: &[&str]) -> Vec<&'a CheckResult> {
    report.checks.iter().filter(|c| prefixes.iter().any(|p| c.check_name.starts_with(p))).collect()
}

fn names(check: &CheckResult, required: &str) -> bool {
    let name = check.check_name.as_str();
    name == required || name.strip_prefix(required).is_some_and(|rest| rest.starts_with(" = "))
}

/// Passes when every required check exists and no check has a residual.
fn all_match(checks: &[&CheckResult], required: &[&str]) -> (bool, String) {
    let failing: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.check_name.as_str()).collect();
    let missing: Vec<&str> = required.iter().copied().filter(|r| !checks.iter().any(|c| names(c, r))).collect();
    let ok = !checks.is_empty() && failing.is_empty() && missing.is_empty();
    let mut detail = format!("{}/{} checks match", checks.len() - failing.len(), checks.len());
    if !failing.is_empty() {
        detail.push_str(&format!("; residual in {failing:?}"));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; missing {missing:?}"));
    }
    (ok, detail)
}

fn linear_theorem() -> Outcome {
    let started = Instant::now();
    let report = suite(Suite::Linear);
    let elapsed = started.elapsed();
    let names = ["phi", "psi", "chib", "A", "M", "N", "kappa", "lambdab", "D"].map(|n| format!("linear/{n}"));
    let required: Vec<&str> = names.iter().map(String::as_str).collect();
    let checks = select(&report, &required);
    let (ok, detail) = all_match(&checks, &required);
    let fast = elapsed < Duration::from_secs(10);
    Outcome {
        number: 1,
        title: "linear multiplet",
        passed: ok && fast,
        detail: format!("{detail}; pipeline {:.2}s", elapsed.as_secs_f64()),
    }
}

fn chiral_theorem() -> Outcome {
    let report = suite(Suite::Chiral);
    let required = [
        "chiral/phi",
        "chiral/psi",
        "chiral/F",
        "chiral-substitution/phi",
        "chiral-substitution/psi",
        "chiral-substitution/F",
    ];
    let checks = select(&report, &required);
    let (passed, detail) = all_match(&checks, &required);
    Outcome { number: 2, title: "chiral multiplet, direct and substitution", passed, detail }
}

fn worked_expansions() -> Outcome {
    let report = suite(Suite::Linear);
    let required = ["expansion/phi", "expansion/theta-psi"];
    let checks = select(&report, &required);
    let (passed, detail) = all_match(&checks, &required);
    Outcome { number: 3, title: "worked expansions", passed, detail }
}

fn algebra() -> Outcome {
    let report = suite(Suite::Algebra);
    let required = ["algebra/{Q_1,Qb_1}", "algebra/{Q_1,Q_2}", "algebra/{D_1,Db_1}", "algebra/{Q_1,Db_1}", "algebra/[M_01,Q_1]"];
    let checks = select(&report, &["algebra/"]);
    let (passed, detail) = all_match(&checks, &required);
    Outcome { number: 4, title: "superalgebra brackets", passed, detail }
}

fn identities() -> Outcome {
    let mut report = suite(Suite::Pauli);
    report.extend(suite(Suite::Lorentz));
    report.extend(suite(Suite::Appendix2));
    let mut required = Vec::new();
    for eps in ["eps+1", "eps-1"] {
        for n in ["hermit1", "ovsig", "sigsig-outer", "sigcliff-undotted", "tracesig2", "sig3"] {
            required.push(format!("pauli/{eps}/{n}"));
        }
        for n in ["TrSS1", "TrSS2", "invsig-vector", "sl2c-invariance", "dual-field-strength"] {
            required.push(format!("lorentz/{eps}/{n}"));
        }
    }
    for n in ["TT1/components", "TT2/components", "TT3/undotted", "prop1/expanded", "prop2", "prop3", "ident3"] {
        required.push(format!("appendix2/{n}"));
    }
    let required: Vec<&str> = required.iter().map(String::as_str).collect();
    let checks = select(&report, &["pauli/", "lorentz/", "appendix2/"]);
    let (passed, detail) = all_match(&checks, &required);
    let evaluated: usize = checks.iter().filter_map(|c| c.evaluated).sum();
    Outcome { number: 5, title: "index identities", passed, detail: format!("{detail}; {evaluated} index tuples") }
}

fn closure() -> Outcome {
    let mut report = suite(Suite::Reality);
    report.extend(suite(Suite::Chiral));
    report.extend(suite(Suite::Induced));
    report.extend(suite(Suite::Composition));
    report.extend(suite(Suite::Linear));
    let required = [
        "reality/phi",
        "reality-engine/phi",
        "chiral/dbar-preserved",
        "induced/psi",
        "composition/inverse",
        "linear/taylor-termination",
    ];
    let checks = select(&report, &["reality/", "reality-engine/", "chiral/dbar-preserved", "induced/", "composition/inverse", "linear/taylor-termination"]);
    let (passed, detail) = all_match(&checks, &required);
    Outcome { number: 6, title: "closure", passed, detail }
}

fn generator(k: u64) -> OddGenerator {
    let kinds = [GenKind::Theta, GenKind::ThetaBar, GenKind::Zeta, GenKind::ZetaBar];
    OddGenerator::new(kinds[(k / 2 % 4) as usize], (k % 2) as u8)
}

fn random_components(seed: u64) -> Components {
    let mut r = rng(seed);
    let shape = Shape { kinds: &[GenKind::Zeta, GenKind::ZetaBar], ..Shape::default() };
    let mut even = || random_homogeneous(&mut r, &shape, false);
    let (phi, m, n, d) = (even(), even(), even(), even());
    let a = std::array::from_fn(|_| even());
    let mut odd = || random_homogeneous(&mut r, &shape, true);
    let mut sp = |ch| Spinor::new(ch, Position::Lower, [odd(), odd()]);
    let (psi, chi_bar, kappa, lambda_bar) =
        (sp(Chirality::Undotted), sp(Chirality::Dotted), sp(Chirality::Undotted), sp(Chirality::Dotted));
    Components { phi, psi, chi_bar, a, m, n, kappa, lambda_bar, d }
}

/// Runs `CASES` seeded cases and returns the failing seeds.
fn cases(property: u64, check: impl Fn(u64) -> bool) -> Vec<u64> {
    (0..CASES).map(|i| property * 1_000_003 + i).filter(|&s| !check(s)).collect()
}

fn properties() -> Outcome {
    let shape = Shape::default();
    let homogeneous = |s: u64, odd: bool| random_homogeneous(&mut rng(s), &shape, odd);
    let expr = |s: u64| random_expression(&mut rng(s), &shape);
    let map = ConjugationMap::standard();
    let results: [(&str, Vec<u64>); 5] = [
        ("graded commutativity", cases(1, |s| {
            let (oa, ob) = (s % 2 == 0, s % 3 == 0);
            let (a, b) = (homogeneous(s, oa), homogeneous(!s, ob));
            a.mul(&b) == b.mul(&a).scale(&Scalar::sign(oa && ob))
        })),
        ("associativity", cases(2, |s| {
            let (a, b, c) = (expr(s), expr(s ^ 0xa5a5), expr(s ^ 0x5a5a_0000));
            a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
        })),
        ("anti-Leibniz", cases(3, |s| {
            let oa = s % 2 == 1;
            let (a, b, g) = (homogeneous(s, oa), expr(!s), generator(s % 8));
            let lhs = grassmann_derive(&a.mul(&b), g);
            lhs == grassmann_derive(&a, g).mul(&b) + a.mul(&grassmann_derive(&b, g)).scale(&Scalar::sign(oa))
        })),
        ("conjugation involution", cases(4, |s| {
            let e = expr(s);
            conjugate(&conjugate(&e, &map).unwrap(), &map).unwrap() == e
        })),
        ("extraction round trip", cases(5, |s| {
            let c = random_components(s);
            extract_components(&reassemble(&c)).map(Expression::clone) == c.map(Expression::clone)
        })),
    ];
    let failing: Vec<String> =
        results.iter().filter(|(_, f)| !f.is_empty()).map(|(n, f)| format!("{n}: {} failures", f.len())).collect();
    let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
    let mut detail = format!("{} properties x {CASES} cases ({})", results.len(), names.join(", "));
    if !failing.is_empty() {
        detail.push_str(&format!("; {}", failing.join("; ")));
    }
    Outcome { number: 7, title: "randomized properties", passed: failing.is_empty(), detail }
}

#[test]
fn acceptance() {
    let outcomes = [
        linear_theorem(),
        chiral_theorem(),
        worked_expansions(),
        algebra(),
        identities(),
        closure(),
        properties(),
    ];
    let mut out = std::io::stdout().lock();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {}: {status} {} ({})", o.number, o.title, o.detail).expect("stdout");
    }
    drop(out);
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.number).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
