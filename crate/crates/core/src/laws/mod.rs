//! Tabulated component transformation laws and the verification suites that
//! compare them with the supertranslation engine.

pub mod algebra;
pub mod appendix;
pub mod expansions;
mod report;
pub mod tabulated;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::spinor::{
    dual_field_strength_identity_check_with, verify_lorentz_identities, verify_pauli_identities, Eps4,
    LorentzGenerators, PauliTables,
};

pub use report::{CheckResult, Status, VerificationReport};
pub use verify::{
    chiral_substitution, composition_probe, composition_vector, derive_chiral, derive_linear,
    verify_chiral_multiplet, verify_composition, verify_induced_superfield, verify_linear_multiplet,
    verify_reality_closure,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Pauli,
    Lorentz,
    Algebra,
    Appendix2,
    Linear,
    Chiral,
    Reality,
    Induced,
    Composition,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Pauli,
        Suite::Lorentz,
        Suite::Algebra,
        Suite::Appendix2,
        Suite::Linear,
        Suite::Chiral,
        Suite::Reality,
        Suite::Induced,
        Suite::Composition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pauli => "pauli",
            Suite::Lorentz => "lorentz",
            Suite::Algebra => "algebra",
            Suite::Appendix2 => "appendix2",
            Suite::Linear => "linear",
            Suite::Chiral => "chiral",
            Suite::Reality => "reality",
            Suite::Induced => "induced",
            Suite::Composition => "composition",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Settings shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Sign conventions for ε_{0123} under which the identity suites run.
    pub eps4: Vec<Eps4>,
    pub seed: u64,
    /// Number of random probe superfields for the algebra suite.
    pub random_probes: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { eps4: Eps4::BOTH.to_vec(), seed: 0, random_probes: 4 }
    }
}

fn eps_label(e: Eps4) -> &'static str {
    match e {
        Eps4::Plus => "eps+1",
        Eps4::Minus => "eps-1",
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    match suite {
        Suite::Pauli => {
            for &e in &opts.eps4 {
                let started = Instant::now();
                let r = verify_pauli_identities(&PauliTables::new(e));
                report.push_identities(&format!("pauli/{}", eps_label(e)), started, &r);
            }
        }
        Suite::Lorentz => {
            for &e in &opts.eps4 {
                let started = Instant::now();
                let r = verify_lorentz_identities(&LorentzGenerators::from_tables(&PauliTables::new(e)));
                report.push_identities(&format!("lorentz/{}", eps_label(e)), started, &r);
                let started = Instant::now();
                let r = dual_field_strength_identity_check_with(e);
                report.push_identities(&format!("lorentz/{}", eps_label(e)), started, &r);
            }
        }
        Suite::Algebra => report = algebra::verify_algebra(opts.seed, opts.random_probes),
        Suite::Appendix2 => {
            let started = Instant::now();
            report.push_identities("appendix2", started, &appendix::appendix_identities());
        }
        Suite::Linear => report = verify_linear_multiplet(),
        Suite::Chiral => report = verify_chiral_multiplet(),
        Suite::Reality => report = verify_reality_closure(),
        Suite::Induced => report = verify_induced_superfield(),
        Suite::Composition => report = verify_composition(),
    }
    report.sort();
    report
}

/// Runs the given suites and merges their reports, sorted by check name.
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    for &s in suites {
        report.extend(run_suite(s, opts));
    }
    report.sort();
    report
}
