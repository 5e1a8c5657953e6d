use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use supershift::grassmann::{Expression, Symbol};
use supershift::latex::emit_latex;
use supershift::laws::{derive_chiral, derive_linear, run_suites, Status, Suite, SuiteOptions, VerificationReport};
use supershift::spinor::{Eps4, Spinor};
use supershift::superspace::fields::{scalar, spinor};
use supershift::superspace::{
    build_chiral_superfield, build_general_superfield, shift_coordinates, supertranslate, ChiralComponent,
    Component, TranslationParams,
};

#[derive(Parser, Debug)]
#[command(name = "supershift", version, about = "Exact N=1 superspace supertranslations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Sign of ε_{0123} for the identity suites (+1 or -1); both when omitted.
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_eps4)]
    eps4: Option<Eps4>,
    /// Seed for the random probe superfields.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Restrict to one component (verify) or name the component (derive).
    #[arg(long, global = true)]
    component: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
    },
    /// Print the engine-derived transformation law of a component.
    Derive {
        #[arg(value_parser = parse_law)]
        law: Option<Law>,
    },
    /// Print a superfield, or its image under a supertranslation.
    Expand {
        #[arg(value_enum)]
        superfield: Field,
        /// Apply the supertranslation; for `phi` and `theta-psi` only the
        /// spacetime argument is shifted.
        #[arg(long)]
        shifted: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Field {
    General,
    Chiral,
    Phi,
    ThetaPsi,
}

#[derive(Clone, Debug)]
enum Target {
    All,
    One(Suite),
}

#[derive(Clone, Copy, Debug)]
enum Law {
    Linear(Component),
    Chiral(ChiralComponent),
}

impl Law {
    fn all() -> Vec<Law> {
        Component::ALL.map(Law::Linear).into_iter().chain(ChiralComponent::ALL.map(Law::Chiral)).collect()
    }

    fn name(self) -> String {
        match self {
            Law::Linear(c) => format!("{}-prime", c.name().to_lowercase()),
            Law::Chiral(c) => format!("chiral-{}-prime", c.name().to_lowercase()),
        }
    }
}

fn parse_eps4(s: &str) -> Result<Eps4, String> {
    match s {
        "+1" | "1" => Ok(Eps4::Plus),
        "-1" => Ok(Eps4::Minus),
        _ => Err(format!("expected +1 or -1, got `{s}`")),
    }
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    s.parse().map(Target::One).map_err(|e: String| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("{e}; expected `all` or one of {}", names.join(", "))
    })
}

fn parse_law(s: &str) -> Result<Law, String> {
    Law::all().into_iter().find(|l| l.name() == s).ok_or_else(|| {
        let names: Vec<String> = Law::all().into_iter().map(Law::name).collect();
        format!("unknown component `{s}`; expected one of {}", names.join(", "))
    })
}

/// Component names accepted by `verify --component`.
fn component_names() -> Vec<String> {
    Component::ALL.iter().map(|c| c.name().to_string()).chain(ChiralComponent::ALL.iter().map(|c| c.name().to_string())).collect()
}

fn usage_error(msg: &str) -> ExitCode {
    let _ = writeln!(io::stderr(), "error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify { target } => verify(&cli, target),
        Command::Derive { law } => {
            let law = match (law, &cli.component) {
                (Some(l), None) => *l,
                (None, Some(name)) => match parse_law(name) {
                    Ok(l) => l,
                    Err(e) => return usage_error(&e),
                },
                (Some(_), Some(_)) => return usage_error("give the component either positionally or via --component"),
                (None, None) => return usage_error("derive needs a component, e.g. `derive phi-prime`"),
            };
            derive(&cli, law)
        }
        Command::Expand { superfield, shifted } => expand(&cli, *superfield, *shifted),
    }
}

fn verify(cli: &Cli, target: &Target) -> ExitCode {
    if let Some(c) = &cli.component {
        if !component_names().contains(c) {
            return usage_error(&format!("unknown component `{c}`; expected one of {}", component_names().join(", ")));
        }
    }
    let suites = match target {
        Target::All => Suite::ALL.to_vec(),
        Target::One(s) => vec![*s],
    };
    let opts = SuiteOptions {
        eps4: cli.eps4.map_or_else(|| Eps4::BOTH.to_vec(), |e| vec![e]),
        seed: cli.seed,
        ..SuiteOptions::default()
    };
    let mut report = run_suites(&suites, &opts);
    if let Some(c) = &cli.component {
        report.checks.retain(|r| r.check_name.split('/').any(|seg| seg == c));
    }
    let out = match cli.format {
        Format::Json => render_json(&report),
        Format::Text => render_text(&report),
        Format::Latex => render_latex_report(&report),
    };
    print!("{out}");
    ExitCode::from(report.exit_code())
}

/// Matches among the twelve component-law checks.
fn law_matches(report: &VerificationReport) -> (usize, usize) {
    let laws: Vec<_> = report
        .checks
        .iter()
        .filter(|c| {
            let mut parts = c.check_name.split('/');
            matches!(parts.next(), Some("linear" | "chiral"))
                && parts.next().is_some_and(|n| component_names().iter().any(|x| x == n))
                && parts.next().is_none()
        })
        .collect();
    (laws.iter().filter(|c| c.passed()).count(), laws.len())
}

fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = match c.status {
            Status::Match => "match",
            Status::Residual => "RESIDUAL",
        };
        out.push_str(&format!("{status:<8} {}", c.check_name));
        if let Some(n) = c.evaluated {
            out.push_str(&format!(" [{n}]"));
        }
        out.push('\n');
        if let Some(r) = &c.residual {
            out.push_str(&format!("         residual: {r}\n"));
        }
        for v in &c.violations {
            out.push_str(&format!("         {} {:?}: {} != {}\n", v.identity_name, v.index_tuple, v.lhs, v.rhs));
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    let (laws_ok, laws) = law_matches(report);
    if laws > 0 {
        out.push_str(&format!("law matches: {laws_ok}/{laws}\n"));
    }
    out.push_str(&format!("checks: {passed}/{} match\n", report.checks.len()));
    out
}

fn render_json(report: &VerificationReport) -> String {
    let (laws_ok, laws) = law_matches(report);
    let value = json!({
        "passed": report.passed(),
        "law_matches": { "matched": laws_ok, "total": laws },
        "checks": report.checks,
    });
    serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
}

fn render_latex_report(report: &VerificationReport) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    for c in &report.checks {
        let status = if c.passed() { "match" } else { "residual" };
        out.push_str(&format!("\\texttt{{{}}} & {status} \\\\\n", c.check_name.replace('_', "\\_")));
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Labelled entries of a derived law.
fn law_entries(law: Law) -> Vec<(String, Expression)> {
    match law {
        Law::Linear(c) => {
            let derived = derive_linear();
            c.entry_labels().into_iter().map(|l| format!("{l}'")).zip(derived.get(c)).collect()
        }
        Law::Chiral(c) => {
            let (derived, _) = derive_chiral();
            let entries = derived.get(c);
            let labels: Vec<String> = if entries.len() == 1 {
                vec![format!("{}'", c.name())]
            } else {
                (1..=entries.len()).map(|i| format!("{}'_{i}", c.name())).collect()
            };
            labels.into_iter().zip(entries).collect()
        }
    }
}

fn render_entries(format: Format, title: &str, entries: &[(String, Expression)]) -> String {
    match format {
        Format::Text => entries.iter().map(|(l, e)| format!("{l} = {e}\n")).collect(),
        Format::Latex => entries.iter().map(|(l, e)| format!("{} = {}\n", latex_label(l), emit_latex(e))).collect(),
        Format::Json => {
            let items: Vec<_> = entries.iter().map(|(l, e)| json!({ "label": l, "expression": e.to_string() })).collect();
            serde_json::to_string_pretty(&json!({ "name": title, "entries": items })).expect("serializes") + "\n"
        }
    }
}

fn latex_label(label: &str) -> String {
    let (base, rest) = label.split_once('_').map_or((label, None), |(b, r)| (b, Some(r)));
    let prime = base.ends_with('\'') || rest.is_some_and(|r| r.ends_with('\''));
    let base = base.trim_end_matches('\'');
    let sym = match base {
        "phi" => r"\phi",
        "psi" => r"\psi",
        "chib" => r"\overline{\chi}",
        "kappa" => r"\kappa",
        "lambdab" => r"\overline{\lambda}",
        other => other,
    };
    let mut out = sym.to_string();
    if prime {
        out.push('\'');
    }
    if let Some(r) = rest {
        out.push_str(&format!("_{{{}}}", r.trim_end_matches('\'')));
    }
    out
}

fn derive(cli: &Cli, law: Law) -> ExitCode {
    print!("{}", render_entries(cli.format, &law.name(), &law_entries(law)));
    ExitCode::SUCCESS
}

fn expand(cli: &Cli, field: Field, shifted: bool) -> ExitCode {
    let params = TranslationParams::standard();
    let (name, expr) = match field {
        Field::General => ("general", build_general_superfield().expr),
        Field::Chiral => ("chiral", build_chiral_superfield().expr),
        Field::Phi => ("phi", scalar(Symbol::Phi, &[])),
        Field::ThetaPsi => ("theta-psi", Spinor::theta().dot(&spinor(Symbol::Psi, &[]))),
    };
    let expr = match (shifted, field) {
        (false, _) => expr,
        (true, Field::General | Field::Chiral) => {
            supertranslate(&supershift::superspace::Superfield::custom(expr), &params).expect("terminating shift")
        }
        (true, _) => shift_coordinates(&expr, &params).expect("terminating shift"),
    };
    let label = if shifted { format!("{name}'") } else { name.to_string() };
    print!("{}", render_entries(cli.format, name, &[(label, expr)]));
    ExitCode::SUCCESS
}
