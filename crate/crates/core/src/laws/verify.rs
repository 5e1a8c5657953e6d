use std::time::Instant;

use crate::grassmann::{conjugate, truncate_degree, ConjugationMap, Expression, OddGenerator, Symbol};
use crate::scalar::Scalar;
use crate::spinor::{up, Chirality, Position, Spinor};
use crate::superspace::fields::{dalembertian, derive, scalar, spinor};
use crate::superspace::{
    apply_operator, apply_operator_in, build_chiral_superfield, build_general_superfield, extract_components,
    shift_coordinates, shift_spacetime, supertranslate, taylor_term, translate_expr, ChiralComponent,
    ChiralComponents, Component, Components, Coordinates, SuperOperator, Superfield, TranslationParams,
};

use super::expansions::{shifted_scalar, shifted_theta_psi};
use super::report::VerificationReport;
use super::tabulated::{tabulated_chiral_all, tabulated_linear_all};

/// Engine-derived components of the supertranslated general superfield.
pub fn derive_linear() -> Components {
    let v = build_general_superfield();
    extract_components(&supertranslate(&v, &TranslationParams::standard()).expect("terminating shift"))
}

/// Engine-derived (φ′, ψ′, F′) of the supertranslated chiral superfield,
/// together with the full set of nine components it carries.
pub fn derive_chiral() -> (ChiralComponents, Components) {
    let v = build_chiral_superfield();
    let all = extract_components(&supertranslate(&v, &TranslationParams::standard()).expect("terminating shift"));
    (ChiralComponents { phi: all.phi.clone(), psi: all.psi.clone(), f: all.m.clone() }, all)
}

fn labelled(c: Component, lhs: &Components, rhs: &Components) -> Vec<(String, Expression, Expression)> {
    c.entry_labels().into_iter().zip(lhs.get(c)).zip(rhs.get(c)).map(|((l, a), b)| (l, a, b)).collect()
}

fn labelled_chiral(
    c: ChiralComponent,
    lhs: &ChiralComponents,
    rhs: &ChiralComponents,
) -> Vec<(String, Expression, Expression)> {
    let n = lhs.get(c).len();
    let labels: Vec<String> =
        if n == 1 { vec![c.name().to_string()] } else { (1..=n).map(|i| format!("{}_{i}", c.name())).collect() };
    labels.into_iter().zip(lhs.get(c)).zip(rhs.get(c)).map(|((l, a), b)| (l, a, b)).collect()
}

fn zeta_generator(g: &OddGenerator) -> bool {
    g.is_zeta()
}

/// i(ζ^α Q_α + Q̄_α̇ ζ̄^α̇) V.
fn infinitesimal_action(v: &Expression) -> Expression {
    let z = Spinor::zeta();
    let zb = Spinor::zeta_bar();
    let mut out = Expression::zero();
    for a in 0..2u8 {
        out.add_assign_ref(&z.comps[a as usize].mul(&apply_operator(SuperOperator::Q(a), v)));
        out.add_assign_ref(&apply_operator(SuperOperator::QBar(a), &zb.comps[a as usize].mul(v)));
    }
    out.scale(&Scalar::i())
}

pub fn verify_linear_multiplet() -> VerificationReport {
    let mut report = VerificationReport::default();
    let started = Instant::now();
    let engine = derive_linear();
    let table = tabulated_linear_all(&Components::atoms());
    for c in Component::ALL {
        report.push_entries(format!("linear/{}", c.name()), started, &labelled(c, &engine, &table));
    }

    let started = Instant::now();
    let v = build_general_superfield();
    let full = supertranslate(&v, &TranslationParams::standard()).expect("terminating shift");
    let first = truncate_degree(&full, zeta_generator, 1) - truncate_degree(&full, zeta_generator, 0);
    report.push_eq("linear/first-order", started, &first, &infinitesimal_action(&v.expr));

    let started = Instant::now();
    let params = TranslationParams::standard();
    let fourth = taylor_term(&params, 4);
    let fifth = taylor_term(&params, 5);
    report.push_fact("linear/taylor-termination", started, !fourth.is_empty() && fifth.is_empty(), || {
        format!("fourth-order terms: {}, fifth-order terms: {}", fourth.len(), fifth.len())
    });

    let started = Instant::now();
    let phi = scalar(Symbol::Phi, &[]);
    let engine = shift_coordinates(&phi, &params).expect("terminating shift");
    report.push_eq("expansion/phi", started, &engine, &shifted_scalar());

    let started = Instant::now();
    let theta_psi = Spinor::theta().dot(&spinor(Symbol::Psi, &[]));
    let engine = shift_coordinates(&theta_psi, &params).expect("terminating shift");
    report.push_eq("expansion/theta-psi", started, &engine, &shifted_theta_psi());
    report
}

/// The component map that embeds a chiral multiplet into a general one.
pub fn chiral_substitution(c: &ChiralComponents) -> Components {
    let i = Scalar::i();
    let lambda_bar = Spinor::sum_over(Chirality::Dotted, Position::Lower, |mu| {
        c.psi.derive(mu).times_sigma(up(mu)).scale(&Scalar::imag(-1, 2))
    });
    Components {
        phi: c.phi.clone(),
        psi: c.psi.clone(),
        chi_bar: Spinor::zero(Chirality::Dotted, Position::Lower),
        a: std::array::from_fn(|mu| derive(&c.phi, &[mu as u8]).scale(&i)),
        m: c.f.clone(),
        n: Expression::zero(),
        kappa: Spinor::zero(Chirality::Undotted, Position::Lower),
        lambda_bar,
        d: dalembertian(&c.phi).scale(&Scalar::frac(1, 4)),
    }
}

/// Pushes one check per auxiliary component of `all`, comparing it with
/// what the chiral embedding of its own (φ, ψ, M) predicts.
fn push_chiral_constraints(report: &mut VerificationReport, prefix: &str, started: Instant, all: &Components) {
    let own = ChiralComponents { phi: all.phi.clone(), psi: all.psi.clone(), f: all.m.clone() };
    let predicted = chiral_substitution(&own);
    for c in [Component::ChiBar, Component::A, Component::N, Component::Kappa, Component::LambdaBar, Component::D] {
        report.push_entries(format!("{prefix}/constraint/{}", c.name()), started, &labelled(c, all, &predicted));
    }
}

pub fn verify_chiral_multiplet() -> VerificationReport {
    let mut report = VerificationReport::default();
    let started = Instant::now();
    let (engine, all) = derive_chiral();
    let table = tabulated_chiral_all(&ChiralComponents::atoms());
    for c in ChiralComponent::ALL {
        report.push_entries(format!("chiral/{}", c.name()), started, &labelled_chiral(c, &engine, &table));
    }
    push_chiral_constraints(&mut report, "chiral", started, &all);

    let started = Instant::now();
    let routed = tabulated_linear_all(&chiral_substitution(&ChiralComponents::atoms()));
    let routed_chiral = ChiralComponents { phi: routed.phi.clone(), psi: routed.psi.clone(), f: routed.m.clone() };
    for c in ChiralComponent::ALL {
        report.push_entries(
            format!("chiral-substitution/{}", c.name()),
            started,
            &labelled_chiral(c, &routed_chiral, &table),
        );
    }
    push_chiral_constraints(&mut report, "chiral-substitution", started, &routed);

    let started = Instant::now();
    let v = build_chiral_superfield();
    let shifted = supertranslate(&v, &TranslationParams::standard()).expect("terminating shift");
    let entries: Vec<_> = (0..2u8)
        .map(|ad| {
            (format!("Db_{}", ad + 1), apply_operator(SuperOperator::DBar(ad), &shifted), Expression::zero())
        })
        .collect();
    report.push_entries("chiral/dbar-preserved", started, &entries);
    report
}

fn conjugated(e: &Expression) -> Expression {
    conjugate(e, &ConjugationMap::vector_multiplet()).expect("vector multiplet map covers every component")
}

/// Checks that `primed` satisfies the vector-multiplet reality conditions.
fn push_reality(report: &mut VerificationReport, prefix: &str, started: Instant, primed: &Components) {
    let pairs = [
        (Component::Phi, Component::Phi),
        (Component::Psi, Component::ChiBar),
        (Component::A, Component::A),
        (Component::M, Component::N),
        (Component::Kappa, Component::LambdaBar),
        (Component::D, Component::D),
    ];
    for (from, to) in pairs {
        let lhs: Vec<Expression> = primed.get(from).iter().map(conjugated).collect();
        let entries: Vec<_> = to
            .entry_labels()
            .into_iter()
            .zip(lhs)
            .zip(primed.get(to))
            .map(|((l, a), b)| (format!("conj({}) vs {l}", from.name()), a, b))
            .collect();
        report.push_entries(format!("{prefix}/{}", from.name()), started, &entries);
    }
}

pub fn verify_reality_closure() -> VerificationReport {
    let mut report = VerificationReport::default();
    let started = Instant::now();
    let table = tabulated_linear_all(&Components::atoms());
    push_reality(&mut report, "reality", started, &table);
    let started = Instant::now();
    push_reality(&mut report, "reality-engine", started, &derive_linear());
    report
}

pub fn verify_induced_superfield() -> VerificationReport {
    let mut report = VerificationReport::default();
    let started = Instant::now();
    let primed = derive_linear();
    let psi = primed.psi.lower();
    let entries: Vec<_> = (0..2u8)
        .map(|a| {
            let rhs = apply_operator_in(SuperOperator::D(a), Coordinates::Zeta, &primed.phi).scale(&Scalar::i());
            (format!("psi_{}", a + 1), psi.comps[a as usize].clone(), rhs)
        })
        .collect();
    report.push_entries("induced/psi", started, &entries);

    let started = Instant::now();
    let chi_bar = primed.chi_bar.lower();
    let entries: Vec<_> = (0..2u8)
        .map(|ad| {
            let rhs = apply_operator_in(SuperOperator::DBar(ad), Coordinates::Zeta, &primed.phi)
                .scale(&Scalar::imag(-1, 1))
                .grade_involution();
            (format!("chib_{}", ad + 1), chi_bar.comps[ad as usize].clone(), rhs)
        })
        .collect();
    report.push_entries("induced/chib", started, &entries);
    report
}

/// R^μ = ζ₁σ^μζ̄₂ − ζ₂σ^μζ̄₁, the vector by which the composition of two
/// supertranslations differs from the single one with summed parameters.
pub fn composition_vector(z1: &TranslationParams, z2: &TranslationParams) -> [Expression; 4] {
    let (a, ab) = (z1.zeta_spinor(), z1.zeta_bar_spinor());
    let (b, bb) = (z2.zeta_spinor(), z2.zeta_bar_spinor());
    std::array::from_fn(|mu| a.sigma_dot(up(mu as u8), &bb) - b.sigma_dot(up(mu as u8), &ab))
}

/// T(z₂)T(z₁)φ − T(z₁ + z₂)φ for the bare scalar superfield φ(x).
pub fn composition_probe(z1: &TranslationParams, z2: &TranslationParams) -> Expression {
    let phi = Superfield::custom(scalar(Symbol::Phi, &[]));
    let once = supertranslate(&phi, z1).expect("terminating shift");
    let twice = translate_expr(&once, z2).expect("terminating shift");
    twice - translate_expr(&phi.expr, &z1.sum(z2)).expect("terminating shift")
}

pub fn verify_composition() -> VerificationReport {
    let mut report = VerificationReport::default();
    let z1 = TranslationParams::standard();
    let z2 = TranslationParams::auxiliary("xi");

    let started = Instant::now();
    report.push_zero("composition/identity", started, &composition_probe(&z1, &TranslationParams::zero()));

    let started = Instant::now();
    let v = build_general_superfield();
    let forth = supertranslate(&v, &z1).expect("terminating shift");
    let back = translate_expr(&forth, &z1.negated()).expect("terminating shift");
    report.push_eq("composition/inverse", started, &back, &v.expr);

    let started = Instant::now();
    let phi = scalar(Symbol::Phi, &[]);
    let forth = translate_expr(&phi, &z1).expect("terminating shift");
    let back = translate_expr(&forth, &z1.negated()).expect("terminating shift");
    report.push_eq("composition/inverse-scalar", started, &back, &phi);

    let started = Instant::now();
    let residual = composition_probe(&z1, &z2);
    let only_phi = residual.atoms().iter().all(|a| a.symbol == Symbol::Phi);
    report.push_fact("composition/scalar-atoms-only", started, only_phi, || {
        format!("atoms: {:?}", residual.atoms().iter().map(|a| a.to_string()).collect::<Vec<_>>())
    });

    let started = Instant::now();
    let r = composition_vector(&z1, &z2);
    let minus_i = Scalar::imag(-1, 1);
    let block = residual.retain(|k| k.fields.even().iter().all(|a| a.derivs().len() == 1));
    let expected: Expression =
        (0..4u8).map(|mu| r[mu as usize].mul(&scalar(Symbol::Phi, &[mu])).scale(&minus_i)).sum();
    report.push_eq("composition/first-derivative-block", started, &block, &expected);

    let started = Instant::now();
    let single = translate_expr(&phi, &z1.sum(&z2)).expect("terminating shift");
    let b: [Expression; 4] = std::array::from_fn(|mu| r[mu].scale(&minus_i));
    let closed = shift_spacetime(&single, &b).expect("nilpotent shift") - single;
    report.push_eq("composition/closed-form", started, &residual, &closed);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_fields_give_zero_laws() {
        let zero = Components::atoms().map(|_| Expression::zero());
        let out = tabulated_linear_all(&zero);
        for c in Component::ALL {
            assert!(out.get(c).iter().all(Expression::is_zero));
        }
    }

    #[test]
    fn zero_parameters_leave_chiral_components() {
        let v = build_chiral_superfield();
        let out = extract_components(&supertranslate(&v, &TranslationParams::zero()).unwrap());
        assert_eq!(out.phi, scalar(Symbol::Phi, &[]));
        assert_eq!(out.m, scalar(Symbol::F, &[]));
        assert_eq!(out.psi.lower(), spinor(Symbol::Psi, &[]).lower());
    }

    #[test]
    fn composition_residual_has_higher_derivatives() {
        let residual = composition_probe(&TranslationParams::standard(), &TranslationParams::auxiliary("xi"));
        assert!(!residual.is_zero());
        assert!(residual.atoms().iter().any(|a| a.derivs().len() >= 2));
    }
}
