use proptest::prelude::*;

use supershift::grassmann::{
    conjugate, grassmann_derive, spacetime_derive, ConjugationMap, Expression, GenKind, OddGenerator,
};
use supershift::latex::emit_latex;
use supershift::random::{random_expression, random_homogeneous, random_scalar, rng, Shape};
use supershift::scalar::Scalar;
use supershift::spinor::{Chirality, Position, Spinor};
use supershift::superspace::{extract_components, reassemble, translate_expr, Components, TranslationParams};

const CASES: u32 = 1000;

fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() }
}

fn expr(seed: u64) -> Expression {
    random_expression(&mut rng(seed), &Shape::default())
}

fn homogeneous(seed: u64, odd: bool) -> Expression {
    random_homogeneous(&mut rng(seed), &Shape::default(), odd)
}

fn sign(odd_a: bool, odd_b: bool) -> Scalar {
    Scalar::sign(odd_a && odd_b)
}

fn generator(k: u8) -> OddGenerator {
    let kinds = [GenKind::Theta, GenKind::ThetaBar, GenKind::Zeta, GenKind::ZetaBar];
    OddGenerator::new(kinds[(k / 2 % 4) as usize], k % 2)
}

/// Random component fields free of θ, with the right parity per component.
fn components(seed: u64) -> Components {
    let mut r = rng(seed);
    let shape = Shape { kinds: &[GenKind::Zeta, GenKind::ZetaBar], ..Shape::default() };
    let mut even = || random_homogeneous(&mut r, &shape, false);
    let (phi, m, n, d) = (even(), even(), even(), even());
    let a = std::array::from_fn(|_| even());
    let mut odd = || random_homogeneous(&mut r, &shape, true);
    let mut sp = |ch| Spinor::new(ch, Position::Lower, [odd(), odd()]);
    let psi = sp(Chirality::Undotted);
    let chi_bar = sp(Chirality::Dotted);
    let kappa = sp(Chirality::Undotted);
    let lambda_bar = sp(Chirality::Dotted);
    Components { phi, psi, chi_bar, a, m, n, kappa, lambda_bar, d }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn graded_commutativity(s1: u64, s2: u64, oa: bool, ob: bool) {
        let a = homogeneous(s1, oa);
        let b = homogeneous(s2, ob);
        prop_assert_eq!(a.mul(&b), b.mul(&a).scale(&sign(oa, ob)));
    }

    #[test]
    fn associativity(s1: u64, s2: u64, s3: u64) {
        let (a, b, c) = (expr(s1), expr(s2), expr(s3));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributivity(s1: u64, s2: u64, s3: u64) {
        let (a, b, c) = (expr(s1), expr(s2), expr(s3));
        prop_assert_eq!(a.mul(&(&b + &c)), a.mul(&b) + a.mul(&c));
    }

    #[test]
    fn derivative_anti_leibniz(s1: u64, s2: u64, oa: bool, k in 0u8..8) {
        let a = homogeneous(s1, oa);
        let b = expr(s2);
        let g = generator(k);
        let lhs = grassmann_derive(&a.mul(&b), g);
        let rhs = grassmann_derive(&a, g).mul(&b) + a.mul(&grassmann_derive(&b, g)).scale(&Scalar::sign(oa));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivatives_anticommute(s: u64, k1 in 0u8..8, k2 in 0u8..8) {
        let e = expr(s);
        let (g, h) = (generator(k1), generator(k2));
        let gh = grassmann_derive(&grassmann_derive(&e, h), g);
        let hg = grassmann_derive(&grassmann_derive(&e, g), h);
        prop_assert_eq!(&gh, &-hg);
        if g == h {
            prop_assert!(gh.is_zero());
        }
    }

    #[test]
    fn spacetime_leibniz(s1: u64, s2: u64, mu in 0u8..4) {
        let (a, b) = (expr(s1), expr(s2));
        let lhs = spacetime_derive(&a.mul(&b), mu);
        prop_assert_eq!(lhs, spacetime_derive(&a, mu).mul(&b) + a.mul(&spacetime_derive(&b, mu)));
    }

    #[test]
    fn odd_elements_are_nilpotent(s: u64) {
        let a = homogeneous(s, true);
        prop_assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn conjugation_is_an_involution(s: u64) {
        let e = expr(s);
        for map in [ConjugationMap::standard(), ConjugationMap::vector_multiplet()] {
            let twice = conjugate(&conjugate(&e, &map).unwrap(), &map).unwrap();
            prop_assert_eq!(&twice, &e);
        }
    }

    #[test]
    fn conjugation_reverses_products(s1: u64, s2: u64) {
        let (a, b) = (expr(s1), expr(s2));
        let map = ConjugationMap::standard();
        let c = |e: &Expression| conjugate(e, &map).unwrap();
        prop_assert_eq!(c(&a.mul(&b)), c(&b).mul(&c(&a)));
    }

    #[test]
    fn conjugation_is_antilinear(s: u64, k: u64) {
        let e = expr(s);
        let z = random_scalar(&mut rng(k));
        let map = ConjugationMap::standard();
        prop_assert_eq!(conjugate(&e.scale(&z), &map).unwrap(), conjugate(&e, &map).unwrap().scale(&z.conj()));
    }

    #[test]
    fn extraction_round_trip(s: u64) {
        let c = components(s);
        let back = extract_components(&reassemble(&c));
        prop_assert_eq!(back.map(Expression::clone), c.map(Expression::clone));
    }

    #[test]
    fn supertranslation_is_multiplicative(s1: u64, s2: u64) {
        let shape = Shape { max_terms: 2, ..Shape::superfield() };
        let a = random_expression(&mut rng(s1), &shape);
        let b = random_expression(&mut rng(s2), &shape);
        let p = TranslationParams::standard();
        let t = |e: &Expression| translate_expr(e, &p).unwrap();
        prop_assert_eq!(t(&a.mul(&b)), t(&a).mul(&t(&b)));
    }

    #[test]
    fn latex_is_deterministic(s: u64) {
        let e = expr(s);
        prop_assert_eq!(emit_latex(&e), emit_latex(&e.clone()));
    }

    #[test]
    fn scalar_field_axioms(k1: u64, k2: u64, k3: u64) {
        let (a, b, c) = (random_scalar(&mut rng(k1)), random_scalar(&mut rng(k2)), random_scalar(&mut rng(k3)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        prop_assert_eq!(a.conj().conj(), a);
    }
}
