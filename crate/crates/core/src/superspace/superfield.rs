use std::collections::BTreeMap;
use std::fmt;

use crate::grassmann::{Expression, GrassmannMonomial, OddGenerator, Symbol};
use crate::scalar::Scalar;
use crate::spinor::{up, Chirality, PauliTables, Spinor};

use super::fields::{dalembertian, scalar, spinor, vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperfieldKind {
    GeneralLinear,
    Chiral,
    Custom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Superfield {
    pub expr: Expression,
    pub kind: SuperfieldKind,
}

impl Superfield {
    pub fn custom(expr: Expression) -> Self {
        Superfield { expr, kind: SuperfieldKind::Custom }
    }
}

/// The nine components of a general superfield.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Phi,
    Psi,
    ChiBar,
    A,
    M,
    N,
    Kappa,
    LambdaBar,
    D,
}

impl Component {
    pub const ALL: [Component; 9] = [
        Component::Phi,
        Component::Psi,
        Component::ChiBar,
        Component::A,
        Component::M,
        Component::N,
        Component::Kappa,
        Component::LambdaBar,
        Component::D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::Phi => "phi",
            Component::Psi => "psi",
            Component::ChiBar => "chib",
            Component::A => "A",
            Component::M => "M",
            Component::N => "N",
            Component::Kappa => "kappa",
            Component::LambdaBar => "lambdab",
            Component::D => "D",
        }
    }

    /// Labels of the individual entries, e.g. `psi_1`, `A_0`.
    pub fn entry_labels(self) -> Vec<String> {
        match self {
            Component::Psi | Component::ChiBar | Component::Kappa | Component::LambdaBar => {
                (1..=2).map(|i| format!("{}_{i}", self.name())).collect()
            }
            Component::A => (0..4).map(|mu| format!("A_{mu}")).collect(),
            _ => vec![self.name().to_string()],
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Component expressions of a superfield, in the field's natural index
/// positions: ψ_α, χ̄_α̇, A_μ, κ_α, λ̄_α̇.
#[derive(Clone, Debug, PartialEq)]
pub struct Components {
    pub phi: Expression,
    pub psi: Spinor,
    pub chi_bar: Spinor,
    pub a: [Expression; 4],
    pub m: Expression,
    pub n: Expression,
    pub kappa: Spinor,
    pub lambda_bar: Spinor,
    pub d: Expression,
}

impl Components {
    /// Every component set to its own field atom.
    pub fn atoms() -> Self {
        Components {
            phi: scalar(Symbol::Phi, &[]),
            psi: spinor(Symbol::Psi, &[]),
            chi_bar: spinor(Symbol::ChiBar, &[]),
            a: std::array::from_fn(|mu| vector(Symbol::A, mu as u8, &[])),
            m: scalar(Symbol::M, &[]),
            n: scalar(Symbol::N, &[]),
            kappa: spinor(Symbol::Kappa, &[]),
            lambda_bar: spinor(Symbol::LambdaBar, &[]),
            d: scalar(Symbol::D, &[]),
        }
    }

    pub fn get(&self, c: Component) -> Vec<Expression> {
        match c {
            Component::Phi => vec![self.phi.clone()],
            Component::Psi => self.psi.lower().comps.to_vec(),
            Component::ChiBar => self.chi_bar.lower().comps.to_vec(),
            Component::A => self.a.to_vec(),
            Component::M => vec![self.m.clone()],
            Component::N => vec![self.n.clone()],
            Component::Kappa => self.kappa.lower().comps.to_vec(),
            Component::LambdaBar => self.lambda_bar.lower().comps.to_vec(),
            Component::D => vec![self.d.clone()],
        }
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Expression) -> Expression) -> Components {
        let sp = |s: &Spinor| {
            let l = s.lower();
            Spinor::new(l.chirality, l.position, std::array::from_fn(|i| f(&l.comps[i])))
        };
        Components {
            phi: f(&self.phi),
            psi: sp(&self.psi),
            chi_bar: sp(&self.chi_bar),
            a: std::array::from_fn(|mu| f(&self.a[mu])),
            m: f(&self.m),
            n: f(&self.n),
            kappa: sp(&self.kappa),
            lambda_bar: sp(&self.lambda_bar),
            d: f(&self.d),
        }
    }
}

/// The chiral components φ, ψ_α and F.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiralComponents {
    pub phi: Expression,
    pub psi: Spinor,
    pub f: Expression,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChiralComponent {
    Phi,
    Psi,
    F,
}

impl ChiralComponent {
    pub const ALL: [ChiralComponent; 3] = [ChiralComponent::Phi, ChiralComponent::Psi, ChiralComponent::F];

    pub fn name(self) -> &'static str {
        match self {
            ChiralComponent::Phi => "phi",
            ChiralComponent::Psi => "psi",
            ChiralComponent::F => "F",
        }
    }
}

impl ChiralComponents {
    pub fn atoms() -> Self {
        ChiralComponents { phi: scalar(Symbol::Phi, &[]), psi: spinor(Symbol::Psi, &[]), f: scalar(Symbol::F, &[]) }
    }

    pub fn get(&self, c: ChiralComponent) -> Vec<Expression> {
        match c {
            ChiralComponent::Phi => vec![self.phi.clone()],
            ChiralComponent::Psi => self.psi.lower().comps.to_vec(),
            ChiralComponent::F => vec![self.f.clone()],
        }
    }
}

/// φ + θψ + χ̄θ̄ + θσ^μθ̄ A_μ + θ²M + θ̄²N + θ̄²θκ + θ²λ̄θ̄ + θ²θ̄²D, with the
/// components taken from `c`.
pub fn reassemble(c: &Components) -> Expression {
    let th = Spinor::theta();
    let thb = Spinor::theta_bar();
    let th2 = th.square();
    let thb2 = thb.square();
    let mut v = c.phi.clone();
    v.add_assign_ref(&th.dot(&c.psi));
    v.add_assign_ref(&c.chi_bar.dot(&thb));
    for mu in 0..4u8 {
        v.add_assign_ref(&th.sigma_dot(up(mu), &thb).mul(&c.a[mu as usize]));
    }
    v.add_assign_ref(&th2.mul(&c.m));
    v.add_assign_ref(&thb2.mul(&c.n));
    v.add_assign_ref(&thb2.mul(&th.dot(&c.kappa)));
    v.add_assign_ref(&th2.mul(&c.lambda_bar.dot(&thb)));
    v.add_assign_ref(&th2.mul(&thb2).mul(&c.d));
    v
}

pub fn build_general_superfield() -> Superfield {
    Superfield { expr: reassemble(&Components::atoms()), kind: SuperfieldKind::GeneralLinear }
}

/// φ + iθσ^μθ̄∂_μφ + ¼θ²θ̄²∂²φ + θψ − (i/2)θ²∂_μψσ^μθ̄ + θ²F.
pub fn build_chiral_superfield() -> Superfield {
    let th = Spinor::theta();
    let thb = Spinor::theta_bar();
    let th2 = th.square();
    let phi = scalar(Symbol::Phi, &[]);
    let psi = spinor(Symbol::Psi, &[]);
    let mut v = phi.clone();
    for mu in 0..4u8 {
        v.add_assign_ref(&th.sigma_dot(up(mu), &thb).mul(&scalar(Symbol::Phi, &[mu])).scale(&Scalar::i()));
    }
    v.add_assign_ref(&th2.mul(&thb.square()).mul(&dalembertian(&phi)).scale(&Scalar::frac(1, 4)));
    v.add_assign_ref(&th.dot(&psi));
    for mu in 0..4u8 {
        let term = th2.mul(&psi.derive(mu).sigma_dot(up(mu), &thb));
        v.add_assign_ref(&term.scale(&Scalar::imag(-1, 2)));
    }
    v.add_assign_ref(&th2.mul(&scalar(Symbol::F, &[])));
    Superfield { expr: v, kind: SuperfieldKind::Chiral }
}

/// Left coefficients of `e` with respect to θ/θ̄ monomials: `e = Σ_P P·C_P`.
pub fn theta_coefficients(e: &Expression) -> BTreeMap<GrassmannMonomial, Expression> {
    let mut out: BTreeMap<GrassmannMonomial, Expression> = BTreeMap::new();
    for (key, c) in e.terms() {
        let (prefix, rest) = key.split_theta();
        out.entry(prefix).or_insert_with(Expression::zero).add_term(rest, c.clone());
    }
    out
}

fn coefficient(map: &BTreeMap<GrassmannMonomial, Expression>, gens: &[OddGenerator]) -> Expression {
    let (negative, m) = GrassmannMonomial::from_word(gens).expect("distinct generators");
    assert!(!negative, "coefficient requested for a non-canonical word");
    map.get(&m).cloned().unwrap_or_else(Expression::zero)
}

/// Inverts [`reassemble`]: reads the nine components off the θ/θ̄
/// expansion of `e`.
pub fn extract_components(e: &Expression) -> Components {
    let t = PauliTables::standard();
    let map = theta_coefficients(e);
    let th = OddGenerator::theta;
    let tb = OddGenerator::theta_bar;
    let c = |gens: &[OddGenerator]| coefficient(&map, gens);
    let lower = |ch, comps| Spinor::new(ch, crate::spinor::Position::Lower, comps);

    let phi = c(&[]);
    let psi = lower(Chirality::Undotted, [c(&[th(0)]), c(&[th(1)])]);
    // χ̄_α̇ θ̄^α̇ = θ̄^α̇ (grade-involuted χ̄_α̇)
    let chi_bar = lower(Chirality::Dotted, [0, 1].map(|i| c(&[tb(i)]).grade_involution()));
    let a = std::array::from_fn(|mu| {
        let mut acc = Expression::zero();
        for al in 0..2 {
            for ad in 0..2 {
                let sb = t.sigma_bar(crate::spinor::dn(mu as u8), ad, al);
                if !sb.is_zero() {
                    acc.add_scaled(&c(&[th(al as u8), tb(ad as u8)]), &(&sb * &Scalar::frac(-1, 2)));
                }
            }
        }
        acc
    });
    let m = c(&[th(0), th(1)]).scale(&Scalar::frac(-1, 2));
    let n = c(&[tb(0), tb(1)]).scale(&Scalar::frac(1, 2));
    let kappa = lower(Chirality::Undotted, [0, 1].map(|i| c(&[th(i), tb(0), tb(1)]).scale(&Scalar::frac(1, 2))));
    let lambda_bar = lower(
        Chirality::Dotted,
        [0, 1].map(|i| c(&[th(0), th(1), tb(i)]).grade_involution().scale(&Scalar::frac(-1, 2))),
    );
    let d = c(&[th(0), th(1), tb(0), tb(1)]).scale(&Scalar::frac(-1, 4));
    Components { phi, psi, chi_bar, a, m, n, kappa, lambda_bar, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Factor;

    #[test]
    fn general_superfield_round_trip() {
        let v = build_general_superfield();
        assert_eq!(extract_components(&v.expr), Components::atoms());
        assert_eq!(v.expr.coefficient(&Default::default()), Scalar::zero());
        assert_eq!(theta_coefficients(&v.expr)[&GrassmannMonomial::one()], scalar(Symbol::Phi, &[]));
    }

    #[test]
    fn general_superfield_has_sixteen_monomials() {
        let v = build_general_superfield();
        assert_eq!(theta_coefficients(&v.expr).len(), 16);
    }

    #[test]
    fn chiral_superfield_reduces_for_bare_scalar() {
        let v = build_chiral_superfield();
        let reduced = v.expr.map_factors(|f| match f {
            Factor::Even(a) | Factor::OddField(a) if matches!(a.symbol, Symbol::Psi | Symbol::F) => {
                Some(Expression::zero())
            }
            _ => None,
        });
        let th = Spinor::theta();
        let thb = Spinor::theta_bar();
        let mut expected = scalar(Symbol::Phi, &[]);
        for mu in 0..4u8 {
            expected.add_assign_ref(&th.sigma_dot(up(mu), &thb).mul(&scalar(Symbol::Phi, &[mu])).scale(&Scalar::i()));
        }
        expected.add_assign_ref(
            &th.square().mul(&thb.square()).mul(&dalembertian(&scalar(Symbol::Phi, &[]))).scale(&Scalar::frac(1, 4)),
        );
        assert_eq!(reduced, expected);
    }

    #[test]
    fn chiral_superfield_components() {
        let c = extract_components(&build_chiral_superfield().expr);
        let phi = scalar(Symbol::Phi, &[]);
        assert_eq!(c.phi, phi);
        assert_eq!(c.psi, spinor(Symbol::Psi, &[]));
        assert_eq!(c.m, scalar(Symbol::F, &[]));
        for mu in 0..4u8 {
            assert_eq!(c.a[mu as usize], scalar(Symbol::Phi, &[mu]).scale(&Scalar::i()));
        }
        assert_eq!(c.d, dalembertian(&phi).scale(&Scalar::frac(1, 4)));
        assert!(c.n.is_zero() && c.chi_bar.comps.iter().all(Expression::is_zero));
        assert!(c.kappa.comps.iter().all(Expression::is_zero));
        // λ̄ = −(i/2) ∂_μψ σ^μ
        let expected = (0..4u8).fold(Spinor::zero(Chirality::Dotted, crate::spinor::Position::Lower), |acc, mu| {
            &acc + &spinor(Symbol::Psi, &[mu]).times_sigma(up(mu)).scale(&Scalar::imag(-1, 2))
        });
        assert_eq!(c.lambda_bar, expected);
    }

    #[test]
    fn zero_fields_give_zero() {
        let v = build_chiral_superfield();
        let z = v.expr.map_factors(|f| match f {
            Factor::Even(_) | Factor::OddField(_) => Some(Expression::zero()),
            Factor::Gen(_) => None,
        });
        assert!(z.is_zero());
    }
}
