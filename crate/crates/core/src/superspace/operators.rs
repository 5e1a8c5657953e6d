use std::fmt;

use crate::grassmann::{grassmann_derive, spacetime_derive, Expression, FieldAtom, GenKind, OddGenerator};
use crate::scalar::Scalar;
use crate::spinor::{dn, mat_mul, mat_sub, up, Mat2, PauliTables, VIdx};

/// Differential-operator realizations of the super-Poincaré generators and
/// the supercovariant derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperOperator {
    Q(u8),
    QBar(u8),
    D(u8),
    DBar(u8),
    P(u8),
    M(u8, u8),
}

impl fmt::Display for SuperOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SuperOperator::Q(a) => write!(f, "Q_{}", a + 1),
            SuperOperator::QBar(a) => write!(f, "Qb_{}", a + 1),
            SuperOperator::D(a) => write!(f, "D_{}", a + 1),
            SuperOperator::DBar(a) => write!(f, "Db_{}", a + 1),
            SuperOperator::P(mu) => write!(f, "p_{mu}"),
            SuperOperator::M(mu, nu) => write!(f, "M_{mu}{nu}"),
        }
    }
}

/// Which pair of odd coordinates the fermionic derivatives act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coordinates {
    #[default]
    Theta,
    Zeta,
}

impl Coordinates {
    fn undotted(self, i: u8) -> OddGenerator {
        match self {
            Coordinates::Theta => OddGenerator::new(GenKind::Theta, i),
            Coordinates::Zeta => OddGenerator::new(GenKind::Zeta, i),
        }
    }

    fn dotted(self, i: u8) -> OddGenerator {
        match self {
            Coordinates::Theta => OddGenerator::new(GenKind::ThetaBar, i),
            Coordinates::Zeta => OddGenerator::new(GenKind::ZetaBar, i),
        }
    }
}

/// Σ_μ σ^μ_{αα̇} ϑ̄^α̇ ∂_μ e.
fn sigma_bar_coord_derivative(coords: Coordinates, alpha: u8, e: &Expression) -> Expression {
    let t = PauliTables::standard();
    let mut out = Expression::zero();
    for mu in 0..4u8 {
        let de = spacetime_derive(e, mu);
        if de.is_zero() {
            continue;
        }
        for ad in 0..2u8 {
            let s = t.sigma(up(mu), alpha as usize, ad as usize);
            if !s.is_zero() {
                out.add_scaled(&Expression::generator(coords.dotted(ad)).mul(&de), &s);
            }
        }
    }
    out
}

/// Σ_μ ϑ^α σ^μ_{αα̇} ∂_μ e.
fn coord_sigma_derivative(coords: Coordinates, alpha_dot: u8, e: &Expression) -> Expression {
    let t = PauliTables::standard();
    let mut out = Expression::zero();
    for mu in 0..4u8 {
        let de = spacetime_derive(e, mu);
        if de.is_zero() {
            continue;
        }
        for a in 0..2u8 {
            let s = t.sigma(up(mu), a as usize, alpha_dot as usize);
            if !s.is_zero() {
                out.add_scaled(&Expression::generator(coords.undotted(a)).mul(&de), &s);
            }
        }
    }
    out
}

fn sigma_mat(mu: VIdx) -> Mat2 {
    let t = PauliTables::standard();
    std::array::from_fn(|a| std::array::from_fn(|ad| t.sigma(mu, a, ad)))
}

fn sigma_bar_mat(mu: VIdx) -> Mat2 {
    let t = PauliTables::standard();
    std::array::from_fn(|ad| std::array::from_fn(|a| t.sigma_bar(mu, ad, a)))
}

/// (σ_μσ̄_ν − σ_νσ̄_μ)_α^β.
pub fn sigma_commutator(mu: u8, nu: u8) -> Mat2 {
    mat_sub(&mat_mul(&sigma_mat(dn(mu)), &sigma_bar_mat(dn(nu))), &mat_mul(&sigma_mat(dn(nu)), &sigma_bar_mat(dn(mu))))
}

/// (σ̄_μσ_ν − σ̄_νσ_μ)^α̇_β̇.
pub fn sigma_bar_commutator(mu: u8, nu: u8) -> Mat2 {
    mat_sub(&mat_mul(&sigma_bar_mat(dn(mu)), &sigma_mat(dn(nu))), &mat_mul(&sigma_bar_mat(dn(nu)), &sigma_mat(dn(mu))))
}

/// x_μ = η_{μν} x^ν.
fn coord_lower(mu: u8) -> Expression {
    let x = Expression::atom(FieldAtom::coord(mu));
    if mu == 0 {
        -x
    } else {
        x
    }
}

pub fn apply_operator(op: SuperOperator, e: &Expression) -> Expression {
    apply_operator_in(op, Coordinates::Theta, e)
}

/// Applies `op` with its fermionic parts acting on the given coordinates.
pub fn apply_operator_in(op: SuperOperator, coords: Coordinates, e: &Expression) -> Expression {
    let i = Scalar::i();
    let minus_i = -&i;
    match op {
        // −i∂_α − σ^μ_{αα̇} ϑ̄^α̇ ∂_μ
        SuperOperator::Q(a) => {
            grassmann_derive(e, coords.undotted(a)).scale(&minus_i) - sigma_bar_coord_derivative(coords, a, e)
        }
        // i∂̄_α̇ + ϑ^α σ^μ_{αα̇} ∂_μ
        SuperOperator::QBar(ad) => {
            grassmann_derive(e, coords.dotted(ad)).scale(&i) + coord_sigma_derivative(coords, ad, e)
        }
        SuperOperator::D(a) => {
            grassmann_derive(e, coords.undotted(a)).scale(&minus_i) + sigma_bar_coord_derivative(coords, a, e)
        }
        SuperOperator::DBar(ad) => {
            grassmann_derive(e, coords.dotted(ad)).scale(&i) - coord_sigma_derivative(coords, ad, e)
        }
        SuperOperator::P(mu) => spacetime_derive(e, mu).scale(&minus_i),
        SuperOperator::M(mu, nu) => {
            let orbital = coord_lower(mu).mul(&spacetime_derive(e, nu)) - coord_lower(nu).mul(&spacetime_derive(e, mu));
            let mut out = orbital.scale(&minus_i);
            let a = sigma_commutator(mu, nu);
            let b = sigma_bar_commutator(mu, nu);
            let quarter_i = Scalar::imag(1, 4);
            for al in 0..2u8 {
                for be in 0..2u8 {
                    let c = &a[al as usize][be as usize];
                    if !c.is_zero() {
                        let term = Expression::generator(coords.undotted(al)).mul(&grassmann_derive(e, coords.undotted(be)));
                        out.add_scaled(&term, &(&quarter_i * c));
                    }
                    let c = &b[be as usize][al as usize];
                    if !c.is_zero() {
                        // B^β̇_α̇ ϑ̄^α̇ ∂̄_β̇ with α̇ = al, β̇ = be
                        let term = Expression::generator(coords.dotted(al)).mul(&grassmann_derive(e, coords.dotted(be)));
                        out.add_scaled(&term, &-(&quarter_i * c));
                    }
                }
            }
            out
        }
    }
}

/// (op1 op2 + op2 op1) probe.
pub fn anticommutator(op1: SuperOperator, op2: SuperOperator, probe: &Expression) -> Expression {
    apply_operator(op1, &apply_operator(op2, probe)) + apply_operator(op2, &apply_operator(op1, probe))
}

/// (op1 op2 − op2 op1) probe.
pub fn commutator(op1: SuperOperator, op2: SuperOperator, probe: &Expression) -> Expression {
    apply_operator(op1, &apply_operator(op2, probe)) - apply_operator(op2, &apply_operator(op1, probe))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Symbol;
    use crate::superspace::fields::scalar;

    fn th(i: u8) -> Expression {
        Expression::generator(OddGenerator::theta(i))
    }

    #[test]
    fn q_on_theta() {
        assert_eq!(apply_operator(SuperOperator::Q(0), &th(0)), Expression::scalar(-Scalar::i()));
        assert!(apply_operator(SuperOperator::Q(0), &th(1)).is_zero());
    }

    #[test]
    fn dbar_annihilates_theta() {
        for ad in 0..2 {
            for a in 0..2 {
                assert!(apply_operator(SuperOperator::DBar(ad), &th(a)).is_zero());
            }
        }
    }

    #[test]
    fn momentum_on_scalar() {
        let phi = scalar(Symbol::Phi, &[]);
        assert_eq!(apply_operator(SuperOperator::P(2), &phi), scalar(Symbol::Phi, &[2]).scale(&-Scalar::i()));
    }

    #[test]
    fn dbar_annihilates_chiral_coordinate() {
        // x^μ + iθσ^μθ̄
        let thb = crate::spinor::Spinor::theta_bar();
        let thv = crate::spinor::Spinor::theta();
        for mu in 0..4u8 {
            let y = Expression::atom(FieldAtom::coord(mu)) + thv.sigma_dot(up(mu), &thb).scale(&Scalar::i());
            for ad in 0..2 {
                assert!(apply_operator(SuperOperator::DBar(ad), &y).is_zero());
            }
        }
    }

    #[test]
    fn lorentz_on_coordinates() {
        // M_{μν} x^ρ = −i(x_μ δ_ν^ρ − x_ν δ_μ^ρ)
        let x1 = Expression::atom(FieldAtom::coord(1));
        let m = apply_operator(SuperOperator::M(0, 1), &x1);
        assert_eq!(m, coord_lower(0).scale(&-Scalar::i()));
    }
}
