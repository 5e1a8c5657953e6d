//! Two-component spinors whose entries are superspace expressions, with the
//! index contractions used to write down multiplet laws.

use std::ops::{Add, Neg, Sub};

use crate::grassmann::{spacetime_derive, Expression, FieldAtom, GenKind, OddGenerator, Symbol};
use crate::scalar::Scalar;

use super::tables::{PauliTables, VIdx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Undotted,
    Dotted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Upper,
    Lower,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spinor {
    pub chirality: Chirality,
    pub position: Position,
    pub comps: [Expression; 2],
}

fn tables() -> &'static PauliTables {
    PauliTables::standard()
}

impl Spinor {
    pub fn new(chirality: Chirality, position: Position, comps: [Expression; 2]) -> Self {
        Spinor { chirality, position, comps }
    }

    pub fn zero(chirality: Chirality, position: Position) -> Self {
        Self::new(chirality, position, [Expression::zero(), Expression::zero()])
    }

    /// The generator pair (θ^1, θ^2), (θ̄^1̇, θ̄^2̇), … with upper indices.
    pub fn generators(kind: GenKind) -> Self {
        let g = OddGenerator::new(kind, 0);
        let chirality = if g.is_dotted() { Chirality::Dotted } else { Chirality::Undotted };
        let comps = [0, 1].map(|i| Expression::generator(OddGenerator::new(kind, i)));
        Self::new(chirality, Position::Upper, comps)
    }

    pub fn theta() -> Self {
        Self::generators(GenKind::Theta)
    }

    pub fn theta_bar() -> Self {
        Self::generators(GenKind::ThetaBar)
    }

    pub fn zeta() -> Self {
        Self::generators(GenKind::Zeta)
    }

    pub fn zeta_bar() -> Self {
        Self::generators(GenKind::ZetaBar)
    }

    /// A spinor field with lower index, e.g. ψ_α or ∂_μ χ̄_α̇.
    pub fn field(symbol: Symbol, derivs: &[u8]) -> Self {
        let comps = [0, 1].map(|i| Expression::atom(FieldAtom::spinor(symbol, i).with_derivs(derivs)));
        let chirality = match symbol.slot_kind() {
            crate::grassmann::SlotKind::Dotted => Chirality::Dotted,
            crate::grassmann::SlotKind::Undotted => Chirality::Undotted,
            other => panic!("{symbol:?} has slot kind {other:?}, not a spinor"),
        };
        Self::new(chirality, Position::Lower, comps)
    }

    pub fn component(&self, i: usize) -> &Expression {
        &self.comps[i]
    }

    /// ψ^α = ε^{αβ} ψ_β.
    pub fn raise(&self) -> Spinor {
        match self.position {
            Position::Upper => self.clone(),
            Position::Lower => {
                let t = tables();
                let comps = std::array::from_fn(|a| {
                    let mut acc = Expression::zero();
                    for b in 0..2 {
                        acc.add_scaled(&self.comps[b], &t.eps_upper[a][b]);
                    }
                    acc
                });
                Spinor::new(self.chirality, Position::Upper, comps)
            }
        }
    }

    /// ψ_β = ψ^α ε_{αβ}.
    pub fn lower(&self) -> Spinor {
        match self.position {
            Position::Lower => self.clone(),
            Position::Upper => {
                let t = tables();
                let comps = std::array::from_fn(|b| {
                    let mut acc = Expression::zero();
                    for a in 0..2 {
                        acc.add_scaled(&self.comps[a], &t.eps_lower[a][b]);
                    }
                    acc
                });
                Spinor::new(self.chirality, Position::Lower, comps)
            }
        }
    }

    fn to(&self, position: Position) -> Spinor {
        match position {
            Position::Upper => self.raise(),
            Position::Lower => self.lower(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Spinor {
        let comps = std::array::from_fn(|i| self.comps[i].scale(c));
        Spinor::new(self.chirality, self.position, comps)
    }

    /// e ψ_α, multiplied from the left.
    pub fn left_mul(&self, e: &Expression) -> Spinor {
        let comps = std::array::from_fn(|i| e.mul(&self.comps[i]));
        Spinor::new(self.chirality, self.position, comps)
    }

    /// ψ_α e, multiplied from the right.
    pub fn right_mul(&self, e: &Expression) -> Spinor {
        let comps = std::array::from_fn(|i| self.comps[i].mul(e));
        Spinor::new(self.chirality, self.position, comps)
    }

    pub fn derive(&self, mu: u8) -> Spinor {
        let comps = std::array::from_fn(|i| spacetime_derive(&self.comps[i], mu));
        Spinor::new(self.chirality, self.position, comps)
    }

    /// ψχ = ψ^α χ_α for undotted spinors, ψ̄χ̄ = ψ̄_α̇ χ̄^α̇ for dotted ones.
    pub fn dot(&self, other: &Spinor) -> Expression {
        assert_eq!(self.chirality, other.chirality, "contraction of mixed chirality");
        let (a, b) = match self.chirality {
            Chirality::Undotted => (self.raise(), other.lower()),
            Chirality::Dotted => (self.lower(), other.raise()),
        };
        let mut acc = Expression::zero();
        for i in 0..2 {
            acc.add_assign_ref(&a.comps[i].mul(&b.comps[i]));
        }
        acc
    }

    /// ψψ.
    pub fn square(&self) -> Expression {
        self.dot(self)
    }

    /// a σ^μ b = a^α σ^μ_{αα̇} b^α̇ for undotted `self` and dotted `b`.
    pub fn sigma_dot(&self, mu: VIdx, b: &Spinor) -> Expression {
        self.times_sigma(mu).dot(b)
    }

    /// b σ̄^μ a = b_α̇ σ̄^{μα̇α} a_α for dotted `self` and undotted `a`.
    pub fn sigma_bar_dot(&self, mu: VIdx, a: &Spinor) -> Expression {
        self.times_sigma_bar(mu).dot(a)
    }

    /// (a σ^μ)_α̇ = a^α σ^μ_{αα̇}.
    pub fn times_sigma(&self, mu: VIdx) -> Spinor {
        assert_eq!(self.chirality, Chirality::Undotted);
        let a = self.raise();
        let t = tables();
        let comps = std::array::from_fn(|ad| {
            let mut acc = Expression::zero();
            for al in 0..2 {
                acc.add_scaled(&a.comps[al], &t.sigma(mu, al, ad));
            }
            acc
        });
        Spinor::new(Chirality::Dotted, Position::Lower, comps)
    }

    /// (σ^μ b)_α = σ^μ_{αα̇} b^α̇.
    pub fn sigma_times(mu: VIdx, b: &Spinor) -> Spinor {
        assert_eq!(b.chirality, Chirality::Dotted);
        let b = b.to(Position::Upper);
        let t = tables();
        let comps = std::array::from_fn(|al| {
            let mut acc = Expression::zero();
            for ad in 0..2 {
                acc.add_scaled(&b.comps[ad], &t.sigma(mu, al, ad));
            }
            acc
        });
        Spinor::new(Chirality::Undotted, Position::Lower, comps)
    }

    /// (b σ̄^μ)^α = b_α̇ σ̄^{μα̇α}.
    pub fn times_sigma_bar(&self, mu: VIdx) -> Spinor {
        assert_eq!(self.chirality, Chirality::Dotted);
        let b = self.lower();
        let t = tables();
        let comps = std::array::from_fn(|al| {
            let mut acc = Expression::zero();
            for ad in 0..2 {
                acc.add_scaled(&b.comps[ad], &t.sigma_bar(mu, ad, al));
            }
            acc
        });
        Spinor::new(Chirality::Undotted, Position::Upper, comps)
    }

    /// (σ̄^μ a)^α̇ = σ̄^{μα̇α} a_α.
    pub fn sigma_bar_times(mu: VIdx, a: &Spinor) -> Spinor {
        assert_eq!(a.chirality, Chirality::Undotted);
        let a = a.to(Position::Lower);
        let t = tables();
        let comps = std::array::from_fn(|ad| {
            let mut acc = Expression::zero();
            for al in 0..2 {
                acc.add_scaled(&a.comps[al], &t.sigma_bar(mu, ad, al));
            }
            acc
        });
        Spinor::new(Chirality::Dotted, Position::Upper, comps)
    }

    fn combine(&self, other: &Spinor, sign: &Scalar) -> Spinor {
        assert_eq!(self.chirality, other.chirality);
        let other = other.to(self.position);
        let comps = std::array::from_fn(|i| {
            let mut c = self.comps[i].clone();
            c.add_scaled(&other.comps[i], sign);
            c
        });
        Spinor::new(self.chirality, self.position, comps)
    }

    /// Σ_μ f(μ), for an index summed against a spinor-valued term.
    pub fn sum_over(chirality: Chirality, position: Position, f: impl Fn(u8) -> Spinor) -> Spinor {
        (0..4).fold(Spinor::zero(chirality, position), |acc, mu| &acc + &f(mu))
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        self.combine(rhs, &Scalar::one())
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        self.combine(rhs, &Scalar::int(-1))
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        self.scale(&Scalar::int(-1))
    }
}

/// Σ_μ f(μ).
pub fn sum_mu(f: impl Fn(u8) -> Expression) -> Expression {
    (0..4).map(f).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::tables::{dn, up};

    fn th(i: u8) -> Expression {
        Expression::generator(OddGenerator::theta(i))
    }

    fn thb(i: u8) -> Expression {
        Expression::generator(OddGenerator::theta_bar(i))
    }

    #[test]
    fn squares_of_generators() {
        assert_eq!(Spinor::theta().square(), th(0).mul(&th(1)).scale(&Scalar::int(-2)));
        assert_eq!(Spinor::theta_bar().square(), thb(0).mul(&thb(1)).scale(&Scalar::int(2)));
    }

    #[test]
    fn raise_lower_round_trip() {
        let psi = Spinor::field(Symbol::Psi, &[]);
        assert_eq!(psi.raise().lower(), psi);
        assert_eq!(psi.raise().comps[0], psi.comps[1]);
        assert_eq!(psi.raise().comps[1], -&psi.comps[0]);
    }

    #[test]
    fn odd_dot_product_is_symmetric() {
        let psi = Spinor::field(Symbol::Psi, &[]);
        let th = Spinor::theta();
        assert_eq!(th.dot(&psi), psi.dot(&th));
        let chib = Spinor::field(Symbol::ChiBar, &[]);
        let thb = Spinor::theta_bar();
        assert_eq!(thb.dot(&chib), chib.dot(&thb));
    }

    #[test]
    fn sigma_bilinear_flip() {
        // θσ^μθ̄ = −θ̄σ̄^μθ for anticommuting spinors
        let th = Spinor::theta();
        let thb = Spinor::theta_bar();
        for mu in 0..4 {
            assert_eq!(th.sigma_dot(up(mu), &thb), -thb.sigma_bar_dot(up(mu), &th));
            assert_eq!(th.sigma_dot(dn(mu), &thb), -thb.sigma_bar_dot(dn(mu), &th));
        }
    }

    #[test]
    fn matrix_actions_agree_with_bilinears() {
        let th = Spinor::theta();
        let thb = Spinor::theta_bar();
        for mu in 0..4 {
            let lhs = th.dot(&Spinor::sigma_times(up(mu), &thb));
            assert_eq!(lhs, th.sigma_dot(up(mu), &thb));
            let rhs = thb.dot(&Spinor::sigma_bar_times(up(mu), &th));
            assert_eq!(rhs, thb.sigma_bar_dot(up(mu), &th));
        }
    }
}
