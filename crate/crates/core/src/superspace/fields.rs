//! Shorthands for component-field atoms and their derivatives.

use crate::grassmann::{spacetime_derive, Expression, FieldAtom, Symbol};
use crate::scalar::Scalar;
use crate::spinor::{Chirality, Position, Spinor};

/// A scalar field with the given derivative multiset, e.g. ∂_μ∂_ν φ.
pub fn scalar(symbol: Symbol, derivs: &[u8]) -> Expression {
    Expression::atom(FieldAtom::scalar(symbol).with_derivs(derivs))
}

/// Component `mu` (lower index) of a vector field.
pub fn vector(symbol: Symbol, mu: u8, derivs: &[u8]) -> Expression {
    Expression::atom(FieldAtom::vector(symbol, mu).with_derivs(derivs))
}

/// A spinor field with lower index.
pub fn spinor(symbol: Symbol, derivs: &[u8]) -> Spinor {
    Spinor::field(symbol, derivs)
}

/// The vector field as a contravariant component A^μ = η^{μν} A_ν.
pub fn vector_up(symbol: Symbol, mu: u8, derivs: &[u8]) -> Expression {
    let e = vector(symbol, mu, derivs);
    if mu == 0 {
        -e
    } else {
        e
    }
}

pub fn derive(e: &Expression, derivs: &[u8]) -> Expression {
    derivs.iter().fold(e.clone(), |acc, &mu| spacetime_derive(&acc, mu))
}

/// ∂² = η^{μν} ∂_μ ∂_ν.
pub fn dalembertian(e: &Expression) -> Expression {
    let mut out = Expression::zero();
    for mu in 0..4u8 {
        let sign = if mu == 0 { Scalar::int(-1) } else { Scalar::one() };
        out.add_scaled(&derive(e, &[mu, mu]), &sign);
    }
    out
}

pub fn dalembertian_spinor(s: &Spinor) -> Spinor {
    let comps = std::array::from_fn(|i| dalembertian(&s.comps[i]));
    Spinor::new(s.chirality, s.position, comps)
}

/// ∂_μ with an upper index, ∂^μ = η^{μν} ∂_ν.
pub fn derive_up(e: &Expression, mu: u8) -> Expression {
    let d = spacetime_derive(e, mu);
    if mu == 0 {
        -d
    } else {
        d
    }
}

pub fn zero_spinor(chirality: Chirality) -> Spinor {
    Spinor::zero(chirality, Position::Lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_of_scalar() {
        let phi = scalar(Symbol::Phi, &[]);
        let expected = -scalar(Symbol::Phi, &[0, 0])
            + scalar(Symbol::Phi, &[1, 1])
            + scalar(Symbol::Phi, &[2, 2])
            + scalar(Symbol::Phi, &[3, 3]);
        assert_eq!(dalembertian(&phi), expected);
    }

    #[test]
    fn derivative_order_is_irrelevant() {
        let phi = scalar(Symbol::Phi, &[]);
        assert_eq!(derive(&phi, &[2, 0, 1]), scalar(Symbol::Phi, &[0, 1, 2]));
    }
}
