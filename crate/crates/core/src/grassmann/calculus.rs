//! Derivatives, conjugation and substitutions on normal-form expressions.

use std::collections::BTreeMap;

use thiserror::Error;

use super::expr::{Expression, Factor, TermKey};
use super::symbols::{FieldAtom, OddGenerator, OddSymbol, Slot, SlotKind, Symbol};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("conjugation map has no entry for {0:?}")]
    MissingConjugate(Symbol),
    #[error("cannot conjugate {from:?} into {to:?}: index structures differ")]
    IncompatibleConjugate { from: Symbol, to: Symbol },
}

/// Left derivative ∂/∂g. A term `… g …` contributes with the sign of moving
/// ∂ past the odd letters standing left of `g`.
pub fn grassmann_derive(e: &Expression, g: OddGenerator) -> Expression {
    let mut out = Expression::zero();
    for (key, c) in e.terms() {
        let gens = key.monomial.generators();
        let Ok(pos) = gens.binary_search(&g) else { continue };
        let mut word = key.word();
        word.remove(pos);
        let coeff = if pos % 2 == 1 { -c } else { c.clone() };
        out.add_assign_ref(&Expression::from_parts(coeff, key.fields.even().to_vec(), &word));
    }
    out
}

/// ∂_μ by the Leibniz rule over field atoms; generators are constants and
/// ∂_μ x^ν = δ_μ^ν.
pub fn spacetime_derive(e: &Expression, mu: u8) -> Expression {
    assert!(mu < 4);
    let mut out = Expression::zero();
    for (key, c) in e.terms() {
        let even = key.fields.even();
        for (i, atom) in even.iter().enumerate() {
            let mut new_even = even.to_vec();
            if atom.symbol == Symbol::Coord {
                if atom.slot != Slot::Vector(mu) {
                    continue;
                }
                new_even.remove(i);
            } else {
                new_even[i] = atom.clone().with_derivs(&[mu]);
            }
            out.add_assign_ref(&Expression::from_parts(c.clone(), new_even, &key.word()));
        }
        let word = key.word();
        let offset = key.monomial.degree();
        for j in 0..key.fields.odd().len() {
            let mut new_word = word.clone();
            if let OddSymbol::Field(a) = &word[offset + j] {
                new_word[offset + j] = OddSymbol::Field(a.clone().with_derivs(&[mu]));
            }
            out.add_assign_ref(&Expression::from_parts(c.clone(), even.to_vec(), &new_word));
        }
    }
    out
}

/// Field-symbol map used by [`conjugate`]. Every entry swaps dotted and
/// undotted spinor indices (or keeps a non-spinor index structure).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationMap {
    map: BTreeMap<Symbol, Symbol>,
}

impl ConjugationMap {
    pub fn new(pairs: impl IntoIterator<Item = (Symbol, Symbol)>) -> Result<Self, GrassmannError> {
        let mut map = BTreeMap::new();
        for (from, to) in pairs {
            let ok = match (from.slot_kind(), to.slot_kind()) {
                (SlotKind::Undotted, SlotKind::Dotted) | (SlotKind::Dotted, SlotKind::Undotted) => true,
                (a, b) => a == b && !matches!(a, SlotKind::Undotted | SlotKind::Dotted),
            };
            if !ok {
                return Err(GrassmannError::IncompatibleConjugate { from, to });
            }
            map.insert(from, to);
        }
        Ok(ConjugationMap { map })
    }

    /// Plain complex conjugation of every symbol.
    pub fn standard() -> Self {
        Self::new(Symbol::ALL.iter().map(|&s| (s, s.conjugate()))).expect("standard map is consistent")
    }

    /// Conjugation followed by the vector-multiplet identifications
    /// φ = φ⁺, ψ = χ, A = A⁺, M = N⁺, κ = λ, D = D⁺, expressed on the
    /// unconjugated symbols.
    pub fn vector_multiplet() -> Self {
        use Symbol::*;
        Self::new([
            (Phi, Phi),
            (Psi, ChiBar),
            (ChiBar, Psi),
            (A, A),
            (M, N),
            (N, M),
            (Kappa, LambdaBar),
            (LambdaBar, Kappa),
            (D, D),
            (Coord, Coord),
        ])
        .expect("vector multiplet map is consistent")
    }

    pub fn get(&self, s: Symbol) -> Option<Symbol> {
        self.map.get(&s).copied()
    }

    fn apply(&self, a: &FieldAtom) -> Result<FieldAtom, GrassmannError> {
        let to = self.get(a.symbol).ok_or(GrassmannError::MissingConjugate(a.symbol))?;
        Ok(a.renamed(to))
    }
}

/// Complex conjugation: conjugates coefficients, reverses each graded word,
/// sends θ ↔ θ̄ and ζ ↔ ζ̄, and renames atoms through `map`.
pub fn conjugate(e: &Expression, map: &ConjugationMap) -> Result<Expression, GrassmannError> {
    let mut out = Expression::zero();
    for (key, c) in e.terms() {
        let even = key
            .fields
            .even()
            .iter()
            .map(|a| map.apply(a))
            .collect::<Result<Vec<_>, _>>()?;
        let word = key
            .word()
            .into_iter()
            .rev()
            .map(|s| match s {
                OddSymbol::Gen(g) => Ok(OddSymbol::Gen(g.conjugate())),
                OddSymbol::Field(a) => map.apply(&a).map(OddSymbol::Field),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.add_assign_ref(&Expression::from_parts(c.conj(), even, &word));
    }
    Ok(out)
}

/// Which generator family a supertranslation shift acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftTarget {
    /// θ^α ↦ θ^α + ζ^α
    Theta,
    /// θ̄^α̇ ↦ θ̄^α̇ + ζ̄^α̇
    ThetaBar,
}

/// Linear substitution of generators; `f` returns the image of a generator or
/// `None` to keep it.
pub fn substitute_generators(
    e: &Expression,
    mut f: impl FnMut(OddGenerator) -> Option<Expression>,
) -> Expression {
    e.map_factors(|factor| match factor {
        Factor::Gen(g) => f(g),
        _ => None,
    })
}

pub fn substitute_shift(e: &Expression, which: ShiftTarget) -> Expression {
    substitute_generators(e, |g| match (which, g.kind) {
        (ShiftTarget::Theta, super::GenKind::Theta) => {
            Some(Expression::generator(g) + Expression::generator(OddGenerator::zeta(g.index)))
        }
        (ShiftTarget::ThetaBar, super::GenKind::ThetaBar) => {
            Some(Expression::generator(g) + Expression::generator(OddGenerator::zeta_bar(g.index)))
        }
        _ => None,
    })
}

/// Replaces field atoms; `f` returns the image of an atom or `None` to keep
/// it. Images of odd atoms must be odd.
pub fn substitute_atoms(
    e: &Expression,
    mut f: impl FnMut(&FieldAtom) -> Option<Expression>,
) -> Expression {
    e.map_factors(|factor| match factor {
        Factor::Even(a) | Factor::OddField(a) => f(a),
        Factor::Gen(_) => None,
    })
}

/// Sets every term containing one of the given generators to zero.
pub fn drop_generators(e: &Expression, pred: impl Fn(&OddGenerator) -> bool) -> Expression {
    e.retain(|k: &TermKey| !k.monomial.generators().iter().any(&pred))
}

/// Keeps only the terms whose degree in generators matching `pred` is at
/// most `max_degree`.
pub fn truncate_degree(e: &Expression, pred: impl Fn(&OddGenerator) -> bool, max_degree: usize) -> Expression {
    e.retain(|k| k.monomial.generators().iter().filter(|g| pred(g)).count() <= max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::symbols::FieldAtom;

    fn th(i: u8) -> Expression {
        Expression::generator(OddGenerator::theta(i))
    }

    #[test]
    fn derivative_of_generator_is_delta() {
        let g = OddGenerator::theta(0);
        assert_eq!(grassmann_derive(&th(0), g), Expression::one());
        assert!(grassmann_derive(&Expression::generator(OddGenerator::theta_bar(0)), g).is_zero());
    }

    #[test]
    fn derivative_sign_past_theta1() {
        let t12 = th(0).mul(&th(1));
        assert_eq!(grassmann_derive(&t12, OddGenerator::theta(1)), -th(0));
        assert_eq!(grassmann_derive(&t12, OddGenerator::theta(0)), th(1));
    }

    #[test]
    fn leibniz_for_spacetime_derivative() {
        let phi = Expression::atom(FieldAtom::scalar(Symbol::Phi));
        let psi = Expression::atom(FieldAtom::spinor(Symbol::Psi, 0));
        let e = phi.mul(&psi).mul(&th(0));
        let expected = Expression::atom(FieldAtom::scalar(Symbol::Phi).with_derivs(&[1]))
            .mul(&psi)
            .mul(&th(0))
            + phi.mul(&Expression::atom(FieldAtom::spinor(Symbol::Psi, 0).with_derivs(&[1]))).mul(&th(0));
        assert_eq!(spacetime_derive(&e, 1), expected);
        assert_eq!(
            spacetime_derive(&phi, 0),
            Expression::atom(FieldAtom::scalar(Symbol::Phi).with_derivs(&[0]))
        );
    }

    #[test]
    fn spacetime_derivatives_commute() {
        let phi = Expression::atom(FieldAtom::scalar(Symbol::Phi));
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(
                    spacetime_derive(&spacetime_derive(&phi, mu), nu),
                    spacetime_derive(&spacetime_derive(&phi, nu), mu)
                );
            }
        }
    }

    #[test]
    fn coordinate_derivative() {
        let x = Expression::atom(FieldAtom::coord(2));
        assert_eq!(spacetime_derive(&x, 2), Expression::one());
        assert!(spacetime_derive(&x, 1).is_zero());
    }

    #[test]
    fn conjugate_reverses_words() {
        let map = ConjugationMap::standard();
        let e = th(0).mul(&th(1));
        let tb = |i| Expression::generator(OddGenerator::theta_bar(i));
        assert_eq!(conjugate(&e, &map).unwrap(), -tb(0).mul(&tb(1)));
    }

    #[test]
    fn conjugation_map_must_cover_symbols() {
        let map = ConjugationMap::new([(Symbol::Phi, Symbol::PhiConj)]).unwrap();
        let psi = Expression::atom(FieldAtom::spinor(Symbol::Psi, 0));
        assert_eq!(conjugate(&psi, &map), Err(GrassmannError::MissingConjugate(Symbol::Psi)));
        assert!(ConjugationMap::new([(Symbol::Psi, Symbol::Kappa)]).is_err());
    }

    #[test]
    fn shift_of_generator() {
        let shifted = substitute_shift(&th(0), ShiftTarget::Theta);
        assert_eq!(shifted, th(0) + Expression::generator(OddGenerator::zeta(0)));
        assert_eq!(substitute_shift(&th(0), ShiftTarget::ThetaBar), th(0));
    }
}
