//! Seeded random expressions for property checks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{Expression, FieldAtom, GenKind, OddGenerator, OddSymbol, Symbol};
use crate::scalar::Scalar;

/// Shape limits for [`random_expression`].
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_terms: usize,
    pub max_generators: usize,
    pub max_even_atoms: usize,
    pub max_odd_atoms: usize,
    pub max_derivs: usize,
    /// Whether to draw coordinate factors x^μ.
    pub coordinates: bool,
    /// Generator families to draw from.
    pub kinds: &'static [GenKind],
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_terms: 4,
            max_generators: 3,
            max_even_atoms: 2,
            max_odd_atoms: 1,
            max_derivs: 2,
            coordinates: true,
            kinds: &[GenKind::Theta, GenKind::ThetaBar, GenKind::Zeta, GenKind::ZetaBar],
        }
    }
}

impl Shape {
    /// Superfield-like: θ and θ̄ only.
    pub fn superfield() -> Self {
        Shape { max_generators: 4, kinds: &[GenKind::Theta, GenKind::ThetaBar], ..Shape::default() }
    }
}

const EVEN_SCALARS: [Symbol; 4] = [Symbol::Phi, Symbol::M, Symbol::N, Symbol::D];
const ODD_SPINORS: [Symbol; 4] = [Symbol::Psi, Symbol::ChiBar, Symbol::Kappa, Symbol::LambdaBar];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let re = (rng.random_range(-4..=4), rng.random_range(1..=3));
    let im = (rng.random_range(-4..=4), rng.random_range(1..=3));
    let s = Scalar::complex(re, im);
    if s.is_zero() {
        Scalar::one()
    } else {
        s
    }
}

fn random_derivs(rng: &mut impl Rng, max: usize) -> Vec<u8> {
    let n = rng.random_range(0..=max);
    (0..n).map(|_| rng.random_range(0..4u8)).collect()
}

fn random_even_atom(rng: &mut impl Rng, shape: &Shape) -> FieldAtom {
    let roll = rng.random_range(0..10);
    if shape.coordinates && roll < 2 {
        return FieldAtom::coord(rng.random_range(0..4));
    }
    let derivs = random_derivs(rng, shape.max_derivs);
    let atom = if roll < 4 {
        FieldAtom::vector(Symbol::A, rng.random_range(0..4))
    } else {
        FieldAtom::scalar(*EVEN_SCALARS.choose(rng).expect("non-empty"))
    };
    atom.with_derivs(&derivs)
}

fn random_odd_atom(rng: &mut impl Rng, shape: &Shape) -> FieldAtom {
    let derivs = random_derivs(rng, shape.max_derivs);
    FieldAtom::spinor(*ODD_SPINORS.choose(rng).expect("non-empty"), rng.random_range(0..2)).with_derivs(&derivs)
}

/// A random term: coefficient × even atoms × a graded word in arbitrary
/// (not necessarily canonical) order.
pub fn random_term(rng: &mut impl Rng, shape: &Shape) -> Expression {
    let even: Vec<FieldAtom> = (0..rng.random_range(0..=shape.max_even_atoms)).map(|_| random_even_atom(rng, shape)).collect();
    let mut word: Vec<OddSymbol> = (0..rng.random_range(0..=shape.max_generators))
        .map(|_| {
            let kind = *shape.kinds.choose(rng).expect("non-empty");
            OddSymbol::Gen(OddGenerator::new(kind, rng.random_range(0..2)))
        })
        .collect();
    for _ in 0..rng.random_range(0..=shape.max_odd_atoms) {
        let at = rng.random_range(0..=word.len());
        word.insert(at, OddSymbol::Field(random_odd_atom(rng, shape)));
    }
    Expression::from_parts(random_scalar(rng), even, &word)
}

pub fn random_expression(rng: &mut impl Rng, shape: &Shape) -> Expression {
    let n = rng.random_range(1..=shape.max_terms);
    (0..n).map(|_| random_term(rng, shape)).sum()
}

/// A random expression of definite parity.
pub fn random_homogeneous(rng: &mut impl Rng, shape: &Shape, odd: bool) -> Expression {
    let e = random_expression(rng, shape);
    e.retain(|k| k.is_odd() == odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let shape = Shape::default();
        let a = random_expression(&mut rng(7), &shape);
        let b = random_expression(&mut rng(7), &shape);
        assert_eq!(a, b);
    }

    #[test]
    fn superfield_shape_has_no_parameters() {
        let e = random_expression(&mut rng(3), &Shape::superfield());
        assert!(!e.contains_generator(|g| g.is_zeta()));
    }
}
