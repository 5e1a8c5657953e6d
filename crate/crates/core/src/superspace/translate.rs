use std::collections::BTreeMap;

use thiserror::Error;

use crate::grassmann::{Expression, Factor, FieldAtom, GenKind, OddGenerator, Slot, Symbol};
use crate::scalar::Scalar;
use crate::spinor::{up, Chirality, Position, Spinor};

use super::superfield::Superfield;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranslateError {
    #[error("superfield already depends on the translation parameter {0}")]
    ParameterInInput(OddGenerator),
    #[error("Taylor series of the coordinate shift did not terminate at fourth order")]
    NonTerminating,
}

/// Supertranslation parameters ζ^α, ζ̄^α̇ (upper indices). They are usually
/// the ζ generators themselves, but any odd expressions are allowed so that
/// translations can be composed and inverted.
#[derive(Clone, Debug, PartialEq)]
pub struct TranslationParams {
    pub zeta: [Expression; 2],
    pub zeta_bar: [Expression; 2],
}

impl TranslationParams {
    /// ζ, ζ̄ as the dedicated parameter generators.
    pub fn standard() -> Self {
        Self::from_kinds(GenKind::Zeta, GenKind::ZetaBar)
    }

    /// A second, independent set of parameters built from auxiliary
    /// generators `name` and `nameb`.
    pub fn auxiliary(name: &'static str) -> Self {
        Self::from_kinds(GenKind::Aux { name, dotted: false }, GenKind::Aux { name, dotted: true })
    }

    fn from_kinds(undotted: GenKind, dotted: GenKind) -> Self {
        TranslationParams {
            zeta: [0, 1].map(|i| Expression::generator(OddGenerator::new(undotted, i))),
            zeta_bar: [0, 1].map(|i| Expression::generator(OddGenerator::new(dotted, i))),
        }
    }

    pub fn zero() -> Self {
        TranslationParams {
            zeta: [Expression::zero(), Expression::zero()],
            zeta_bar: [Expression::zero(), Expression::zero()],
        }
    }

    pub fn negated(&self) -> Self {
        TranslationParams {
            zeta: std::array::from_fn(|i| -&self.zeta[i]),
            zeta_bar: std::array::from_fn(|i| -&self.zeta_bar[i]),
        }
    }

    pub fn sum(&self, other: &TranslationParams) -> Self {
        TranslationParams {
            zeta: std::array::from_fn(|i| &self.zeta[i] + &other.zeta[i]),
            zeta_bar: std::array::from_fn(|i| &self.zeta_bar[i] + &other.zeta_bar[i]),
        }
    }

    pub fn zeta_spinor(&self) -> Spinor {
        Spinor::new(Chirality::Undotted, Position::Upper, self.zeta.clone())
    }

    pub fn zeta_bar_spinor(&self) -> Spinor {
        Spinor::new(Chirality::Dotted, Position::Upper, self.zeta_bar.clone())
    }

    pub fn generators(&self) -> std::collections::BTreeSet<OddGenerator> {
        self.zeta.iter().chain(self.zeta_bar.iter()).flat_map(|e| e.generators()).collect()
    }

    /// Δ^μ = i(ζσ^μθ̄ − θσ^μζ̄).
    pub fn coordinate_shift(&self, mu: u8) -> Expression {
        let z = self.zeta_spinor();
        let zb = self.zeta_bar_spinor();
        let th = Spinor::theta();
        let thb = Spinor::theta_bar();
        (z.sigma_dot(up(mu), &thb) - th.sigma_dot(up(mu), &zb)).scale(&Scalar::i())
    }
}

/// Derivative multiset ↦ coefficient of ∂_{multiset} f in f(x + a).
type TaylorMap = BTreeMap<Vec<u8>, Expression>;

/// Order-n terms (1/n!) a^{μ1}…a^{μn} grouped by derivative multiset.
fn taylor_orders(a: &[Expression; 4], max_order: usize) -> Vec<TaylorMap> {
    let mut orders = vec![TaylorMap::from([(Vec::new(), Expression::one())])];
    for n in 1..=max_order {
        let inv_n = Scalar::frac(1, n as i64);
        let mut next = TaylorMap::new();
        for (m, e) in &orders[n - 1] {
            for (mu, a_mu) in a.iter().enumerate() {
                let mut key = m.clone();
                key.push(mu as u8);
                key.sort_unstable();
                let term = a_mu.mul(e).scale(&inv_n);
                next.entry(key).or_insert_with(Expression::zero).add_assign_ref(&term);
            }
        }
        next.retain(|_, e| !e.is_zero());
        orders.push(next);
    }
    orders
}

/// The order-n Taylor terms of the supertranslation coordinate shift,
/// keyed by derivative multiset.
pub fn taylor_term(params: &TranslationParams, order: usize) -> BTreeMap<Vec<u8>, Expression> {
    let a: [Expression; 4] = std::array::from_fn(|mu| -params.coordinate_shift(mu as u8));
    taylor_orders(&a, order).pop().expect("order zero is always present")
}

/// Order at which the Taylor series of a generic nilpotent shift is abandoned.
const MAX_SHIFT_ORDER: usize = 16;

/// f(x + a) for every field atom and coordinate in `e`, with `a^μ` even and
/// nilpotent. The series is summed until it vanishes identically.
pub fn shift_spacetime(e: &Expression, a: &[Expression; 4]) -> Result<Expression, TranslateError> {
    let orders = taylor_orders(a, MAX_SHIFT_ORDER + 1);
    if orders.last().is_some_and(|m| !m.is_empty()) {
        return Err(TranslateError::NonTerminating);
    }
    Ok(apply_series(e, a, orders, |_| None))
}

/// V(x − Δ, θ, θ̄): only the spacetime argument moves, θ and θ̄ stay put.
pub fn shift_coordinates(e: &Expression, params: &TranslationParams) -> Result<Expression, TranslateError> {
    let (a, orders) = supertranslation_series(params)?;
    Ok(apply_series(e, &a, orders, |_| None))
}

fn supertranslation_series(params: &TranslationParams) -> Result<([Expression; 4], Vec<TaylorMap>), TranslateError> {
    let a: [Expression; 4] = std::array::from_fn(|mu| -params.coordinate_shift(mu as u8));
    let mut orders = taylor_orders(&a, 5);
    if !orders.pop().expect("five orders").is_empty() {
        return Err(TranslateError::NonTerminating);
    }
    Ok((a, orders))
}

fn apply_series(
    e: &Expression,
    a: &[Expression; 4],
    orders: Vec<TaylorMap>,
    mut generator: impl FnMut(OddGenerator) -> Option<Expression>,
) -> Expression {
    let series: Vec<(Vec<u8>, Expression)> = orders.into_iter().flat_map(|m| m.into_iter()).collect();
    let shifted_atom = |atom: &FieldAtom| -> Expression {
        if atom.symbol == Symbol::Coord {
            let Slot::Vector(nu) = atom.slot else { unreachable!("coordinate atoms carry a vector slot") };
            return Expression::atom(atom.clone()) + a[nu as usize].clone();
        }
        let mut out = Expression::zero();
        for (m, coeff) in &series {
            out.add_assign_ref(&coeff.mul(&Expression::atom(atom.clone().with_derivs(m))));
        }
        out
    };
    e.map_factors(|f| match f {
        Factor::Gen(g) => generator(g),
        Factor::Even(atom) | Factor::OddField(atom) => Some(shifted_atom(atom)),
    })
}

/// V(x − Δ, θ + ζ, θ̄ + ζ̄) for an arbitrary expression, without checking
/// that `e` is free of the parameter generators.
pub fn translate_expr(e: &Expression, params: &TranslationParams) -> Result<Expression, TranslateError> {
    let (a, orders) = supertranslation_series(params)?;
    Ok(apply_series(e, &a, orders, |g| match g.kind {
        GenKind::Theta => Some(Expression::generator(g) + params.zeta[g.index as usize].clone()),
        GenKind::ThetaBar => Some(Expression::generator(g) + params.zeta_bar[g.index as usize].clone()),
        _ => None,
    }))
}

/// The supertranslated superfield V(x − i(ζσθ̄ − θσζ̄), θ + ζ, θ̄ + ζ̄).
pub fn supertranslate(v: &Superfield, params: &TranslationParams) -> Result<Expression, TranslateError> {
    let used = v.expr.generators();
    if let Some(g) = params.generators().into_iter().find(|g| used.contains(g)) {
        return Err(TranslateError::ParameterInInput(g));
    }
    translate_expr(&v.expr, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::fields::scalar;
    use crate::superspace::superfield::build_general_superfield;

    #[test]
    fn zero_shift_is_identity() {
        let v = build_general_superfield();
        assert_eq!(supertranslate(&v, &TranslationParams::zero()).unwrap(), v.expr);
    }

    #[test]
    fn taylor_series_terminates() {
        let p = TranslationParams::standard();
        let a: [Expression; 4] = std::array::from_fn(|mu| -p.coordinate_shift(mu as u8));
        let orders = taylor_orders(&a, 5);
        assert!(!orders[4].is_empty());
        assert!(orders[5].is_empty());
    }

    #[test]
    fn rejects_parameter_dependence() {
        let v = Superfield::custom(Expression::generator(OddGenerator::zeta(0)));
        assert_eq!(
            supertranslate(&v, &TranslationParams::standard()),
            Err(TranslateError::ParameterInInput(OddGenerator::zeta(0)))
        );
    }

    #[test]
    fn first_order_of_scalar() {
        let v = Superfield::custom(scalar(Symbol::Phi, &[]));
        let p = TranslationParams::standard();
        let out = supertranslate(&v, &p).unwrap();
        let linear = out.retain(|k| k.fields.even()[0].derivs().len() == 1);
        let mut expected = Expression::zero();
        for mu in 0..4u8 {
            expected.add_assign_ref(&p.coordinate_shift(mu).mul(&scalar(Symbol::Phi, &[mu])));
        }
        assert_eq!(linear, -expected);
    }
}
