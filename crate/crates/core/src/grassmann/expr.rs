use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::symbols::{FieldAtom, OddGenerator, OddSymbol};
use super::word::{canonicalize, merge, Canonical};
use crate::scalar::Scalar;

/// Strictly increasing product of odd generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GrassmannMonomial(Vec<OddGenerator>);

impl GrassmannMonomial {
    pub fn one() -> Self {
        GrassmannMonomial(Vec::new())
    }

    /// Sorts `word`, returning the sign and monomial (`None` if a generator
    /// repeats).
    pub fn from_word(word: &[OddGenerator]) -> Option<(bool, Self)> {
        match canonicalize(word) {
            Canonical::Zero => None,
            Canonical::Sorted { negative, word } => Some((negative, GrassmannMonomial(word))),
        }
    }

    pub fn generators(&self) -> &[OddGenerator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, g: &OddGenerator) -> bool {
        self.0.binary_search(g).is_ok()
    }
}

/// Field content of a term: a commutative multiset of even atoms and a
/// strictly increasing list of odd atoms (the tail of the graded word).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldWord {
    even: Vec<FieldAtom>,
    odd: Vec<FieldAtom>,
}

impl FieldWord {
    pub fn even(&self) -> &[FieldAtom] {
        &self.even
    }

    pub fn odd(&self) -> &[FieldAtom] {
        &self.odd
    }

    pub fn atoms(&self) -> impl Iterator<Item = &FieldAtom> {
        self.even.iter().chain(self.odd.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }
}

/// Key of a term: the canonical graded word is `monomial ++ fields.odd`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TermKey {
    pub monomial: GrassmannMonomial,
    pub fields: FieldWord,
}

impl TermKey {
    /// Builds a canonical key from even atoms and an arbitrary graded word.
    /// Returns `None` when the word has a repeated letter.
    pub fn from_parts(mut even: Vec<FieldAtom>, word: &[OddSymbol]) -> Option<(bool, TermKey)> {
        assert!(even.iter().all(|a| !a.is_odd()), "odd atom in even part");
        even.sort();
        let (negative, sorted) = match canonicalize(word) {
            Canonical::Zero => return None,
            Canonical::Sorted { negative, word } => (negative, word),
        };
        let mut gens = Vec::new();
        let mut odd = Vec::new();
        for s in sorted {
            match s {
                OddSymbol::Gen(g) => gens.push(g),
                OddSymbol::Field(a) => {
                    assert!(a.is_odd(), "even atom {a} placed in graded word");
                    odd.push(a)
                }
            }
        }
        Some((
            negative,
            TermKey { monomial: GrassmannMonomial(gens), fields: FieldWord { even, odd } },
        ))
    }

    /// The canonical graded word.
    pub fn word(&self) -> Vec<OddSymbol> {
        self.monomial
            .0
            .iter()
            .map(|&g| OddSymbol::Gen(g))
            .chain(self.fields.odd.iter().cloned().map(OddSymbol::Field))
            .collect()
    }

    pub fn word_len(&self) -> usize {
        self.monomial.0.len() + self.fields.odd.len()
    }

    pub fn is_odd(&self) -> bool {
        self.word_len() % 2 == 1
    }

    /// Graded product of two keys.
    pub fn mul(&self, rhs: &TermKey) -> Option<(bool, TermKey)> {
        let (gens, inv_g) = merge(&self.monomial.0, &rhs.monomial.0)?;
        let (odd, inv_f) = merge(&self.fields.odd, &rhs.fields.odd)?;
        // moving rhs generators left past our odd atoms
        let cross = self.fields.odd.len() * rhs.monomial.0.len();
        let negative = (inv_g + inv_f + cross) % 2 == 1;
        let mut even = Vec::with_capacity(self.fields.even.len() + rhs.fields.even.len());
        even.extend_from_slice(&self.fields.even);
        even.extend_from_slice(&rhs.fields.even);
        even.sort();
        Some((
            negative,
            TermKey { monomial: GrassmannMonomial(gens), fields: FieldWord { even, odd } },
        ))
    }

    /// Splits off the θ/θ̄ prefix of the monomial. Because θ, θ̄ sort first,
    /// the prefix stands leftmost in the word and no sign arises.
    pub fn split_theta(&self) -> (GrassmannMonomial, TermKey) {
        let n = self.monomial.0.iter().take_while(|g| g.is_theta()).count();
        let prefix = GrassmannMonomial(self.monomial.0[..n].to_vec());
        let rest = TermKey {
            monomial: GrassmannMonomial(self.monomial.0[n..].to_vec()),
            fields: self.fields.clone(),
        };
        (prefix, rest)
    }
}

impl fmt::Display for TermKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str("*")
            }
        };
        for a in &self.fields.even {
            sep(f)?;
            write!(f, "{a}")?;
        }
        for g in &self.monomial.0 {
            sep(f)?;
            write!(f, "{g}")?;
        }
        for a in &self.fields.odd {
            sep(f)?;
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A letter of a term handed to [`Expression::map_factors`], in product order:
/// even atoms first, then the graded word.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    Even(&'a FieldAtom),
    Gen(OddGenerator),
    OddField(&'a FieldAtom),
}

/// Finite sum of terms in normal form. Zero is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Expression {
    terms: BTreeMap<TermKey, Scalar>,
}

impl Expression {
    pub fn zero() -> Self {
        Expression::default()
    }

    pub fn one() -> Self {
        Expression::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut e = Expression::zero();
        e.add_term(TermKey::default(), c);
        e
    }

    pub fn generator(g: OddGenerator) -> Self {
        Expression::word(&[OddSymbol::Gen(g)])
    }

    pub fn atom(a: FieldAtom) -> Self {
        if a.is_odd() {
            Expression::word(&[OddSymbol::Field(a)])
        } else {
            Expression::from_parts(Scalar::one(), vec![a], &[])
        }
    }

    /// Ordered product of odd letters.
    pub fn word(word: &[OddSymbol]) -> Self {
        Expression::from_parts(Scalar::one(), Vec::new(), word)
    }

    /// `coeff · (even atoms) · (graded word)`, canonicalized.
    pub fn from_parts(coeff: Scalar, even: Vec<FieldAtom>, word: &[OddSymbol]) -> Self {
        let mut e = Expression::zero();
        if let Some((negative, key)) = TermKey::from_parts(even, word) {
            e.add_term(key, if negative { -coeff } else { coeff });
        }
        e
    }

    pub fn from_term(key: TermKey, coeff: Scalar) -> Self {
        let mut e = Expression::zero();
        e.add_term(key, coeff);
        e
    }

    /// Accumulates `coeff` onto `key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: TermKey, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deterministic (monomial, field word) order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (TermKey, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, key: &TermKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Expression {
        if c.is_zero() {
            return Expression::zero();
        }
        Expression { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn add_assign_ref(&mut self, rhs: &Expression) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    /// `self += c·rhs`
    pub fn add_scaled(&mut self, rhs: &Expression, c: &Scalar) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Graded product.
    pub fn mul(&self, rhs: &Expression) -> Expression {
        let mut out = Expression::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                if let Some((negative, key)) = ka.mul(kb) {
                    let c = ca * cb;
                    out.add_term(key, if negative { -c } else { c });
                }
            }
        }
        out
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Expression>) -> Expression {
        let mut out = Expression::zero();
        for e in items {
            out.add_assign_ref(e);
        }
        out
    }

    /// `Some(true)` if every term is odd, `Some(false)` if every term is
    /// even, `None` for mixed or zero expressions.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(TermKey::is_odd);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Flips the sign of the odd terms.
    pub fn grade_involution(&self) -> Expression {
        Expression {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), if k.is_odd() { -v } else { v.clone() }))
                .collect(),
        }
    }

    pub fn retain(&self, mut keep: impl FnMut(&TermKey) -> bool) -> Expression {
        Expression {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn generators(&self) -> BTreeSet<OddGenerator> {
        self.terms.keys().flat_map(|k| k.monomial.0.iter().copied()).collect()
    }

    pub fn atoms(&self) -> BTreeSet<FieldAtom> {
        self.terms.keys().flat_map(|k| k.fields.atoms().cloned()).collect()
    }

    pub fn contains_generator(&self, pred: impl Fn(&OddGenerator) -> bool) -> bool {
        self.terms.keys().any(|k| k.monomial.0.iter().any(&pred))
    }

    /// Rebuilds every term as the ordered product of its factors, replacing
    /// each factor for which `f` returns `Some`. Replacements must preserve
    /// parity for the result to be meaningful.
    pub fn map_factors(&self, mut f: impl FnMut(Factor<'_>) -> Option<Expression>) -> Expression {
        let mut out = Expression::zero();
        for (key, coeff) in &self.terms {
            let mut acc = Expression::scalar(coeff.clone());
            let mut pending_even = Vec::new();
            let mut pending_word = Vec::new();
            let factors = key
                .fields
                .even
                .iter()
                .map(Factor::Even)
                .chain(key.monomial.0.iter().map(|&g| Factor::Gen(g)))
                .chain(key.fields.odd.iter().map(Factor::OddField));
            for factor in factors {
                match f(factor) {
                    None => match factor {
                        Factor::Even(a) => pending_even.push(a.clone()),
                        Factor::Gen(g) => pending_word.push(OddSymbol::Gen(g)),
                        Factor::OddField(a) => pending_word.push(OddSymbol::Field(a.clone())),
                    },
                    Some(image) => {
                        if !pending_even.is_empty() || !pending_word.is_empty() {
                            let lit = Expression::from_parts(
                                Scalar::one(),
                                std::mem::take(&mut pending_even),
                                &std::mem::take(&mut pending_word),
                            );
                            acc = acc.mul(&lit);
                        }
                        acc = acc.mul(&image);
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if !pending_even.is_empty() || !pending_word.is_empty() {
                acc = acc.mul(&Expression::from_parts(Scalar::one(), pending_even, &pending_word));
            }
            out.add_assign_ref(&acc);
        }
        out
    }
}

impl From<Scalar> for Expression {
    fn from(c: Scalar) -> Self {
        Expression::scalar(c)
    }
}

impl From<OddGenerator> for Expression {
    fn from(g: OddGenerator) -> Self {
        Expression::generator(g)
    }
}

impl From<FieldAtom> for Expression {
    fn from(a: FieldAtom) -> Self {
        Expression::atom(a)
    }
}

impl Add for &Expression {
    type Output = Expression;
    fn add(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for Expression {
    type Output = Expression;
    fn add(mut self, rhs: Expression) -> Expression {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Sub for &Expression {
    type Output = Expression;
    fn sub(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

impl Sub for Expression {
    type Output = Expression;
    fn sub(self, rhs: Expression) -> Expression {
        &self - &rhs
    }
}

impl Neg for &Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        -&self
    }
}

impl Mul for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Expression) -> Expression {
        Expression::mul(self, rhs)
    }
}

impl Mul<&Scalar> for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Scalar) -> Expression {
        self.scale(rhs)
    }
}

impl std::iter::Sum for Expression {
    fn sum<I: Iterator<Item = Expression>>(iter: I) -> Expression {
        iter.fold(Expression::zero(), |a, b| a + b)
    }
}

/// Deterministic serialization: `(coeff)*factor*…` joined by ` + `, in
/// (monomial, field word) order; `0` for the zero expression.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if k.word_len() + k.fields.even.len() > 0 {
                write!(f, "*{k}")?;
            }
        }
        Ok(())
    }
}
