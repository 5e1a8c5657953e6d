//! Graded-commutative algebra kernel.
//!
//! An [`Expression`] is a finite sum of terms `c · (even atoms) · w`, where
//! `w` is a graded word of odd generators followed by odd field atoms. Words
//! are kept sorted under the global order documented on [`GenKind`] and
//! [`OddSymbol`], with the sorting sign folded into `c`; a repeated odd letter
//! makes the term vanish. Equality of expressions is equality of term maps.

mod calculus;
mod expr;
mod symbols;
mod word;

pub use calculus::{
    conjugate, drop_generators, grassmann_derive, spacetime_derive, substitute_atoms,
    substitute_generators, substitute_shift, truncate_degree, ConjugationMap, GrassmannError,
    ShiftTarget,
};
pub use expr::{Expression, Factor, FieldWord, GrassmannMonomial, TermKey};
pub use symbols::{FieldAtom, GenKind, OddGenerator, OddSymbol, Slot, SlotKind, Symbol};
pub use word::{canonicalize, canonicalize_generators, canonicalize_symbols, Canonical};
