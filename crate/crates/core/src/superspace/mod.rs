//! Superfields, differential operators on superspace and finite
//! supertranslations.

pub mod fields;
mod operators;
mod superfield;
mod translate;

pub use operators::{
    anticommutator, apply_operator, apply_operator_in, commutator, sigma_bar_commutator, sigma_commutator,
    Coordinates, SuperOperator,
};
pub use superfield::{
    build_chiral_superfield, build_general_superfield, extract_components, reassemble, theta_coefficients,
    ChiralComponent, ChiralComponents, Component, Components, Superfield, SuperfieldKind,
};
pub use translate::{
    shift_coordinates, shift_spacetime, supertranslate, taylor_term, translate_expr, TranslateError,
    TranslationParams,
};
