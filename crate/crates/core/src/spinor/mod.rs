//! Pauli matrices, two-spinor index gymnastics and the identities they obey.

mod contract;
mod identities;
mod tables;

pub use contract::{sum_mu, Chirality, Position, Spinor};
pub use identities::{
    dual_field_strength_identity_check, dual_field_strength_identity_check_with, verify_lorentz_identities,
    verify_pauli_identities, LorentzGenerators, Violation, ViolationReport,
};
pub use tables::{dn, mat_mul, mat_sub, trace, up, Eps4, Mat2, PauliTables, VIdx};
