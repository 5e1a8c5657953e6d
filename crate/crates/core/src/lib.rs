//! Exact symbolic N=1 superspace.
//!
//! Expressions over the Grassmann generators θ, θ̄, ζ, ζ̄ with exact
//! Gaussian-rational coefficients, superfield builders, super-Poincaré
//! differential operators, all-orders supertranslations and checkers for
//! the component transformation laws of the general and chiral multiplets.

pub mod grassmann;
pub mod latex;
pub mod laws;
pub mod random;
pub mod scalar;
pub mod spinor;
pub mod superspace;
