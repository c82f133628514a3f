//! Supersymmetric partners of the harmonic oscillator on the half-line x > 0.
//!
//! `specfun` supplies ₁F₁ and friends, `seeds` the transformation functions,
//! `susy` the first- and second-order partner potentials with their spectra,
//! and `pha_piv` the Painlevé IV solutions carried by the third-order ladder
//! operators of those partners. `numverify` holds the numerical oracles.

pub mod error;
pub mod numverify;
pub mod pha_piv;
pub mod seeds;
pub mod specfun;
pub mod susy;

pub use error::{Error, Result};
