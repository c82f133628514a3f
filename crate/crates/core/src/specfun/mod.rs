//! Real special functions: ₁F₁ with derivatives, erf/erfi/Dawson and Γ.

mod dd;
mod erf;
mod gamma;
mod kummer;

pub use erf::{dawson, erf, erfi};
pub use gamma::gamma;
pub use kummer::{kummer_1f1, kummer_1f1_dz, kummer_1f1_sq, KummerJet};
pub(crate) use kummer::is_nonpositive_integer;
