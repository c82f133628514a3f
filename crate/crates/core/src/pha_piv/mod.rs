//! Third-order ladder structure of the partners and the Painlevé IV solutions
//! g = −x − [ln φ]′ built from its extremal states φ.

mod extremal;
mod params;
mod reconstruct;
pub mod reference;
mod residual;
mod solution;

pub use extremal::{extremal_states_first, extremal_states_second, ExtremalState, Provenance};
pub use params::{closed_parameters, eigen_triple, parameters_for, permuted, piv_parameters};
pub use reconstruct::{reconstruct_potential_from_g, Reconstruction};
pub use residual::{
    piv_equation, piv_residual, piv_residual_point, residual_of, residual_sweep, singular_points, ResidualPoint,
    ResidualSummary, SingularKind, SingularPoint, RESIDUAL_TOL,
};
pub use solution::{closed_form_g, piv_from_state, undetermined_reason, PivSolution, EPSILON_ENVELOPE, G_ZERO};
