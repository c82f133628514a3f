//! Independent numerical checks: a Dirichlet finite-difference eigensolver,
//! adaptive quadrature and Richardson-extrapolated finite differences.

mod eigen;
mod fd;
mod grid;
mod quadrature;
mod scan;

pub use eigen::{solve_dirichlet, solve_dirichlet_single, EigenResult, MAX_LEVELS};
pub(crate) use fd::{FIRST_STEP, SECOND_STEP};
pub use fd::{fd_derivative, fd_derivative_with, DerivOrder, Stencil};
pub use grid::GridSpec;
pub use quadrature::{quadrature, quadrature_tol};
pub use scan::first_sign_change;
