use super::solution::PivSolution;
use crate::error::{Error, Result};
use crate::numverify::{fd_derivative_with, DerivOrder, Stencil};

/// The potential and the auxiliary functions f, h determined by a PIV solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reconstruction {
    pub solution: PivSolution,
    pub epsilon1: f64,
}

impl Reconstruction {
    fn g_and_slope(&self, x: f64) -> Result<(f64, f64)> {
        let g = |t: f64| self.solution.g(t);
        let gx = g(x);
        if !gx.is_finite() {
            return Err(Error::Pole(x));
        }
        let dg = fd_derivative_with(g, x, DerivOrder::First, Stencil { lower: 0.0, scale: Some(x.min(1.0)) })?;
        if !dg.is_finite() {
            return Err(Error::Pole(x));
        }
        Ok((gx, dg))
    }

    /// 𝕍 = x²/2 − g′/2 + g²/2 + xg + ε₁ − ½.
    pub fn potential(&self, x: f64) -> Result<f64> {
        let (g, dg) = self.g_and_slope(x)?;
        Ok(0.5 * x * x - 0.5 * dg + 0.5 * g * g + x * g + self.epsilon1 - 0.5)
    }

    /// f = x + g.
    pub fn f(&self, x: f64) -> Result<f64> {
        let g = self.solution.g(x);
        if g.is_finite() {
            Ok(x + g)
        } else {
            Err(Error::Pole(x))
        }
    }

    /// h = g′/2 − g²/2 − 2xg − x² + a.
    pub fn h(&self, x: f64) -> Result<f64> {
        let (g, dg) = self.g_and_slope(x)?;
        Ok(0.5 * dg - 0.5 * g * g - 2.0 * x * g - x * x + self.solution.a)
    }
}

pub fn reconstruct_potential_from_g(solution: &PivSolution, epsilon1: f64) -> Reconstruction {
    Reconstruction { solution: *solution, epsilon1 }
}
