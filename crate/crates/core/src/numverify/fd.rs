use crate::error::{Error, Result};

pub(crate) const FIRST_STEP: f64 = 1e-4;
pub(crate) const SECOND_STEP: f64 = 5e-3;
// Below this fraction of the nominal step the stencil is considered collapsed.
const MIN_SHRINK: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivOrder {
    First,
    Second,
}

/// Where a finite-difference stencil may go.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stencil {
    /// Points at or below this bound are never evaluated.
    pub lower: f64,
    /// Length scale of `f` near x; the step is a fixed fraction of it.
    /// Defaults to max(1, |x|).
    pub scale: Option<f64>,
}

impl Default for Stencil {
    fn default() -> Self {
        Stencil { lower: f64::NEG_INFINITY, scale: None }
    }
}

impl Stencil {
    /// Confined to x > 0 with the default scale.
    pub fn above_zero() -> Self {
        Stencil { lower: 0.0, scale: None }
    }

    /// Confined to x > 0 with scale |x|, for functions with 1/x-type behaviour.
    pub fn radial(x: f64) -> Self {
        Stencil { lower: 0.0, scale: Some(x.abs()) }
    }
}

/// Central difference with one Richardson level, h = c·max(1, |x|).
pub fn fd_derivative<F: Fn(f64) -> f64>(f: F, x: f64, order: DerivOrder) -> Result<f64> {
    fd_derivative_with(f, x, order, Stencil::default())
}

pub fn fd_derivative_with<F: Fn(f64) -> f64>(f: F, x: f64, order: DerivOrder, st: Stencil) -> Result<f64> {
    let c = match order {
        DerivOrder::First => FIRST_STEP,
        DerivOrder::Second => SECOND_STEP,
    };
    let scale = st.scale.unwrap_or_else(|| x.abs().max(1.0));
    let nominal = c * scale;
    let mut h = nominal;
    if x - h <= st.lower {
        h = 0.9 * (x - st.lower);
    }
    if !(h > MIN_SHRINK * nominal) {
        return Err(Error::Stencil { x });
    }
    let d = |h: f64| match order {
        DerivOrder::First => (f(x + h) - f(x - h)) / (2.0 * h),
        DerivOrder::Second => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
    };
    Ok((4.0 * d(0.5 * h) - d(h)) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_cases() {
        let d = fd_derivative(f64::sin, 1.0, DerivOrder::First).unwrap();
        assert!((d - 1f64.cos()).abs() < 1e-9);
        let d2 = fd_derivative(|x| x * x * x, 2.0, DerivOrder::Second).unwrap();
        assert!((d2 - 12.0).abs() < 1e-9);
    }

    #[test]
    fn shrinks_then_refuses_near_bound() {
        let f = |x: f64| x.ln();
        let d = fd_derivative_with(f, 1e-3, DerivOrder::First, Stencil::radial(1e-3)).unwrap();
        assert!((d - 1e3).abs() < 1e-6);
        assert!(matches!(
            fd_derivative_with(f, 1e-12, DerivOrder::Second, Stencil::above_zero()),
            Err(Error::Stencil { .. })
        ));
    }
}
