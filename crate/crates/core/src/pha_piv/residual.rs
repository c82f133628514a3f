use super::solution::{PivSolution, G_ZERO};
use crate::error::{Error, Result};
use crate::numverify::{fd_derivative_with, first_sign_change, DerivOrder, Stencil, FIRST_STEP, SECOND_STEP};

/// Points with |g/g′| below this and |g| above `POLE_G` are inside a pole neighbourhood.
const POLE_DISTANCE: f64 = 1e-3;
const POLE_G: f64 = 10.0;
/// Accepted residual relative to max(1, |g″|).
pub const RESIDUAL_TOL: f64 = 1e-6;

/// One residual evaluation with the finite-difference derivatives it used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualPoint {
    pub x: f64,
    pub g: f64,
    pub dg: f64,
    pub ddg: f64,
    pub residual: f64,
}

impl ResidualPoint {
    /// |residual| / max(1, |g″|).
    pub fn relative(&self) -> f64 {
        self.residual.abs() / self.ddg.abs().max(1.0)
    }
}

/// g″ − [g′²/(2g) + (3/2)g³ + 4xg² + 2(x² − a)g + b/g].
pub fn piv_equation(a: f64, b: f64, x: f64, g: f64, dg: f64, ddg: f64) -> f64 {
    ddg - (dg * dg / (2.0 * g) + 1.5 * g * g * g + 4.0 * x * g * g + 2.0 * (x * x - a) * g + b / g)
}

// Step ladder for the derivatives: scales 4x, 2x, x, ... halved this many times.
const LADDER: i32 = 20;
// Assumed relative rounding noise in g, the accuracy the special functions promise.
const G_NOISE: f64 = 1e-12;

/// Richardson-extrapolated difference at a ladder of steps h. Each level is scored by
/// the spread to its two neighbours (truncation) plus the rounding bound ~ δ/hⁿ, and
/// the best-scored value is kept. Large steps lose near poles, small ones to noise.
fn settled_derivative<F: Fn(f64) -> f64>(g: F, x: f64, order: DerivOrder) -> Result<f64> {
    let delta = G_NOISE * g(x).abs().max(1.0);
    let (c, pow, amp) = match order {
        DerivOrder::First => (FIRST_STEP, 1, 2.0),
        DerivOrder::Second => (SECOND_STEP, 2, 22.0),
    };
    let level = |k: i32| {
        let scale = 4.0 * x * 0.5f64.powi(k);
        let st = Stencil { lower: 0.0, scale: Some(scale) };
        let d = fd_derivative_with(&g, x, order, st).ok().filter(|d| d.is_finite())?;
        Some((d, amp * delta / (c * scale).powi(pow)))
    };
    let ds: Vec<Option<(f64, f64)>> = (0..LADDER).map(level).collect();
    let mut best: Option<(f64, f64)> = None;
    for w in ds.windows(3) {
        let [Some((l, _)), Some((m, noise)), Some((r, _))] = [w[0], w[1], w[2]] else { continue };
        let score = (m - l).abs().max((r - m).abs()) + noise;
        if best.is_none_or(|(s, _)| score < s) {
            best = Some((score, m));
        }
    }
    best.map(|(_, d)| d).ok_or(Error::NearSingularity { x })
}

/// Residual of an arbitrary function g at x, with finite-difference derivatives.
pub fn residual_of<F: Fn(f64) -> f64>(g: F, a: f64, b: f64, x: f64) -> Result<ResidualPoint> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("PIV residual needs x > 0, got {x}")));
    }
    let gx = g(x);
    if !gx.is_finite() {
        return Err(Error::NearSingularity { x });
    }
    if gx.abs() <= G_ZERO {
        return Err(Error::NearZero { x });
    }
    let probe = fd_derivative_with(&g, x, DerivOrder::First, Stencil { lower: 0.0, scale: Some(x) })?;
    if gx.abs() > POLE_G && (gx / probe).abs() < POLE_DISTANCE {
        return Err(Error::NearSingularity { x });
    }
    let dg = settled_derivative(&g, x, DerivOrder::First)?;
    let ddg = settled_derivative(&g, x, DerivOrder::Second)?;
    Ok(ResidualPoint { x, g: gx, dg, ddg, residual: piv_equation(a, b, x, gx, dg, ddg) })
}

pub fn piv_residual_point(sol: &PivSolution, x: f64) -> Result<ResidualPoint> {
    residual_of(|t| sol.g(t), sol.a, sol.b, x)
}

pub fn piv_residual(sol: &PivSolution, x: f64) -> Result<f64> {
    piv_residual_point(sol, x).map(|p| p.residual)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularKind {
    Pole,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingularPoint {
    pub x: f64,
    pub kind: SingularKind,
}

/// Sign changes of g on [lo, hi] sampled at n points: zeros where g is small after
/// bisection, poles where it is large. Even-order zeros and poles are not seen.
pub fn singular_points<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, n: usize) -> Vec<SingularPoint> {
    let step = (hi - lo) / (n - 1) as f64;
    let mut out = Vec::new();
    let mut start = lo;
    while start < hi {
        let m = (((hi - start) / step).ceil() as usize + 1).max(2);
        let Some(x) = first_sign_change(&g, start, hi, m) else { break };
        let v = g(x);
        let kind = if v.is_finite() && v.abs() <= 1.0 { SingularKind::Zero } else { SingularKind::Pole };
        out.push(SingularPoint { x, kind });
        start = x + 1e-9 * x.abs().max(1.0);
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResidualSummary {
    pub max_relative: f64,
    pub worst_x: f64,
    pub evaluated: usize,
    pub excluded: usize,
}

/// Largest relative residual over `xs`, skipping points within `exclusion` of a sign
/// change of g and points rejected as near-zero or near-singular.
pub fn residual_sweep<F: Fn(f64) -> f64>(g: F, a: f64, b: f64, xs: &[f64], exclusion: f64) -> Result<ResidualSummary> {
    let (lo, hi) = xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &x| (l.min(x), h.max(x)));
    let sing = singular_points(&g, lo, hi, 4001);
    let mut s = ResidualSummary::default();
    for &x in xs {
        if sing.iter().any(|p| (p.x - x).abs() < exclusion) {
            s.excluded += 1;
            continue;
        }
        match residual_of(&g, a, b, x) {
            Ok(p) => {
                s.evaluated += 1;
                let r = p.relative();
                if !(r <= s.max_relative) {
                    s.max_relative = r;
                    s.worst_x = x;
                }
            }
            Err(Error::NearZero { .. } | Error::NearSingularity { .. }) => s.excluded += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(s)
}
