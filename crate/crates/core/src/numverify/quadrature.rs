use crate::error::{Error, Result};
use std::sync::OnceLock;

const ORDER: usize = 10;
const MAX_DEPTH: u32 = 40;
const DEFAULT_TOL: f64 = 1e-10;

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
fn rule() -> &'static [(f64, f64); ORDER] {
    static RULE: OnceLock<[(f64, f64); ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER as f64;
        let mut out = [(0.0, 0.0); ORDER];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=ORDER {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        out
    })
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    r * rule().iter().map(|&(x, w)| w * f(c + r * x)).sum::<f64>()
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = panel(f, a, m);
    let right = panel(f, m, b);
    let both = left + right;
    if !both.is_finite() {
        return Err(Error::Domain(format!("integrand not finite on [{a}, {b}]")));
    }
    if (both - whole).abs() <= tol {
        return Ok(both);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NonConvergence(format!("quadrature on [{a}, {b}]")));
    }
    Ok(adapt(f, a, m, left, 0.5 * tol, depth + 1)? + adapt(f, m, b, right, 0.5 * tol, depth + 1)?)
}

/// Adaptive Gauss-Legendre integral of `f` over [a, b], absolute tolerance 1e-10.
pub fn quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    quadrature_tol(f, a, b, DEFAULT_TOL)
}

/// As [`quadrature`] with an explicit absolute tolerance.
pub fn quadrature_tol<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    // A few fixed panels first so narrow features are not missed by the first estimate.
    const PANELS: usize = 16;
    let w = (b - a) / PANELS as f64;
    let mut total = 0.0;
    for i in 0..PANELS {
        let lo = a + w * i as f64;
        let hi = if i + 1 == PANELS { b } else { lo + w };
        total += adapt(&f, lo, hi, panel(&f, lo, hi), tol / PANELS as f64, 0)?;
    }
    Ok(total)
}
