use crate::error::Result;
use crate::seeds::{Parity, ParitySolution};

/// W(R₁, R₂) = x^k·w(z) for R = x^s·₁F₁(·; s+½; z), z = x².
///
/// With D = M₁N₂ − N₁M₂ and Π = M₁M₂ (N = dM/dz) the bracket is
/// (s₂ − s₁)Π + 2zD; for equal parities the leading z is pulled into x^k.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct PairShape {
    pub x_power: i32,
    sigma: f64,
    kappa: f64,
    lambda: f64,
}

impl PairShape {
    pub fn of(p1: Parity, p2: Parity) -> PairShape {
        let (s1, s2) = (p1.power(), p2.power());
        if s1 == s2 {
            PairShape { x_power: s1 + s2 + 1, sigma: 0.0, kappa: 0.0, lambda: 2.0 }
        } else {
            PairShape { x_power: 0, sigma: (s2 - s1) as f64, kappa: 2.0, lambda: 0.0 }
        }
    }
}

/// w and its first two z-derivatives (requires jets up to order 3 when `order` = 2).
pub(crate) fn reduced_pair(r1: &ParitySolution, r2: &ParitySolution, x: f64, order: usize) -> Result<[f64; 3]> {
    let shape = PairShape::of(r1.parity, r2.parity);
    let j1 = r1.jet(x, order + 1)?.d;
    let j2 = r2.jet(x, order + 1)?.d;
    let z = x * x;
    let (m1, n1, m2, n2) = (j1[0], j1[1], j2[0], j2[1]);
    let c = r1.scale * r2.scale;
    let d = m1 * n2 - n1 * m2;
    let pi = m1 * m2;
    let w = shape.sigma * pi + shape.kappa * z * d + shape.lambda * d;
    let mut out = [c * w, f64::NAN, f64::NAN];
    if order >= 1 {
        let (p1, p2) = (j1[2], j2[2]);
        let dz = m1 * p2 - p1 * m2;
        let pi_z = n1 * m2 + m1 * n2;
        out[1] = c * (shape.sigma * pi_z + shape.kappa * (d + z * dz) + shape.lambda * dz);
        if order >= 2 {
            let (q1, q2) = (j1[3], j2[3]);
            let dzz = n1 * p2 + m1 * q2 - q1 * m2 - p1 * n2;
            let pi_zz = p1 * m2 + 2.0 * n1 * n2 + m1 * p2;
            out[2] = c * (shape.sigma * pi_zz + shape.kappa * (2.0 * dz + z * dzz) + shape.lambda * dzz);
        }
    }
    Ok(out)
}

/// W(R₁, R₂) at x including the x-power.
pub(crate) fn pair_value(r1: &ParitySolution, r2: &ParitySolution, x: f64) -> f64 {
    let k = PairShape::of(r1.parity, r2.parity).x_power;
    match reduced_pair(r1, r2, x, 0) {
        Ok(w) => x.powi(k) * w[0],
        Err(_) => f64::NAN,
    }
}

/// d²/dx² ln f(x²) from f, f_z, f_zz.
pub(crate) fn log_second_x(f: f64, fz: f64, fzz: f64, x: f64) -> f64 {
    let z = x * x;
    let r = fz / f;
    (2.0 * fz + 4.0 * z * fzz) / f - 4.0 * z * r * r
}

/// Factored Wronskian W(u₁,u₂)(x) = x^k·e^{−c·x²}·w(x) of two seeds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WronskianForm {
    pub x_power: i32,
    /// c in e^{−c·x²}; always 1 for a pair of oscillator seeds.
    pub gaussian_exponent: f64,
    pub(crate) first: ParitySolution,
    pub(crate) second: ParitySolution,
}

impl WronskianForm {
    pub(crate) fn new(first: ParitySolution, second: ParitySolution) -> WronskianForm {
        WronskianForm {
            x_power: PairShape::of(first.parity, second.parity).x_power,
            gaussian_exponent: 1.0,
            first,
            second,
        }
    }

    /// The reduced factor w(x).
    pub fn w(&self, x: f64) -> f64 {
        reduced_pair(&self.first, &self.second, x, 0).map(|w| w[0]).unwrap_or(f64::NAN)
    }

    /// The full Wronskian u₁u₂′ − u₁′u₂.
    pub fn eval(&self, x: f64) -> f64 {
        x.powi(self.x_power) * (-self.gaussian_exponent * x * x).exp() * self.w(x)
    }
}
