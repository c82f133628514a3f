use crate::error::{Error, Result};
use std::f64::consts::PI;

// Lanczos approximation, g = 7, nine terms.
const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real x, via reflection below 1/2.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma(NaN)".into()));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(x));
    }
    if x == x.floor() && x <= 171.0 {
        // (x−1)! as a running product, exact through 22!.
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    let v = if x < 0.5 {
        PI / (sin_pi(x) * lanczos(1.0 - x))
    } else {
        lanczos(x)
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("gamma"))
    }
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    // Split the power so t^(x+1/2) does not overflow before e^{-t} pulls it back.
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * ((-t).exp() * half) * acc
}

// sin(πx) with exact argument reduction.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}
