use super::dd::Dd;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 20_000;

pub(crate) fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v == v.round()
}

/// Confluent hypergeometric function ₁F₁(a; b; z).
///
/// Terminating cases (a or b − a a non-positive integer) are summed in
/// double-double; negative arguments below −1 go through the Kummer
/// transformation so the summed series never alternates badly.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::Domain(format!("1F1({a}; {b}; {z}) needs finite arguments")));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::Domain(format!("1F1 undefined for b = {b}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let value = if is_nonpositive_integer(a) {
        terminating(a, b, z)
    } else if is_nonpositive_integer(b - a) {
        z.exp() * terminating(b - a, b, -z)
    } else if z < -1.0 {
        z.exp() * direct(b - a, b, -z)?
    } else {
        direct(a, b, z)?
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("1F1"))
    }
}

/// d/dz ₁F₁(a; b; z) = (a/b)·₁F₁(a+1; b+1; z).
pub fn kummer_1f1_dz(a: f64, b: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(b) {
        return Err(Error::Domain(format!("1F1 undefined for b = {b}")));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    Ok(a / b * kummer_1f1(a + 1.0, b + 1.0, z)?)
}

/// ₁F₁(a; b; x²), the only way closed forms in this crate reach the series.
pub fn kummer_1f1_sq(a: f64, b: f64, x: f64) -> Result<f64> {
    kummer_1f1(a, b, x * x)
}

/// ₁F₁(a; b; z) together with its first three z-derivatives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KummerJet {
    /// `d[k]` is the k-th derivative with respect to z.
    pub d: [f64; 4],
}

impl KummerJet {
    /// Derivatives up to `order` (≤ 3); the rest are left as NaN.
    pub fn at_sq(a: f64, b: f64, x: f64, order: usize) -> Result<KummerJet> {
        assert!(order <= 3, "jet order {order} > 3");
        let z = x * x;
        let mut d = [f64::NAN; 4];
        let mut coeff = 1.0;
        for (k, slot) in d.iter_mut().enumerate().take(order + 1) {
            let kf = k as f64;
            if k > 0 {
                coeff *= (a + kf - 1.0) / (b + kf - 1.0);
            }
            *slot = if coeff == 0.0 {
                0.0
            } else {
                coeff * kummer_1f1(a + kf, b + kf, z)?
            };
        }
        Ok(KummerJet { d })
    }
}

fn terminating(a: f64, b: f64, z: f64) -> f64 {
    let n = (-a) as usize;
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 0..n {
        let kf = k as f64;
        term = term
            .mul_f(a + kf)
            .mul_f(z)
            .div(Dd::from_sum(b, kf))
            .div(Dd::from_sum(kf + 1.0, 0.0));
        sum = sum.add(term);
    }
    sum.to_f64()
}

fn direct(a: f64, b: f64, z: f64) -> Result<f64> {
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut biggest = 1.0_f64;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * z / ((b + nf) * (nf + 1.0));
        term *= ratio;
        sum += term;
        biggest = biggest.max(term.abs());
        let settled = ratio.abs() < 1.0 && nf + 1.0 > -a;
        if settled && (term.abs() <= 1e-17 * sum.abs() || term.abs() <= 1e-30 * biggest) {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::Overflow("1F1"));
        }
    }
    Err(Error::NonConvergence(format!("1F1({a}; {b}; {z}) series")))
}
