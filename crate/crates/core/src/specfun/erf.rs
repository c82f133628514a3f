use super::kummer::kummer_1f1_sq;
use crate::error::{Error, Result};

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

// Beyond this the series route is replaced by the asymptotic expansion.
const ASYMPTOTIC_FROM: f64 = 10.0;

/// Error function. Saturates to ±1 once erfc drops below half an ulp of 1.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.abs() >= 6.0 {
        return x.signum();
    }
    TWO_OVER_SQRT_PI * x * (-x * x).exp() * kummer_1f1_sq(1.0, 1.5, x).expect("1F1(1;3/2) on |x|<6")
}

/// Dawson function F(x) = e^{−x²}∫₀ˣ e^{t²}dt = (√π/2)e^{−x²}erfi(x).
pub fn dawson(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.abs() > ASYMPTOTIC_FROM {
        return dawson_asymptotic(x);
    }
    x * (-x * x).exp() * kummer_1f1_sq(0.5, 1.5, x).expect("1F1(1/2;3/2) on |x|<=10")
}

/// Imaginary error function. Overflows (as an error, not infinity) near |x| ≈ 26.6.
pub fn erfi(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    let v = if x.abs() > ASYMPTOTIC_FROM {
        TWO_OVER_SQRT_PI * (x * x).exp() * dawson_asymptotic(x)
    } else {
        TWO_OVER_SQRT_PI * x * kummer_1f1_sq(0.5, 1.5, x)?
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("erfi"))
    }
}

// F(x) ~ 1/(2x) Σ (2k−1)!!/(2x²)^k, truncated at the smallest term.
fn dawson_asymptotic(x: f64) -> f64 {
    let w = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let next = term * (2 * k - 1) as f64 * w;
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum / (2.0 * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_anchored() {
        assert_eq!(dawson(0.0), 0.0);
        assert_eq!(erf(0.0), 0.0);
        assert_eq!(erfi(0.0).unwrap(), 0.0);
        for &x in &[0.3, 1.7, 4.0, 9.5, 12.0] {
            assert_eq!(erf(-x), -erf(x));
            assert_eq!(dawson(-x), -dawson(x));
            assert_eq!(erfi(-x).unwrap(), -erfi(x).unwrap());
        }
        assert!((erf(10.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_branch_meets_series() {
        let s = 10.0 * (-100.0_f64).exp() * kummer_1f1_sq(0.5, 1.5, 10.0).unwrap();
        let a = dawson_asymptotic(10.0);
        assert!((s - a).abs() < 1e-14 * s);
    }

    #[test]
    fn erfi_overflow() {
        assert!(erfi(26.0).is_ok());
        assert_eq!(erfi(27.0), Err(Error::Overflow("erfi")));
        assert_eq!(erfi(-27.0), Err(Error::Overflow("erfi")));
    }
}
