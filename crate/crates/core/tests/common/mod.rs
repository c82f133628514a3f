//! Independent oracles used only by the integration tests.
#![allow(dead_code)]

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational value of a finite f64.
pub fn exact(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite")
}

/// Correctly rounded (nearest, ties to even) f64 of a rational, normal range only.
pub fn round_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let neg = q.is_negative();
    let num = q.numer().abs();
    let den = q.denom().clone();
    // Find e with 2^52 ≤ num/den·2^{-e} < 2^53.
    let mut e = num.bits() as i64 - den.bits() as i64 - 53;
    let scaled = |e: i64| -> (BigInt, BigInt) {
        if e >= 0 {
            (num.clone(), den.clone() << (e as usize))
        } else {
            (num.clone() << ((-e) as usize), den.clone())
        }
    };
    let lo = BigInt::one() << 52usize;
    let hi = BigInt::one() << 53usize;
    loop {
        let (n, d) = scaled(e);
        let q = &n / &d;
        if q < lo {
            e -= 1;
        } else if q >= hi {
            e += 1;
        } else {
            break;
        }
    }
    let (n, d) = scaled(e);
    let mut m = &n / &d;
    let r2 = (&n % &d) * 2u32;
    if r2 > d || (r2 == d && (&m % 2u32) == BigInt::one()) {
        m += 1u32;
    }
    let v = m.to_f64().unwrap() * 2f64.powi(e as i32);
    if neg {
        -v
    } else {
        v
    }
}

/// ₁F₁(a; b; z) summed in fixed point with `BITS` fractional bits from exact
/// rational inputs, stopping once the tail is below 2^-90 of the sum.
pub fn kummer_oracle(a: f64, b: f64, z: f64) -> f64 {
    kummer_oracle_rational(&exact(a), &exact(b), &exact(z))
}

pub fn kummer_oracle_rational(a: &BigRational, b: &BigRational, z: &BigRational) -> f64 {
    const BITS: usize = 700;
    let (an, ad) = (a.numer(), a.denom());
    let (bn, bd) = (b.numer(), b.denom());
    let (zn, zd) = (z.numer(), z.denom());
    let one = BigInt::one() << BITS;
    let mut term = one.clone();
    let mut sum = one.clone();
    let zf = z.to_f64().unwrap().abs();
    let af = a.to_f64().unwrap().abs();
    let tail_bits = 90u64;
    for n in 0u64..100_000 {
        let nb = BigInt::from(n);
        let num = &term * (an + &nb * ad) * zn * bd;
        let den = ad * zd * (bn + &nb * bd) * (&nb + 1u32);
        term = num / den;
        sum += &term;
        let past = (n as f64) > 2.0 * zf + af + 10.0;
        if past && (term.is_zero() || term.abs().bits() + tail_bits < sum.abs().bits()) {
            break;
        }
    }
    round_to_f64(&BigRational::new(sum, one))
}

/// Terminating ₁F₁(−n; b; z) summed exactly in rationals.
pub fn terminating_exact(n: u32, b: &BigRational, z: &BigRational) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 0..n {
        let kq = BigRational::from_integer(BigInt::from(k));
        let a = BigRational::from_integer(BigInt::from(-(n as i64)));
        term = term * (&a + &kq) * z / ((b + &kq) * (&kq + BigRational::one()));
        sum += &term;
    }
    sum
}

/// Γ(x) from Stirling's series at x + m ≥ 30 and the upward recurrence.
pub fn gamma_oracle(x: f64) -> f64 {
    let mut m = 0;
    while x + (m as f64) < 30.0 {
        m += 1;
    }
    let y = x + m as f64;
    let bern = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0];
    let mut lg = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * std::f64::consts::PI).ln();
    for (k, b) in bern.iter().enumerate() {
        let k2 = 2.0 * (k + 1) as f64;
        lg += b / (k2 * (k2 - 1.0) * y.powf(k2 - 1.0));
    }
    let mut prod = 1.0;
    for i in 0..m {
        prod *= x + i as f64;
    }
    lg.exp() / prod
}

/// F(x) = dawson(x) by RK4 on F′ = 1 − 2xF from F(0) = 0, with one Richardson step.
pub fn dawson_ode(x: f64) -> f64 {
    let run = |steps: usize| {
        let h = x / steps as f64;
        let f = |t: f64, y: f64| 1.0 - 2.0 * t * y;
        let mut y = 0.0;
        for i in 0..steps {
            let t = i as f64 * h;
            let k1 = f(t, y);
            let k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
            let k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
            let k4 = f(t + h, y + h * k3);
            y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        y
    };
    let coarse = run(4000);
    let fine = run(8000);
    (16.0 * fine - coarse) / 15.0
}

/// Five-point central second derivative with one Richardson level.
pub fn second_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

pub fn first_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

pub fn sign_of(q: &BigRational) -> Sign {
    q.numer().sign()
}
