mod common;

use common::{dawson_ode, exact, gamma_oracle, kummer_oracle, round_to_f64, terminating_exact};
use darboux_osc::specfun::{dawson, erf, erfi, gamma, kummer_1f1, kummer_1f1_dz, kummer_1f1_sq, KummerJet};
use darboux_osc::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn kummer_trivial_values() {
    assert_eq!(kummer_1f1(0.7, 1.3, 0.0).unwrap(), 1.0);
    assert!(rel(kummer_1f1(1.5, 1.5, 4.0).unwrap(), 54.598150033144236) < 1e-15);
    assert_eq!(kummer_1f1(-1.0, 1.5, 2.25).unwrap(), -0.5);
    assert!(matches!(kummer_1f1(0.5, -2.0, 1.0), Err(Error::Domain(_))));
    assert!(matches!(kummer_1f1(0.5, 0.5, 800.0), Err(Error::Overflow(_))));
}

#[test]
fn kummer_against_oracle() {
    let want = kummer_oracle(0.25, 0.5, 9.0);
    assert!(rel(kummer_1f1(0.25, 0.5, 9.0).unwrap(), want) <= 1e-12);
    // A spread of seed-like arguments, including the large-z regime.
    for &(a, b, z) in &[
        (0.375, 1.5, 1.0),
        (-0.8, 0.5, 25.0),
        (-2.3, 1.5, 64.0),
        (1.7, 0.5, 100.0),
        (-3.6, 0.5, 144.0),
        (0.9, 1.5, -30.0),
        (-1.4, 1.5, -150.0),
        (2.2, 2.5, 199.0),
    ] {
        let want = kummer_oracle(a, b, z);
        let got = kummer_1f1(a, b, z).unwrap();
        assert!(rel(got, want) <= 1e-12, "1F1({a}; {b}; {z}) = {got:e}, oracle {want:e}");
    }
}

#[test]
fn kummer_derivative() {
    assert!(rel(kummer_1f1_dz(1.5, 1.5, 1.0).unwrap(), std::f64::consts::E) < 1e-15);
    assert_eq!(kummer_1f1_dz(0.3, 0.6, 0.0).unwrap(), 0.5);
    // Central differences of the oracle, refined until two steps agree.
    let f = |z| kummer_oracle(0.25, 0.5, z);
    let (mut h, mut prev) = (0.1, f64::NAN);
    let mut fd = 0.0;
    for _ in 0..8 {
        fd = common::first_diff(f, 4.0, h);
        if (fd - prev).abs() <= 1e-10 * fd.abs() {
            break;
        }
        prev = fd;
        h *= 0.5;
    }
    assert!(rel(kummer_1f1_dz(0.25, 0.5, 4.0).unwrap(), fd) <= 1e-10);
}

#[test]
fn jet_matches_contiguous_derivatives() {
    let j = KummerJet::at_sq(-0.4, 1.5, 1.3, 3).unwrap();
    let z = 1.3f64 * 1.3;
    assert_eq!(j.d[0], kummer_1f1_sq(-0.4, 1.5, 1.3).unwrap());
    assert!(rel(j.d[1], kummer_1f1_dz(-0.4, 1.5, z).unwrap()) < 1e-14);
    let d2 = -0.4 / 1.5 * kummer_1f1_dz(0.6, 2.5, z).unwrap();
    assert!(rel(j.d[2], d2) < 1e-14);
}

#[test]
fn erf_family() {
    assert_eq!(dawson(0.0), 0.0);
    assert!((erf(10.0) - 1.0).abs() <= 1e-12);
    let want = dawson_ode(1.0);
    assert!(rel(dawson(1.0), want) <= 1e-12, "{} vs {}", dawson(1.0), want);
    for x in [-3.5, -0.2, 0.7, 2.0, 6.0] {
        assert_eq!(erf(-x), -erf(x));
        assert_eq!(erfi(-x).unwrap(), -erfi(x).unwrap());
        let via_erfi = 0.5 * std::f64::consts::PI.sqrt() * (-x * x).exp() * erfi(x).unwrap();
        assert!(rel(dawson(x), via_erfi) <= 1e-12, "x = {x}");
    }
    assert!(matches!(erfi(27.0), Err(Error::Overflow(_))));
}

#[test]
fn gamma_values() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!(rel(gamma(0.5).unwrap(), std::f64::consts::PI.sqrt()) < 1e-14);
    assert!(rel(gamma(-1.25).unwrap(), gamma_oracle(-1.25)) <= 1e-12);
    for x in [0.1, 3.7, 12.25, 29.5, 49.0] {
        assert!(rel(gamma(x).unwrap(), gamma_oracle(x)) <= 1e-12, "x = {x}");
    }
    assert!(matches!(gamma(-3.0), Err(Error::Pole(_))));
    assert!(matches!(gamma(0.0), Err(Error::Pole(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // With 0 < a < b both a and b − a are positive, so neither side has real zeros
    // and plain relative error is meaningful.
    #[test]
    fn prop_kummer_transformation(a in 0.05f64..4.0, gap in 0.05f64..4.0, z in -60.0f64..60.0) {
        let b = a + gap;
        let lhs = kummer_1f1(a, b, z).unwrap();
        let rhs = z.exp() * kummer_1f1(b - a, b, -z).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "1F1({}; {}; {}) = {:e} vs {:e}", a, b, z, lhs, rhs);
    }

    #[test]
    fn prop_dawson_ode(x in -5.0f64..5.0) {
        let d = common::first_diff(dawson, x, 1e-3);
        prop_assert!((d + 2.0 * x * dawson(x) - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn prop_erf_slope(x in -5.0f64..5.0) {
        let d = common::first_diff(erf, x, 1e-3);
        let want = 2.0 / std::f64::consts::PI.sqrt() * (-x * x).exp();
        prop_assert!((d - want).abs() <= 1e-10);
    }

    #[test]
    fn prop_terminating_series_exact(n in 0u32..=10, half in 0i64..4, znum in -4096i64..4096) {
        // Rational z = znum/256 and b = half + 1/2 are exact doubles.
        let z = BigRational::new(BigInt::from(znum), BigInt::from(256));
        let b = BigRational::new(BigInt::from(2 * half + 1), BigInt::from(2));
        let want = round_to_f64(&terminating_exact(n, &b, &z));
        let got = kummer_1f1(-(n as f64), half as f64 + 0.5, znum as f64 / 256.0).unwrap();
        prop_assert_eq!(got, want);
        prop_assert_eq!(exact(got), exact(want));
    }
}
