mod common;

use darboux_osc::numverify::quadrature_tol;
use darboux_osc::seeds::{h0_eigenfunction, make_seed, riccati_residual, EigenKind, Parity, SeedKind, SeedSolution};
use darboux_osc::Error;
use proptest::prelude::*;

fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (1..=n).map(|i| (a + (b - a) * i as f64 / n as f64).exp()).collect()
}

/// −½u″ + (x²/2 − ε)u over the local scale |u|(1 + x²/2 + |ε|), with u″ = u(α′ + α²)
/// assembled from the series derivatives.
fn schrodinger_relative(seed: &SeedSolution, x: f64) -> f64 {
    let u = seed.value(x);
    let alpha = seed.log_deriv(x);
    let ddu = u * (seed.log_deriv_prime(x) + alpha * alpha);
    let r = -0.5 * ddu + (0.5 * x * x - seed.epsilon) * u;
    r.abs() / (u.abs() * (1.0 + 0.5 * x * x + seed.epsilon.abs()))
}

/// The same residual with u″ from Richardson differences of u alone.
fn schrodinger_fd(seed: &SeedSolution, x: f64) -> f64 {
    let ddu = common::second_diff(|t| seed.value(t), x, 4e-3 * x.min(1.0));
    let u = seed.value(x);
    let r = -0.5 * ddu + (0.5 * x * x - seed.epsilon) * u;
    r.abs() / (u.abs() * (1.0 + 0.5 * x * x + seed.epsilon.abs()) + ddu.abs())
}

// Seeds from every regime: nodeless, with nodes, Gaussian-like and general.
fn seeds() -> Vec<SeedSolution> {
    let mut v = Vec::new();
    for eps in [-3.7, -0.5, 0.1, 0.25, 0.37, 0.5, 1.1, 1.5, 2.6, 3.0, 5.3] {
        v.push(make_seed(eps, SeedKind::Odd).unwrap());
        v.push(make_seed(eps, SeedKind::Even).unwrap());
    }
    for (eps, nu) in [(0.25, 0.3), (-1.2, -0.45), (0.8, 1.0)] {
        v.push(make_seed(eps, SeedKind::General { nu }).unwrap());
    }
    v
}

#[test]
fn seeds_solve_schrodinger() {
    let xs = log_grid(2000, 1e-3, 8.0);
    for s in seeds() {
        let mut worst = 0.0_f64;
        for &x in &xs {
            // Zeros of u make the relative form meaningless; skip their neighbourhood.
            if seed_near_zero(&s, x) {
                continue;
            }
            worst = worst.max(schrodinger_relative(&s, x));
        }
        assert!(worst <= 1e-8, "eps {} {:?}: {worst:e}", s.epsilon, s.kind);
        let fd = (1..=80)
            .map(|i| 0.1 * i as f64)
            .filter(|&x| !seed_near_zero(&s, x))
            .map(|x| schrodinger_fd(&s, x))
            .fold(0.0, f64::max);
        assert!(fd <= 1e-7, "eps {} {:?}: difference form {fd:e}", s.epsilon, s.kind);
    }
}

fn seed_near_zero(s: &SeedSolution, x: f64) -> bool {
    let h = 2e-2 * x.max(0.05);
    let (l, m, r) = (s.value(x - h), s.value(x), s.value(x + h));
    l.signum() != m.signum() || r.signum() != m.signum()
}

#[test]
fn eigenfunctions_solve_schrodinger() {
    let xs = log_grid(2000, 1e-3, 8.0);
    for n in 0..=6 {
        for (kind, seed_kind) in [(EigenKind::Physical, SeedKind::Odd), (EigenKind::Npe, SeedKind::Even)] {
            let e = h0_eigenfunction(n, kind).unwrap();
            let s = make_seed(e.energy, seed_kind).unwrap();
            for &x in &xs {
                // Same function up to the normalization constant.
                let scaled = e.norm_constant * s.value(x);
                assert!((e.value(x) - scaled).abs() <= 1e-14 * scaled.abs().max(1e-300), "n {n} x {x}");
                if !seed_near_zero(&s, x) {
                    assert!(schrodinger_relative(&s, x) <= 1e-8, "{kind:?} n {n} x {x}");
                }
            }
        }
    }
}

#[test]
fn closed_form_examples() {
    let odd = make_seed(1.5, SeedKind::Odd).unwrap();
    let even = make_seed(0.5, SeedKind::Even).unwrap();
    for x in [0.2, 1.0, 3.3] {
        assert_eq!(odd.value(x), x * (-0.5 * x * x).exp());
        assert_eq!(even.value(x), (-0.5 * x * x).exp());
    }
    assert_eq!(odd.value(0.0), 0.0);
    assert_eq!(even.value(0.0), 1.0);
    // ε = 1/4 odd: a = (3 − 2ε)/4 = 5/8.
    let quarter = make_seed(0.25, SeedKind::Odd).unwrap();
    let want = (-0.5f64).exp() * common::kummer_oracle(0.625, 1.5, 1.0);
    assert!((quarter.value(1.0) - want).abs() <= 1e-13 * want);
    // Past the evaluation limit the Gaussian wins and the flag is raised.
    let far = even.sample(12.5);
    assert!(far.underflow && far.value == 0.0);
    assert!(!even.sample(11.0).underflow);
}

#[test]
fn parity_under_reflection() {
    for eps in [-2.2, 0.3, 1.9] {
        let odd = make_seed(eps, SeedKind::Odd).unwrap();
        let even = make_seed(eps, SeedKind::Even).unwrap();
        assert_eq!(odd.parity(), Some(Parity::Odd));
        assert_eq!(even.parity(), Some(Parity::Even));
        for x in [0.1, 0.9, 2.7, 6.0] {
            assert_eq!(odd.value(x) + odd.value(-x), 0.0);
            assert_eq!(even.value(x) - even.value(-x), 0.0);
        }
    }
}

#[test]
fn general_seed_reduces_to_even() {
    let g = make_seed(0.3, SeedKind::General { nu: 0.0 }).unwrap();
    let e = make_seed(0.3, SeedKind::Even).unwrap();
    assert_eq!(g.parity(), None);
    for x in [0.2, 1.4, 4.0] {
        assert_eq!(g.value(x), e.value(x));
    }
    // Γ((3−2ε)/4) has a pole at ε = 3/2.
    assert!(matches!(make_seed(1.5, SeedKind::General { nu: 1.0 }), Err(Error::Domain(_))));
    assert!(make_seed(f64::NAN, SeedKind::Odd).is_err());
}

#[test]
fn riccati_examples() {
    let even = make_seed(0.5, SeedKind::Even).unwrap();
    assert!(riccati_residual(&even, 1.0).unwrap().abs() <= 1e-10);
    let odd = make_seed(1.5, SeedKind::Odd).unwrap();
    assert!(riccati_residual(&odd, 2.0).unwrap().abs() <= 1e-10);
    let s = make_seed(0.37, SeedKind::Even).unwrap();
    assert!(riccati_residual(&s, 1.7).unwrap().abs() <= 1e-8);
    // α against differences of ln u, α′ against differences of α.
    let fd_alpha = common::first_diff(|t| s.value(t).abs().ln(), 1.7, 1e-3);
    assert!((s.log_deriv(1.7) - fd_alpha).abs() <= 1e-9);
    let fd_dalpha = common::first_diff(|t| s.log_deriv(t), 1.7, 1e-3);
    assert!((s.log_deriv_prime(1.7) - fd_dalpha).abs() <= 1e-9);
    assert!(matches!(riccati_residual(&s, 0.0), Err(Error::Domain(_))));
    // ε = 5/2 even has its node at x = √(1/2).
    let node = make_seed(2.5, SeedKind::Even).unwrap();
    assert!(matches!(riccati_residual(&node, 0.5f64.sqrt()), Err(Error::SeedZero { .. })));
}

#[test]
fn eigenfunction_labels_and_norms() {
    let p0 = h0_eigenfunction(0, EigenKind::Physical).unwrap();
    assert_eq!(p0.energy, 1.5);
    let c0 = p0.value(1.0) / (-0.5f64).exp();
    for x in [0.3, 2.0] {
        assert!((p0.value(x) - c0 * x * (-0.5 * x * x).exp()).abs() < 1e-15);
    }
    let n0 = h0_eigenfunction(0, EigenKind::Npe).unwrap();
    assert_eq!(n0.energy, 0.5);
    assert!(n0.value(0.0) != 0.0);
    let psi3 = h0_eigenfunction(3, EigenKind::Physical).unwrap();
    let norm = quadrature_tol(|x| psi3.value(x).powi(2), 0.0, psi3.eval_limit(), 1e-12).unwrap();
    assert!((norm - 1.0).abs() <= 1e-6);
    assert!(matches!(h0_eigenfunction(51, EigenKind::Npe), Err(Error::IndexRange { .. })));
}

#[test]
fn orthonormal_families() {
    for kind in [EigenKind::Physical, EigenKind::Npe] {
        let states: Vec<_> = (0..=5).map(|n| h0_eigenfunction(n, kind).unwrap()).collect();
        for m in &states {
            for n in &states {
                let ip = quadrature_tol(|x| m.value(x) * n.value(x), 0.0, 13.0, 1e-12).unwrap();
                let want = if m.n == n.n { 1.0 } else { 0.0 };
                assert!((ip - want).abs() <= 1e-6, "{kind:?} <{}, {}> = {ip}", m.n, n.n);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn prop_riccati_vanishes(eps in -4.0f64..4.0, x in 0.05f64..6.0, odd in any::<bool>()) {
        let s = make_seed(eps, if odd { SeedKind::Odd } else { SeedKind::Even }).unwrap();
        prop_assume!(!seed_near_zero(&s, x));
        let r = riccati_residual(&s, x).unwrap();
        let alpha = s.log_deriv(x);
        prop_assert!(r.abs() <= 1e-8 * (1.0 + alpha * alpha + x * x), "{}", r);
    }

    #[test]
    fn prop_parity(eps in -4.0f64..4.0, x in 0.0f64..8.0) {
        let odd = make_seed(eps, SeedKind::Odd).unwrap();
        let even = make_seed(eps, SeedKind::Even).unwrap();
        prop_assert_eq!(odd.value(-x), -odd.value(x));
        prop_assert_eq!(even.value(-x), even.value(x));
    }
}
