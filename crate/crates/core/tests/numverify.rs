use darboux_osc::numverify::{
    fd_derivative, fd_derivative_with, quadrature, solve_dirichlet, solve_dirichlet_single, DerivOrder, GridSpec,
    Stencil,
};
use darboux_osc::pha_piv::closed_form_g;
use darboux_osc::seeds::{h0_eigenfunction, EigenKind, Parity};
use darboux_osc::susy::{lowest_states, predict_spectrum, TransformCase};
use darboux_osc::Error;
use std::time::Instant;

fn v0(x: f64) -> f64 {
    0.5 * x * x
}

#[test]
fn oscillator_spectrum() {
    let t = Instant::now();
    let r = solve_dirichlet(v0, GridSpec::DEFAULT, 3).unwrap();
    assert!(t.elapsed().as_secs_f64() < 5.0);
    assert!(r.extrapolated);
    for (e, want) in r.eigenvalues.iter().zip([1.5, 3.5, 5.5]) {
        assert!((e - want).abs() <= 1e-4, "{e}");
    }
    assert!(r.error_estimates.unwrap().iter().all(|&d| d < 1e-4));
}

#[test]
fn shifted_partners() {
    let barrier = |x: f64| 0.5 * x * x + 1.0 / (x * x) + 1.0;
    let r = solve_dirichlet(barrier, GridSpec::DEFAULT, 3).unwrap();
    for (e, want) in r.eigenvalues.iter().zip([3.5, 5.5, 7.5]) {
        assert!((e - want).abs() <= 1e-4, "{e}");
    }
    // x²/2 + 1 with Dirichlet at 0 is the oscillator shifted by one.
    let r = solve_dirichlet(|x| 0.5 * x * x + 1.0, GridSpec::DEFAULT, 3).unwrap();
    let want = predict_spectrum(TransformCase::Even1, 0.5, None, 4).unwrap().levels();
    for (e, w) in r.eigenvalues.iter().zip(&want) {
        assert!((e - w).abs() <= 1e-4, "{e} vs {w}");
    }
}

#[test]
fn second_order_convergence() {
    let g = GridSpec::new(12.0, 1000).unwrap();
    let coarse = solve_dirichlet_single(v0, g, 3, false).unwrap();
    let fine = solve_dirichlet_single(v0, g.refined(), 3, false).unwrap();
    for (k, want) in [1.5, 3.5, 5.5].iter().enumerate() {
        let ratio = (coarse.eigenvalues[k] - want) / (fine.eigenvalues[k] - want);
        assert!((ratio - 4.0).abs() <= 0.5, "level {k}: ratio {ratio}");
    }
}

#[test]
fn eigenvectors_match_states() {
    let g = GridSpec::new(12.0, 2000).unwrap();
    let r = solve_dirichlet_single(v0, g, 2, true).unwrap();
    let vs = r.eigenvectors.unwrap();
    for (n, v) in vs.iter().enumerate() {
        let psi = h0_eigenfunction(n, EigenKind::Physical).unwrap();
        let sign = if psi.value(1.0) * v[(1.0 / g.h()) as usize] < 0.0 { -1.0 } else { 1.0 };
        let worst = g.points().zip(v).map(|(x, &vi)| (sign * vi - psi.value(x)).abs()).fold(0.0, f64::max);
        assert!(worst < 1e-4, "n {n}: {worst:e}");
    }
    assert!(matches!(solve_dirichlet(v0, g, 16), Err(Error::IndexRange { .. })));
}

#[test]
fn quadrature_examples() {
    let psi0 = h0_eigenfunction(0, EigenKind::Physical).unwrap();
    let psi1 = h0_eigenfunction(1, EigenKind::Physical).unwrap();
    assert!((quadrature(|x| psi0.value(x).powi(2), 0.0, 12.0).unwrap() - 1.0).abs() <= 1e-6);
    assert!(quadrature(|x| psi0.value(x) * psi1.value(x), 0.0, 12.0).unwrap().abs() <= 1e-6);
    let st = &lowest_states(TransformCase::Odd1, 0.25, None, 1).unwrap()[0];
    assert!((quadrature(|x| st.value(x).powi(2), 0.0, 12.0).unwrap() - 1.0).abs() <= 1e-5);
    assert!((quadrature(f64::sin, 0.0, std::f64::consts::PI).unwrap() - 2.0).abs() <= 1e-10);
}

#[test]
fn difference_examples() {
    assert!((fd_derivative(f64::sin, 1.0, DerivOrder::First).unwrap() - 1f64.cos()).abs() <= 1e-9);
    assert!((fd_derivative(|x| x * x * x, 2.0, DerivOrder::Second).unwrap() - 12.0).abs() <= 1e-9);
    // g₁ at ε = 0.3: halving the scale barely moves the estimate.
    let g1 = closed_form_g(1, Parity::Odd, 1, 0.3).unwrap();
    let at = |s: f64| {
        fd_derivative_with(|t| g1.g(t), 1.1, DerivOrder::Second, Stencil { lower: 0.0, scale: Some(s) }).unwrap()
    };
    let (d, d_half) = (at(1.1), at(0.55));
    assert!((d - d_half).abs() <= 1e-7 * d.abs().max(1.0), "{d} vs {d_half}");
    assert!(matches!(
        fd_derivative_with(f64::ln, 1e-12, DerivOrder::Second, Stencil::above_zero()),
        Err(Error::Stencil { .. })
    ));
}
