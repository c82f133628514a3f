//! Transformation functions u(x; ε) of H₀ = −½d²/dx² + x²/2 and the closed-form
//! eigenfunctions of the oscillator with an infinite barrier at the origin.
//!
//! Everything is stored through its reduced form R(x) = e^{x²/2}u(x), which is a
//! polynomial-times-₁F₁ expression free of the Gaussian factor.

use crate::error::{Error, Result};
use crate::numverify::quadrature_tol;
use crate::specfun::{gamma, is_nonpositive_integer, KummerJet};

/// Seeds are evaluated on |x| ≤ 12; past that e^{−x²/2} underflows the products.
pub const EVAL_LIMIT: f64 = 12.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// Power of x in front of the ₁F₁ factor.
    pub fn power(self) -> i32 {
        match self {
            Parity::Odd => 1,
            Parity::Even => 0,
        }
    }

    pub fn b(self) -> f64 {
        match self {
            Parity::Odd => 1.5,
            Parity::Even => 0.5,
        }
    }

    /// The ₁F₁ parameter for a solution at energy ε.
    pub fn kummer_a(self, epsilon: f64) -> f64 {
        match self {
            Parity::Odd => (3.0 - 2.0 * epsilon) / 4.0,
            Parity::Even => (1.0 - 2.0 * epsilon) / 4.0,
        }
    }
}

/// A solution of definite parity, R(x) = scale·x^s·₁F₁(a; s+½; x²).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParitySolution {
    pub parity: Parity,
    pub epsilon: f64,
    pub a: f64,
    pub scale: f64,
}

/// R, R′ and R″ at one point (up to the common `scale`).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Reduced {
    pub r: f64,
    pub dr: f64,
    pub ddr: f64,
}

impl ParitySolution {
    pub fn new(parity: Parity, epsilon: f64) -> ParitySolution {
        ParitySolution { parity, epsilon, a: parity.kummer_a(epsilon), scale: 1.0 }
    }

    pub fn b(&self) -> f64 {
        self.parity.b()
    }

    /// M and its z-derivatives at z = x².
    pub fn jet(&self, x: f64, order: usize) -> Result<KummerJet> {
        KummerJet::at_sq(self.a, self.b(), x, order)
    }

    pub(crate) fn reduced_parts(&self, x: f64) -> Result<Reduced> {
        let j = self.jet(x, 2)?;
        let [m, n, p, _] = j.d;
        let z = x * x;
        Ok(match self.parity {
            Parity::Even => Reduced { r: m, dr: 2.0 * x * n, ddr: 2.0 * n + 4.0 * z * p },
            Parity::Odd => Reduced {
                r: x * m,
                dr: m + 2.0 * z * n,
                ddr: 6.0 * x * n + 4.0 * x * z * p,
            },
        })
    }

    /// R(x) = e^{x²/2}u(x).
    pub fn reduced(&self, x: f64) -> f64 {
        let m = self.jet(x, 0).map(|j| j.d[0]).unwrap_or(f64::NAN);
        self.scale * x.powi(self.parity.power()) * m
    }

    /// ρ = R′/R = α + x.
    pub fn reduced_log_deriv(&self, x: f64) -> f64 {
        match self.reduced_parts(x) {
            Ok(p) => p.dr / p.r,
            Err(_) => f64::NAN,
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        (-0.5 * x * x).exp() * self.reduced(x)
    }
}

/// Seed parity tag; `General` mixes both parities with weight ν.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SeedKind {
    Odd,
    Even,
    General { nu: f64 },
}

/// Value with a flag telling whether the point was past [`EVAL_LIMIT`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub value: f64,
    pub underflow: bool,
}

/// Transformation function u(x; ε) with −½u″ + x²/2·u = εu.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeedSolution {
    pub epsilon: f64,
    pub kind: SeedKind,
    even: Option<ParitySolution>,
    odd: Option<ParitySolution>,
}

/// Build a seed. ε is not range-checked here; that is the caller's business.
pub fn make_seed(epsilon: f64, kind: SeedKind) -> Result<SeedSolution> {
    if !epsilon.is_finite() {
        return Err(Error::Domain(format!("epsilon = {epsilon}")));
    }
    let (even, odd) = match kind {
        SeedKind::Odd => (None, Some(ParitySolution::new(Parity::Odd, epsilon))),
        SeedKind::Even => (Some(ParitySolution::new(Parity::Even, epsilon)), None),
        SeedKind::General { nu } => {
            let even = ParitySolution::new(Parity::Even, epsilon);
            let mut odd = ParitySolution::new(Parity::Odd, epsilon);
            if is_nonpositive_integer(odd.a) || is_nonpositive_integer(even.a) {
                return Err(Error::Domain(format!("gamma ratio has a pole at epsilon = {epsilon}")));
            }
            odd.scale = 2.0 * nu * gamma(odd.a)? / gamma(even.a)?;
            (Some(even), Some(odd))
        }
    };
    Ok(SeedSolution { epsilon, kind, even, odd })
}

impl SeedSolution {
    /// The underlying definite-parity solution, when there is one.
    pub fn parity_solution(&self) -> Option<ParitySolution> {
        match self.kind {
            SeedKind::Odd => self.odd,
            SeedKind::Even => self.even,
            SeedKind::General { .. } => None,
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity_solution().map(|p| p.parity)
    }

    fn parts(&self, x: f64) -> Result<Reduced> {
        let mut acc = Reduced { r: 0.0, dr: 0.0, ddr: 0.0 };
        for s in [self.even, self.odd].into_iter().flatten() {
            let p = s.reduced_parts(x)?;
            acc.r += s.scale * p.r;
            acc.dr += s.scale * p.dr;
            acc.ddr += s.scale * p.ddr;
        }
        Ok(acc)
    }

    /// R(x) = e^{x²/2}u(x).
    pub fn reduced(&self, x: f64) -> f64 {
        self.parts(x).map(|p| p.r).unwrap_or(f64::NAN)
    }

    /// ρ = R′/R.
    pub fn reduced_log_deriv(&self, x: f64) -> f64 {
        self.parts(x).map(|p| p.dr / p.r).unwrap_or(f64::NAN)
    }

    pub fn sample(&self, x: f64) -> Sample {
        if x.abs() > EVAL_LIMIT {
            return Sample { value: 0.0, underflow: true };
        }
        Sample { value: (-0.5 * x * x).exp() * self.reduced(x), underflow: false }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.sample(x).value
    }

    pub fn derivative(&self, x: f64) -> f64 {
        if x.abs() > EVAL_LIMIT {
            return 0.0;
        }
        match self.parts(x) {
            Ok(p) => (-0.5 * x * x).exp() * (p.dr - x * p.r),
            Err(_) => f64::NAN,
        }
    }

    /// α = u′/u.
    pub fn log_deriv(&self, x: f64) -> f64 {
        self.reduced_log_deriv(x) - x
    }

    /// α′ from the second derivative of the series, independent of the Riccati equation.
    pub fn log_deriv_prime(&self, x: f64) -> f64 {
        match self.parts(x) {
            Ok(p) => {
                let rho = p.dr / p.r;
                p.ddr / p.r - rho * rho - 1.0
            }
            Err(_) => f64::NAN,
        }
    }
}

/// α′ + α² − 2(x²/2 − ε).
pub fn riccati_residual(seed: &SeedSolution, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("riccati residual needs x > 0, got {x}")));
    }
    let p = seed.parts(x)?;
    if p.r.abs() <= 1e-14 * (p.dr.abs() * x).max(f64::MIN_POSITIVE) {
        return Err(Error::SeedZero { x });
    }
    let alpha = seed.log_deriv(x);
    Ok(seed.log_deriv_prime(x) + alpha * alpha - (x * x - 2.0 * seed.epsilon))
}

/// ψₙ (physical, vanishes at 0) or χₙ (violates the barrier condition).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EigenKind {
    Physical,
    Npe,
}

pub const MAX_EIGEN_INDEX: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H0Eigenfunction {
    pub n: usize,
    pub kind: EigenKind,
    pub energy: f64,
    /// Cₙ or Bₙ, from quadrature.
    pub norm_constant: f64,
    solution: ParitySolution,
}

impl H0Eigenfunction {
    /// Normalized solution of definite parity, usable in Wronskian formulas.
    pub fn parity_solution(&self) -> ParitySolution {
        ParitySolution { scale: self.norm_constant, ..self.solution }
    }

    /// Past this point the state is treated as zero.
    pub fn eval_limit(&self) -> f64 {
        eigen_limit(self.n)
    }

    pub fn value(&self, x: f64) -> f64 {
        if x.abs() > self.eval_limit() {
            return 0.0;
        }
        self.parity_solution().value(x)
    }

    /// The closed-form constant as printed in the literature, for diagnostics only:
    /// Cₙ = 2(2n+1)!/(π^{1/4} n!)·√(2^{−2n}/(2n+1)!), Bₙ = (2n)!/(π^{1/4} n!)·√(2^{1−2n}/(2n)!).
    pub fn printed_norm_constant(&self) -> f64 {
        let n = self.n as i32;
        let ln_fact = |k: i32| (1..=k).map(|i| (i as f64).ln()).sum::<f64>();
        let q = std::f64::consts::PI.powf(0.25).ln();
        let ln = match self.kind {
            EigenKind::Physical => {
                2f64.ln() + 0.5 * ln_fact(2 * n + 1) - q - ln_fact(n) - (n as f64) * 2f64.ln()
            }
            EigenKind::Npe => {
                0.5 * ln_fact(2 * n) - q - ln_fact(n) + 0.5 * (1 - 2 * n) as f64 * 2f64.ln()
            }
        };
        ln.exp()
    }
}

fn eigen_limit(n: usize) -> f64 {
    EVAL_LIMIT.max(((4 * n + 3) as f64).sqrt() + 8.0)
}

/// The n-th oscillator state of the requested kind, normalized on (0, ∞).
pub fn h0_eigenfunction(n: usize, kind: EigenKind) -> Result<H0Eigenfunction> {
    if n > MAX_EIGEN_INDEX {
        return Err(Error::IndexRange { n, max: MAX_EIGEN_INDEX });
    }
    let (parity, energy) = match kind {
        EigenKind::Physical => (Parity::Odd, 2.0 * n as f64 + 1.5),
        EigenKind::Npe => (Parity::Even, 2.0 * n as f64 + 0.5),
    };
    let solution = ParitySolution { parity, epsilon: energy, a: -(n as f64), scale: 1.0 };
    let limit = eigen_limit(n);
    // Rescale before integrating so the absolute tolerance means something for large n.
    let peak = (1..=400)
        .map(|i| solution.value(limit * i as f64 / 400.0).abs())
        .fold(0.0_f64, f64::max);
    let f = |x: f64| {
        let v = solution.value(x) / peak;
        v * v
    };
    let integral = quadrature_tol(f, 0.0, limit, 1e-13)? * peak * peak;
    let norm_constant = 1.0 / integral.sqrt();
    Ok(H0Eigenfunction { n, kind, energy, norm_constant, solution })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_seeds() {
        let odd = make_seed(1.5, SeedKind::Odd).unwrap();
        let even = make_seed(0.5, SeedKind::Even).unwrap();
        for &x in &[0.3_f64, 1.0, 2.5] {
            let g = (-0.5 * x * x).exp();
            assert!((odd.value(x) - x * g).abs() < 1e-16);
            assert!((even.value(x) - g).abs() < 1e-16);
        }
        assert!(riccati_residual(&even, 1.0).unwrap().abs() < 1e-10);
        assert!(riccati_residual(&odd, 2.0).unwrap().abs() < 1e-10);
        assert!((even.log_deriv(1.0) + 1.0).abs() < 1e-15);
        assert!((odd.log_deriv(2.0) - (0.5 - 2.0)).abs() < 1e-15);
    }

    #[test]
    fn general_reduces_to_even_at_zero_nu() {
        let g = make_seed(0.37, SeedKind::General { nu: 0.0 }).unwrap();
        let e = make_seed(0.37, SeedKind::Even).unwrap();
        for &x in &[0.2, 1.1, 3.0] {
            assert_eq!(g.value(x), e.value(x));
        }
    }

    #[test]
    fn general_rejects_gamma_poles() {
        // (1 − 2ε)/4 = 0 at ε = 1/2, (3 − 2ε)/4 = −1 at ε = 7/2.
        assert!(make_seed(0.5, SeedKind::General { nu: 0.3 }).is_err());
        assert!(make_seed(3.5, SeedKind::General { nu: 0.3 }).is_err());
        assert!(make_seed(0.4, SeedKind::General { nu: 0.3 }).is_ok());
    }

    #[test]
    fn underflow_flag_past_limit() {
        let s = make_seed(0.2, SeedKind::Even).unwrap();
        assert_eq!(s.sample(12.5), Sample { value: 0.0, underflow: true });
        assert!(!s.sample(11.9).underflow);
    }

    #[test]
    fn node_is_a_pole_error() {
        // ε = 7/2 odd seed: x(1 − 2x²/3), node at √(3/2).
        let s = make_seed(3.5, SeedKind::Odd).unwrap();
        assert!(matches!(riccati_residual(&s, 1.5f64.sqrt()), Err(Error::SeedZero { .. })));
    }

    #[test]
    fn eigen_guard_and_energies() {
        assert!(h0_eigenfunction(51, EigenKind::Physical).is_err());
        let p = h0_eigenfunction(2, EigenKind::Physical).unwrap();
        let q = h0_eigenfunction(2, EigenKind::Npe).unwrap();
        assert_eq!(p.energy, 5.5);
        assert_eq!(q.energy, 4.5);
        assert_eq!(p.value(0.0), 0.0);
        assert!(q.value(0.0) != 0.0);
    }
}
