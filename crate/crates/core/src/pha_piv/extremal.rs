//! Extremal states of the third-order ladder operators of the first- and
//! second-order partners, written through one seed u with ρ = R′/R = α + x.

use super::params::eigen_triple;
use crate::error::{Error, Result};
use crate::seeds::{Parity, ParitySolution, SeedSolution};
use crate::specfun::kummer_1f1_sq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// States of H₁ = partner of H₀ built from u.
    FirstOrder,
    /// States of H₂ built from u₁ = u and u₂ = a⁻u, reduced to u alone.
    SecondOrderReduced,
}

impl Provenance {
    pub fn order(self) -> u8 {
        match self {
            Provenance::FirstOrder => 1,
            Provenance::SecondOrderReduced => 2,
        }
    }
}

/// γ = ρ − 2x = α − x through the contiguous relation z(M′ − M) = (b − a)(M(a−1) − M).
/// Forming it as ρ − 2x cancels two O(x) terms and loses all relative accuracy where γ
/// is exponentially small (u close to a growing Gaussian); this form does not.
pub(super) fn gamma_of(u: &ParitySolution, x: f64) -> f64 {
    let e = u.epsilon;
    let (m, m1) = match (kummer_1f1_sq(u.a, u.b(), x), kummer_1f1_sq(u.a - 1.0, u.b(), x)) {
        (Ok(m), Ok(m1)) => (m, m1),
        _ => return f64::NAN,
    };
    match u.parity {
        Parity::Odd => ((3.0 + 2.0 * e) * m1 - (1.0 + 2.0 * e) * m) / (2.0 * x * m),
        Parity::Even => (1.0 + 2.0 * e) * (m1 - m) / (2.0 * x * m),
    }
}

/// The quantities every state is assembled from at one point.
#[derive(Clone, Copy, Debug)]
struct Local {
    eps: f64,
    r: f64,
    rho: f64,
    alpha: f64,
    /// x² − α² = −γ(2x + γ), kept apart so it is never formed by cancellation.
    sq_gap: f64,
    /// α′ from the Riccati equation.
    dalpha: f64,
}

impl Local {
    fn at(u: &ParitySolution, x: f64) -> Local {
        let gam = gamma_of(u, x);
        let alpha = x + gam;
        let sq_gap = -gam * (2.0 * x + gam);
        let eps = u.epsilon;
        Local { eps, r: u.reduced(x), rho: alpha + x, alpha, sq_gap, dalpha: sq_gap - 2.0 * eps }
    }

    /// x² + 1 − 2ε − α², which is also ρ′.
    fn d(&self) -> f64 {
        1.0 - 2.0 * self.eps + self.sq_gap
    }

    fn eta(&self) -> f64 {
        2.0 * self.rho / self.d()
    }

    fn deta(&self) -> f64 {
        let eta = self.eta();
        2.0 - eta * (eta - 2.0 * self.alpha)
    }
}

/// A state annihilated by the third-order lowering operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtremalState {
    pub index: u8,
    pub varepsilon: f64,
    pub provenance: Provenance,
    pub seed: SeedSolution,
    u: ParitySolution,
}

impl ExtremalState {
    pub fn order(&self) -> u8 {
        self.provenance.order()
    }

    pub(crate) fn parity_solution(&self) -> ParitySolution {
        self.u
    }

    /// φ(x); a pole is reported with its location.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let l = Local::at(&self.u, x);
        let (gauss, inv) = ((-0.5 * x * x).exp(), (0.5 * x * x).exp());
        let v = match (self.provenance, self.index) {
            (Provenance::FirstOrder, 1) => inv / l.r,
            (Provenance::FirstOrder, 2) => gauss * l.r * (l.dalpha - 1.0),
            (Provenance::FirstOrder, _) => gauss * l.rho,
            (Provenance::SecondOrderReduced, 1) => inv / (l.r * l.d()),
            (Provenance::SecondOrderReduced, 2) => gauss * l.r * (2.0 * l.alpha - l.eta()),
            (Provenance::SecondOrderReduced, _) => gauss * (l.rho * l.eta() + 2.0 * l.eps - 1.0),
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Pole(x))
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.eval(x).unwrap_or(f64::NAN)
    }

    /// [ln φ]′ from the analytic derivatives of u.
    pub fn log_deriv(&self, x: f64) -> f64 {
        let l = Local::at(&self.u, x);
        match (self.provenance, self.index) {
            (Provenance::FirstOrder, 1) => -l.alpha,
            (Provenance::FirstOrder, 2) => {
                let ddalpha = 2.0 * x - 2.0 * l.alpha * l.dalpha;
                l.alpha + ddalpha / (l.dalpha - 1.0)
            }
            (Provenance::FirstOrder, _) => -x + (1.0 + l.dalpha) / l.rho,
            (Provenance::SecondOrderReduced, 1) => l.alpha - l.eta(),
            (Provenance::SecondOrderReduced, 2) => {
                l.alpha + (2.0 * l.dalpha - l.deta()) / (2.0 * l.alpha - l.eta())
            }
            (Provenance::SecondOrderReduced, _) => {
                -x + (2.0 * l.rho + l.rho * l.deta()) / (l.rho * l.eta() + 2.0 * l.eps - 1.0)
            }
        }
    }
}

fn definite(seed: &SeedSolution) -> Result<ParitySolution> {
    seed.parity_solution()
        .ok_or_else(|| Error::Domain("extremal states need a seed of definite parity".into()))
}

fn build(seed: &SeedSolution, provenance: Provenance) -> Result<[ExtremalState; 3]> {
    let u = definite(seed)?;
    let eig = eigen_triple(provenance.order(), seed.epsilon)?;
    let state = |i: usize| ExtremalState { index: i as u8 + 1, varepsilon: eig[i], provenance, seed: *seed, u };
    Ok([state(0), state(1), state(2)])
}

/// φ₁ ∝ 1/u, φ₂ ∝ u[(ln u)″ − 1], φ₃ ∝ e^{−x²/2}ρ, with eigenvalues ε, ε+1, ½.
pub fn extremal_states_first(seed: &SeedSolution) -> Result<[ExtremalState; 3]> {
    build(seed, Provenance::FirstOrder)
}

/// φ₁ ∝ 1/(uD), φ₂ ∝ u(2α − η), φ₃ ∝ e^{−x²/2}(ρη + 2ε − 1), with D = x² + 1 − 2ε − α²,
/// η = 2ρ/D and eigenvalues ε−1, ε+1, ½. No nodeless check is made: poles of D
/// show up pointwise through [`ExtremalState::eval`].
pub fn extremal_states_second(seed: &SeedSolution) -> Result<[ExtremalState; 3]> {
    build(seed, Provenance::SecondOrderReduced)
}
