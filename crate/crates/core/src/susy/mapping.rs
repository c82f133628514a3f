use super::partner::{Kernel, PartnerPotential};
use super::wronskian::pair_value;
use crate::error::{Error, Result};
use crate::numverify::quadrature_tol;
use crate::seeds::{EigenKind, H0Eigenfunction, ParitySolution};

/// Boundary test points: a Physical state must be small at `NEAR_ORIGIN` and at `FAR_POINT`
/// relative to its maximum.
pub const NEAR_ORIGIN: f64 = 1e-6;
pub const FAR_POINT: f64 = 11.0;
const ORIGIN_RATIO: f64 = 1e-3;
const FAR_RATIO: f64 = 1e-6;
const NORM_END: f64 = 12.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Physical,
    Npe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MissingWhich {
    Eps1,
    Eps2,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StateSource {
    /// Image of ψₙ or χₙ under the intertwiner.
    Mapped { n: usize, kind: EigenKind },
    /// Solution annihilated by the adjoint intertwiner at a factorization energy.
    Missing(MissingWhich),
}

/// An eigenfunction of a partner Hamiltonian, classified by its boundary behaviour.
///
/// Physical states are normalized on (0, 12); non-physical ones are scaled to a
/// unit maximum over the classification grid.
#[derive(Clone, Debug, PartialEq)]
pub struct PartnerState {
    pub energy: f64,
    pub classification: Classification,
    pub source: StateSource,
    pub boundary_ratios: (f64, f64),
    normalization: f64,
    kernel: Kernel,
    psi: Option<ParitySolution>,
}

impl PartnerState {
    pub fn value(&self, x: f64) -> f64 {
        if x == 0.0 && self.classification == Classification::Physical {
            return 0.0;
        }
        self.normalization * self.raw(x)
    }

    fn raw(&self, x: f64) -> f64 {
        let gauss = (-0.5 * x * x).exp();
        match (self.source, self.kernel) {
            (StateSource::Mapped { .. }, Kernel::First(u)) => {
                let psi = self.psi.expect("mapped state keeps its source");
                // A⁺ψ = (αψ − ψ′)/√2 = −e^{−x²/2}·W(R_u, R_ψ)/(√2·R_u)
                let de = (self.energy - u.epsilon).abs().sqrt();
                -gauss * pair_value(&u, &psi, x) / (std::f64::consts::SQRT_2 * u.reduced(x) * de)
            }
            (StateSource::Mapped { .. }, Kernel::Second(r1, r2)) => {
                let r3 = self.psi.expect("mapped state keeps its source");
                // A⁺ψ = ½·W(u₁,u₂,ψ)/W(u₁,u₂); the third row of the reduced
                // 3×3 Wronskian collapses to (1 − 2εᵢ)Rᵢ.
                let c = |r: &ParitySolution| 1.0 - 2.0 * r.epsilon;
                let w12 = pair_value(&r1, &r2, x);
                let w13 = pair_value(&r1, &r3, x);
                let w23 = pair_value(&r2, &r3, x);
                let w3 = c(&r1) * r1.reduced(x) * w23 - c(&r2) * r2.reduced(x) * w13 + c(&r3) * r3.reduced(x) * w12;
                let de = ((self.energy - r1.epsilon) * (self.energy - r2.epsilon)).abs().sqrt();
                0.5 * gauss * w3 / (w12 * de)
            }
            (StateSource::Missing(_), Kernel::First(u)) => 1.0 / (gauss * u.reduced(x)),
            (StateSource::Missing(which), Kernel::Second(r1, r2)) => {
                let other = match which {
                    MissingWhich::Eps1 => r2,
                    MissingWhich::Eps2 => r1,
                };
                other.reduced(x) / (gauss * pair_value(&r1, &r2, x))
            }
        }
    }
}

// log-spaced near the origin, uniform beyond 1.
fn classification_grid() -> impl Iterator<Item = f64> {
    let near = (0..=120).map(|i| NEAR_ORIGIN * 10f64.powf(6.0 * i as f64 / 120.0));
    let far = (1..=500).map(|i| 1.0 + (FAR_POINT - 1.0) * i as f64 / 500.0);
    near.chain(far)
}

fn finish(mut st: PartnerState) -> Result<PartnerState> {
    let peak = classification_grid().map(|x| st.raw(x).abs()).fold(0.0_f64, f64::max);
    if !(peak.is_finite() && peak > 0.0) {
        return Err(Error::Domain(format!("state at E = {} has no finite maximum", st.energy)));
    }
    let r0 = st.raw(NEAR_ORIGIN).abs() / peak;
    let r1 = st.raw(FAR_POINT).abs() / peak;
    st.boundary_ratios = (r0, r1);
    st.classification = if r0 < ORIGIN_RATIO && r1 < FAR_RATIO {
        Classification::Physical
    } else {
        Classification::Npe
    };
    st.normalization = match st.classification {
        Classification::Physical => {
            let f = |x: f64| {
                let v = st.raw(x) / peak;
                v * v
            };
            1.0 / (peak * quadrature_tol(f, 0.0, NORM_END, 1e-12)?.sqrt())
        }
        Classification::Npe => 1.0 / peak,
    };
    Ok(st)
}

/// Image of an oscillator eigenfunction in the partner, normalized by quadrature when physical.
pub fn map_eigenfunction(partner: &PartnerPotential, eig: &H0Eigenfunction) -> Result<PartnerState> {
    let (e1, e2) = partner.factorization_energies();
    if eig.energy == e1 || Some(eig.energy) == e2 {
        return Err(Error::EnergyCoincidence { energy: eig.energy });
    }
    finish(PartnerState {
        energy: eig.energy,
        classification: Classification::Npe,
        source: StateSource::Mapped { n: eig.n, kind: eig.kind },
        boundary_ratios: (f64::NAN, f64::NAN),
        normalization: 1.0,
        kernel: partner.kernel,
        psi: Some(eig.parity_solution()),
    })
}

/// The state at a factorization energy: 1/u for order 1, u₂/W or u₁/W for order 2.
pub fn missing_state(partner: &PartnerPotential, which: MissingWhich) -> Result<PartnerState> {
    let (e1, e2) = partner.factorization_energies();
    let energy = match (which, e2) {
        (MissingWhich::Eps1, _) => e1,
        (MissingWhich::Eps2, Some(e)) => e,
        (MissingWhich::Eps2, None) => {
            return Err(Error::Domain("a first-order partner has a single missing state".into()))
        }
    };
    finish(PartnerState {
        energy,
        classification: Classification::Npe,
        source: StateSource::Missing(which),
        boundary_ratios: (f64::NAN, f64::NAN),
        normalization: 1.0,
        kernel: partner.kernel,
        psi: None,
    })
}
