use super::cases::{validate_epsilon_range, RangeCheck, TransformCase};
use super::wronskian::{log_second_x, reduced_pair, WronskianForm};
use crate::numverify::first_sign_change;
use crate::error::{Error, Result};
use crate::seeds::{ParitySolution, SeedSolution};

/// Nodeless checks scan w (or the ₁F₁ factor) on [0, SCAN_END] at SCAN_POINTS points.
pub const SCAN_END: f64 = 12.0;
pub const SCAN_POINTS: usize = 4001;
// Zeros closer than this to the origin belong to the x-power, not to w.
const ORIGIN_ZERO: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Kernel {
    First(ParitySolution),
    Second(ParitySolution, ParitySolution),
}

/// V(x) = x²/2 + p/x² + shift + smooth(x), the partner of H₀ built from one or two seeds.
#[derive(Clone, Debug, PartialEq)]
pub struct PartnerPotential {
    pub order: u8,
    pub case: TransformCase,
    /// p, the coefficient of 1/x².
    pub inverse_square: f64,
    pub constant_shift: f64,
    pub seeds: Vec<SeedSolution>,
    pub(crate) kernel: Kernel,
}

impl PartnerPotential {
    /// −[ln M(x²)]″ (order 1) or −[ln w(x²)]″ (order 2): the part left after
    /// removing the oscillator, the barrier term and the constant.
    pub fn smooth_part(&self, x: f64) -> f64 {
        let r = match self.kernel {
            Kernel::First(s) => s.jet(x, 2).map(|j| log_second_x(j.d[0], j.d[1], j.d[2], x)),
            Kernel::Second(s1, s2) => reduced_pair(&s1, &s2, x, 2).map(|w| log_second_x(w[0], w[1], w[2], x)),
        };
        r.map(|v| -v).unwrap_or(f64::NAN)
    }

    pub fn eval(&self, x: f64) -> f64 {
        0.5 * x * x + self.inverse_square / (x * x) + self.constant_shift + self.smooth_part(x)
    }

    pub fn factorization_energies(&self) -> (f64, Option<f64>) {
        match self.kernel {
            Kernel::First(s) => (s.epsilon, None),
            Kernel::Second(s1, s2) => (s1.epsilon, Some(s2.epsilon)),
        }
    }

    pub fn wronskian(&self) -> Option<WronskianForm> {
        match self.kernel {
            Kernel::Second(s1, s2) => Some(WronskianForm::new(s1, s2)),
            Kernel::First(_) => None,
        }
    }
}

fn definite(seed: &SeedSolution) -> Result<ParitySolution> {
    seed.parity_solution()
        .ok_or_else(|| Error::Domain("partner potentials need a seed of definite parity".into()))
}

fn check_scan<F: Fn(f64) -> f64>(f: F) -> Result<()> {
    let mut start = 0.0;
    while let Some(x) = first_sign_change(&f, start, SCAN_END, SCAN_POINTS) {
        if x > ORIGIN_ZERO {
            return Err(Error::Singular { x });
        }
        start = 2.0 * ORIGIN_ZERO;
    }
    Ok(())
}

fn check_range(case: TransformCase, eps1: f64, eps2: Option<f64>) -> Result<()> {
    match validate_epsilon_range(case, eps1, eps2)? {
        RangeCheck::Allowed(_) => Ok(()),
        RangeCheck::Rejected(why) => Err(Error::Rejected(why)),
    }
}

/// V₁ = V₀ − [ln u]″ with no nodeless or range checks; may have poles on x > 0.
pub fn formal_first_order_partner(seed: &SeedSolution) -> Result<PartnerPotential> {
    let s = definite(seed)?;
    let case = TransformCase::from_parities(s.parity, None);
    Ok(PartnerPotential {
        order: 1,
        case,
        inverse_square: case.inverse_square(),
        constant_shift: case.constant_shift(),
        seeds: vec![*seed],
        kernel: Kernel::First(s),
    })
}

/// V₂ = V₀ − [ln W(u₁,u₂)]″ with no nodeless or range checks.
pub fn formal_second_order_partner(seed1: &SeedSolution, seed2: &SeedSolution) -> Result<PartnerPotential> {
    let (s1, s2) = (definite(seed1)?, definite(seed2)?);
    if seed2.epsilon == seed1.epsilon {
        return Err(Error::Ordering { eps1: seed1.epsilon, eps2: seed2.epsilon });
    }
    let case = TransformCase::from_parities(s1.parity, Some(s2.parity));
    Ok(PartnerPotential {
        order: 2,
        case,
        inverse_square: case.inverse_square(),
        constant_shift: case.constant_shift(),
        seeds: vec![*seed1, *seed2],
        kernel: Kernel::Second(s1, s2),
    })
}

/// First-order partner of H₀. The ₁F₁ factor of the seed is scanned for zeros
/// on [0, 12] before the range rule is consulted, so a zero is reported with its location.
pub fn first_order_partner(seed: &SeedSolution) -> Result<PartnerPotential> {
    let partner = formal_first_order_partner(seed)?;
    let Kernel::First(s) = partner.kernel else { unreachable!() };
    check_scan(|x| s.jet(x, 0).map(|j| j.d[0]).unwrap_or(f64::NAN))?;
    check_range(partner.case, seed.epsilon, None)?;
    Ok(partner)
}

/// Second-order partner, seeds ordered so that ε₂ < ε₁.
pub fn second_order_partner(seed1: &SeedSolution, seed2: &SeedSolution) -> Result<(PartnerPotential, WronskianForm)> {
    if seed2.epsilon >= seed1.epsilon {
        return Err(Error::Ordering { eps1: seed1.epsilon, eps2: seed2.epsilon });
    }
    let partner = formal_second_order_partner(seed1, seed2)?;
    let form = partner.wronskian().expect("second order");
    check_scan(|x| form.w(x))?;
    check_range(partner.case, seed1.epsilon, Some(seed2.epsilon))?;
    Ok((partner, form))
}
