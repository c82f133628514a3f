use super::extremal::{gamma_of, ExtremalState, Provenance};
use super::params::{check_index, check_order, parameters_for};
use crate::error::{Error, Result};
use crate::seeds::{Parity, ParitySolution};

/// Closed forms are offered for |ε| up to this bound, regardless of the spectral range rules.
pub const EPSILON_ENVELOPE: f64 = 40.0;
/// |g| at or below this is treated as zero.
pub const G_ZERO: f64 = 1e-10;
const EPS_MATCH: f64 = 1e-12;
// g is tagged trivial when it vanishes at all of these.
const PROBES: [f64; 7] = [0.3, 0.7, 1.1, 1.9, 2.6, 3.4, 4.5];

#[derive(Clone, Copy, Debug, PartialEq)]
enum Source {
    State(ExtremalState),
    Closed(ParitySolution),
}

/// A solution g of PIV with its parameters and where it came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PivSolution {
    pub order: u8,
    pub parity: Parity,
    pub permutation_index: u8,
    pub epsilon: f64,
    pub a: f64,
    pub b: f64,
    /// g ≡ 0: the equation divides by g, so no residual is defined.
    pub trivial: bool,
    source: Source,
}

/// Why a (order, parity, index, ε) cell has no solution: the extremal state vanishes
/// identically and the closed form degenerates to 0/0 for every x.
pub fn undetermined_reason(order: u8, parity: Parity, index: u8, epsilon: f64) -> Option<String> {
    let at = |e: f64| (epsilon - e).abs() <= EPS_MATCH;
    let why = match (order, parity, index) {
        (1, Parity::Even, 2) if at(-0.5) => "u = exp(x^2/2) gives (ln u)'' - 1 = 0",
        (1, Parity::Even, 3) if at(0.5) => "u = exp(-x^2/2) gives u'/u + x = 0",
        (2, Parity::Even, 2) if at(-0.5) => "alpha = x gives 2u' - eta u = 0",
        (2, Parity::Odd, 3) if at(1.5) => "alpha = 1/x - x gives (x + alpha) eta + 2 epsilon - 1 = 0",
        (2, Parity::Even, _) if at(0.5) => "u2 = a^- u vanishes, the seed pair is degenerate",
        _ => return None,
    };
    Some(format!("g{index} is 0/0 identically in x at epsilon = {epsilon}: {why}"))
}

fn check_envelope(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && epsilon.abs() <= EPSILON_ENVELOPE {
        Ok(())
    } else {
        Err(Error::Domain(format!("epsilon = {epsilon} outside |epsilon| <= {EPSILON_ENVELOPE}")))
    }
}

fn finish(order: u8, parity: Parity, index: u8, epsilon: f64, source: Source) -> Result<PivSolution> {
    let (a, b) = parameters_for(order, index, epsilon)?;
    let mut sol = PivSolution { order, parity, permutation_index: index, epsilon, a, b, trivial: false, source };
    sol.trivial = PROBES.iter().all(|&x| sol.g(x).abs() <= G_ZERO);
    Ok(sol)
}

/// g = −x − [ln φ]′, with φ used as the first extremal state of its permutation.
pub fn piv_from_state(state: &ExtremalState) -> Result<PivSolution> {
    let u = state.parity_solution();
    let order = state.provenance.order();
    if undetermined_reason(order, u.parity, state.index, u.epsilon).is_some()
        || PROBES.iter().all(|&x| state.value(x) == 0.0)
    {
        return Err(Error::ZeroState);
    }
    finish(order, u.parity, state.index, u.epsilon, Source::State(*state))
}

/// The hypergeometric-hierarchy formulas for g₁, g₂, g₃: g₁ from the ₁F₁ ratio (order 1)
/// or from α = u′/u (order 2), and g₂, g₃ built from g₁.
pub fn closed_form_g(order: u8, parity: Parity, index: u8, epsilon: f64) -> Result<PivSolution> {
    check_order(order)?;
    check_index(index)?;
    check_envelope(epsilon)?;
    if let Some(reason) = undetermined_reason(order, parity, index, epsilon) {
        return Err(Error::Undetermined { reason });
    }
    finish(order, parity, index, epsilon, Source::Closed(ParitySolution::new(parity, epsilon)))
}

impl PivSolution {
    pub fn g(&self, x: f64) -> f64 {
        match self.source {
            Source::State(s) => -x - s.log_deriv(x),
            Source::Closed(u) => match self.order {
                1 => closed_first(&u, self.permutation_index, x),
                _ => closed_second(&u, self.permutation_index, x),
            },
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self.order {
            1 => Provenance::FirstOrder,
            _ => Provenance::SecondOrderReduced,
        }
    }

    pub fn from_state(&self) -> bool {
        matches!(self.source, Source::State(_))
    }
}

fn closed_first(u: &ParitySolution, index: u8, x: f64) -> f64 {
    let e = u.epsilon;
    // g₁ = γ in the first-order family.
    let g1 = gamma_of(u, x);
    match index {
        1 => g1,
        2 => {
            // −g₁ − 2x − 2[x + (2ε − x²)s + s³]/(x² − 2ε − 1 − s²) with s = x + g₁,
            // numerator and denominator expanded in g₁ so nothing cancels.
            let c = 2.0 * e + 1.0;
            let s = x + g1;
            let t = g1 * (2.0 * x + g1);
            let num = c * x + (c - 1.0) * g1 + s * t;
            let den = -c - t;
            -g1 - 2.0 * x - 2.0 * num / den
        }
        _ => (g1 * g1 + 2.0 * x * g1 + 2.0 * e - 1.0) / (g1 + 2.0 * x),
    }
}

fn closed_second(u: &ParitySolution, index: u8, x: f64) -> f64 {
    let e = u.epsilon;
    // α = x + γ, so x² − α² = −γ(2x + γ).
    let gam = gamma_of(u, x);
    let alpha = x + gam;
    let s = x + alpha;
    let sq_gap = -gam * (2.0 * x + gam);
    let g1 = -x - alpha + 2.0 * s / (1.0 - 2.0 * e + sq_gap);
    match index {
        1 => g1,
        2 => g1 + (2.0 * (2.0 * e + 1.0) - 2.0 * sq_gap) / (alpha - g1 - x),
        _ => {
            (s * g1 * g1 + (2.0 * e - 1.0 + s * s) * g1 + (2.0 * e - 3.0) * s)
                / (s * s + s * g1 + 2.0 * e - 1.0)
        }
    }
}
