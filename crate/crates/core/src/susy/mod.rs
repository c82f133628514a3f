//! First- and second-order Darboux partners of the half-line oscillator:
//! range rules, partner potentials, factored Wronskians, mapped eigenfunctions
//! and predicted spectra.

mod cases;
mod mapping;
mod partner;
mod spectrum;
mod wronskian;

pub use cases::{validate_epsilon_range, RangeCheck, TransformCase, Window};
pub use mapping::{
    map_eigenfunction, missing_state, Classification, MissingWhich, PartnerState, StateSource, FAR_POINT, NEAR_ORIGIN,
};
pub use partner::{
    first_order_partner, formal_first_order_partner, formal_second_order_partner, second_order_partner,
    PartnerPotential, SCAN_END, SCAN_POINTS,
};
pub use spectrum::{predict_spectrum, Level, LevelLabel, SpectrumPrediction, MAX_PREDICTED_INDEX};
pub use wronskian::WronskianForm;

use crate::error::Result;
use crate::seeds::{h0_eigenfunction, make_seed, EigenKind, Parity, SeedKind, SeedSolution};

fn seed_kind(p: Parity) -> SeedKind {
    match p {
        Parity::Odd => SeedKind::Odd,
        Parity::Even => SeedKind::Even,
    }
}

/// The seed(s) a case uses at the given energies.
pub fn case_seeds(case: TransformCase, eps1: f64, eps2: Option<f64>) -> Result<Vec<SeedSolution>> {
    let (p1, p2) = case.parities();
    let mut out = vec![make_seed(eps1, seed_kind(p1))?];
    if let Some(p2) = p2 {
        let e2 = eps2.ok_or(crate::Error::MissingEpsilon(case.name()))?;
        out.push(make_seed(e2, seed_kind(p2))?);
    }
    Ok(out)
}

/// Validated partner potential for a case.
pub fn build_partner(case: TransformCase, eps1: f64, eps2: Option<f64>) -> Result<PartnerPotential> {
    let seeds = case_seeds(case, eps1, eps2)?;
    match seeds.as_slice() {
        [s] => first_order_partner(s),
        [s1, s2] => second_order_partner(s1, s2).map(|(p, _)| p),
        _ => unreachable!(),
    }
}

/// The lowest physical states of a partner, ascending in energy: `base` levels of the
/// predicted spectrum plus every created level below them.
pub fn lowest_states(case: TransformCase, eps1: f64, eps2: Option<f64>, base: usize) -> Result<Vec<PartnerState>> {
    let partner = build_partner(case, eps1, eps2)?;
    let prediction = predict_spectrum(case, eps1, eps2, base + 2)?;
    let mut states = Vec::new();
    for level in prediction.kept_levels.iter().take(base) {
        let (n, kind) = match level.label {
            LevelLabel::E(n) => (n, EigenKind::Physical),
            LevelLabel::CalE(n) => (n, EigenKind::Npe),
        };
        states.push(map_eigenfunction(&partner, &h0_eigenfunction(n, kind)?)?);
    }
    let top = states.last().map_or(f64::INFINITY, |s| s.energy);
    for (&e, &which) in prediction.created_levels.iter().zip(&prediction.created_from) {
        if e < top {
            states.push(missing_state(&partner, which)?);
        }
    }
    states.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(states)
}
