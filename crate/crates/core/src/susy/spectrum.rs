use super::cases::{validate_epsilon_range, RangeCheck, TransformCase, Window};
use super::mapping::MissingWhich;
use crate::error::{Error, Result};

pub const MAX_PREDICTED_INDEX: usize = 20;
// Tolerance for "ε sits exactly on an oscillator level".
const LEVEL_TOL: f64 = 1e-12;

/// Eₙ = 2n + 3/2 (odd states) or 𝓔ₙ = 2n + 1/2 (even states).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelLabel {
    E(usize),
    CalE(usize),
}

impl LevelLabel {
    pub fn energy(self) -> f64 {
        match self {
            LevelLabel::E(n) => 2.0 * n as f64 + 1.5,
            LevelLabel::CalE(n) => 2.0 * n as f64 + 0.5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub label: LevelLabel,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpectrumPrediction {
    pub kept_levels: Vec<Level>,
    pub created_levels: Vec<f64>,
    /// Which missing state carries each created level.
    pub created_from: Vec<MissingWhich>,
    pub deleted_levels: Vec<f64>,
    pub moved_levels: Vec<(f64, f64)>,
}

impl SpectrumPrediction {
    /// Full predicted spectrum (kept and created), ascending.
    pub fn levels(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.kept_levels.iter().map(|l| l.energy).chain(self.created_levels.iter().copied()).collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

fn on(e: f64, level: f64) -> bool {
    (e - level).abs() <= LEVEL_TOL
}

/// Spectrum of the partner Hamiltonian for an allowed case, levels n ≤ `n_max` of H₀.
pub fn predict_spectrum(case: TransformCase, eps1: f64, eps2: Option<f64>, n_max: usize) -> Result<SpectrumPrediction> {
    if n_max > MAX_PREDICTED_INDEX {
        return Err(Error::IndexRange { n: n_max, max: MAX_PREDICTED_INDEX });
    }
    let window = match validate_epsilon_range(case, eps1, eps2)? {
        RangeCheck::Allowed(w) => w,
        RangeCheck::Rejected(why) => return Err(Error::Rejected(why)),
    };
    let e2 = eps2.unwrap_or(f64::NAN);
    let odd = |n: usize| LevelLabel::E(n).energy();
    let even = |n: usize| LevelLabel::CalE(n).energy();

    let mut deleted: Vec<LevelLabel> = Vec::new();
    let mut created: Option<(f64, MissingWhich)> = None;
    let base_odd = !matches!(case, TransformCase::Even1 | TransformCase::EvenEven);

    match (case, window) {
        (TransformCase::Odd1, _) => {
            if on(eps1, odd(0)) {
                deleted.push(LevelLabel::E(0));
            }
        }
        (TransformCase::Even1, _) => {
            if on(eps1, even(0)) {
                deleted.push(LevelLabel::CalE(0));
            }
        }
        (TransformCase::OddOdd, Window::Below) => {
            if on(eps1, odd(0)) {
                deleted.push(LevelLabel::E(0));
            }
        }
        (TransformCase::EvenEven, Window::Below) => {
            if on(eps1, even(0)) {
                deleted.push(LevelLabel::CalE(0));
            }
        }
        (TransformCase::OddOdd, Window::Band(j)) | (TransformCase::EvenEven, Window::Band(j)) => {
            let j = j as usize;
            let (label, level): (fn(usize) -> LevelLabel, fn(usize) -> f64) = if case == TransformCase::OddOdd {
                (LevelLabel::E, |n| LevelLabel::E(n).energy())
            } else {
                (LevelLabel::CalE, |n| LevelLabel::CalE(n).energy())
            };
            if on(e2, level(j)) {
                deleted.push(label(j));
            }
            if on(eps1, level(j + 1)) {
                deleted.push(label(j + 1));
            }
        }
        (TransformCase::OddEven, Window::Band(j)) => {
            let j = j as usize;
            match (on(e2, even(j)), on(eps1, odd(j))) {
                (false, false) => created = Some((e2, MissingWhich::Eps2)),
                (false, true) => {
                    deleted.push(LevelLabel::E(j));
                    created = Some((e2, MissingWhich::Eps2));
                }
                (true, false) => {}
                (true, true) => deleted.push(LevelLabel::E(j)),
            }
        }
        (TransformCase::EvenOdd, Window::Below) => {
            if !on(eps1, even(0)) {
                created = Some((eps1, MissingWhich::Eps1));
            }
        }
        (TransformCase::EvenOdd, Window::Band(j)) => {
            let j = j as usize;
            match (on(e2, odd(j)), on(eps1, even(j + 1))) {
                (false, false) => created = Some((eps1, MissingWhich::Eps1)),
                (true, false) => {
                    deleted.push(LevelLabel::E(j));
                    created = Some((eps1, MissingWhich::Eps1));
                }
                (false, true) => {}
                (true, true) => deleted.push(LevelLabel::E(j)),
            }
        }
        (TransformCase::OddEven, Window::Below) => unreachable!("OddEven has no window below E0"),
    }

    let kept_levels = (0..=n_max)
        .map(|n| if base_odd { LevelLabel::E(n) } else { LevelLabel::CalE(n) })
        .filter(|l| !deleted.contains(l))
        .map(|label| Level { energy: label.energy(), label })
        .collect();
    let deleted_levels: Vec<f64> = deleted.iter().map(|l| l.energy()).collect();
    let mut out = SpectrumPrediction { kept_levels, deleted_levels, ..Default::default() };
    if let Some((e, which)) = created {
        out.created_levels.push(e);
        out.created_from.push(which);
        // A deletion paired with a creation is a level that moved.
        if let Some(&d) = out.deleted_levels.first() {
            out.moved_levels.push((d, e));
        }
    }
    Ok(out)
}
