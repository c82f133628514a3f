use crate::error::{Error, Result};
use crate::seeds::Parity;
use std::fmt;
use std::str::FromStr;

/// The six transformation cases: one seed (order 1) or an ordered pair (order 2),
/// named by the parities of the seed(s) at ε₁ and ε₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformCase {
    Odd1,
    Even1,
    OddOdd,
    EvenEven,
    OddEven,
    EvenOdd,
}

impl TransformCase {
    pub const ALL: [TransformCase; 6] = [
        TransformCase::Odd1,
        TransformCase::Even1,
        TransformCase::OddOdd,
        TransformCase::EvenEven,
        TransformCase::OddEven,
        TransformCase::EvenOdd,
    ];

    pub fn order(self) -> u8 {
        match self {
            TransformCase::Odd1 | TransformCase::Even1 => 1,
            _ => 2,
        }
    }

    /// Parity of the seed at ε₁ and, for order 2, of the seed at ε₂.
    pub fn parities(self) -> (Parity, Option<Parity>) {
        use Parity::*;
        match self {
            TransformCase::Odd1 => (Odd, None),
            TransformCase::Even1 => (Even, None),
            TransformCase::OddOdd => (Odd, Some(Odd)),
            TransformCase::EvenEven => (Even, Some(Even)),
            TransformCase::OddEven => (Odd, Some(Even)),
            TransformCase::EvenOdd => (Even, Some(Odd)),
        }
    }

    pub fn from_parities(first: Parity, second: Option<Parity>) -> TransformCase {
        use Parity::*;
        match (first, second) {
            (Odd, None) => TransformCase::Odd1,
            (Even, None) => TransformCase::Even1,
            (Odd, Some(Odd)) => TransformCase::OddOdd,
            (Even, Some(Even)) => TransformCase::EvenEven,
            (Odd, Some(Even)) => TransformCase::OddEven,
            (Even, Some(Odd)) => TransformCase::EvenOdd,
        }
    }

    /// Coefficient p of the 1/x² term in the partner potential.
    pub fn inverse_square(self) -> f64 {
        match self {
            TransformCase::Odd1 => 1.0,
            TransformCase::Even1 => 0.0,
            TransformCase::OddOdd => 3.0,
            TransformCase::EvenEven => 1.0,
            TransformCase::OddEven | TransformCase::EvenOdd => 0.0,
        }
    }

    pub fn constant_shift(self) -> f64 {
        self.order() as f64
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformCase::Odd1 => "Odd1",
            TransformCase::Even1 => "Even1",
            TransformCase::OddOdd => "OddOdd",
            TransformCase::EvenEven => "EvenEven",
            TransformCase::OddEven => "OddEven",
            TransformCase::EvenOdd => "EvenOdd",
        }
    }
}

impl fmt::Display for TransformCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        TransformCase::ALL
            .into_iter()
            .find(|c| c.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Domain(format!("unknown case '{s}'")))
    }
}

/// Where an allowed (ε₁, ε₂) sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// Below the lowest level that bounds the case (ε₁ ≤ 3/2 or ε₁ ≤ 1/2).
    Below,
    /// Between two consecutive bounding levels, j = 0, 1, …
    Band(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub enum RangeCheck {
    Allowed(Window),
    Rejected(String),
}

impl RangeCheck {
    pub fn is_allowed(&self) -> bool {
        matches!(self, RangeCheck::Allowed(_))
    }
}

// Upper bound of the Below window, if the case has one.
fn below_bound(case: TransformCase) -> Option<f64> {
    match case {
        TransformCase::Odd1 | TransformCase::OddOdd => Some(1.5),
        TransformCase::Even1 | TransformCase::EvenEven | TransformCase::EvenOdd => Some(0.5),
        TransformCase::OddEven => None,
    }
}

// Band j is (lo + 4j)/2 ≤ ε₂ < ε₁ ≤ (hi + 4j)/2.
fn band_numerators(case: TransformCase) -> Option<(f64, f64)> {
    match case {
        TransformCase::OddOdd => Some((3.0, 7.0)),
        TransformCase::EvenEven => Some((1.0, 5.0)),
        TransformCase::OddEven => Some((1.0, 3.0)),
        TransformCase::EvenOdd => Some((3.0, 5.0)),
        _ => None,
    }
}

/// Decide whether the factorization energies give a partner free of singularities on x > 0.
pub fn validate_epsilon_range(case: TransformCase, eps1: f64, eps2: Option<f64>) -> Result<RangeCheck> {
    if !eps1.is_finite() {
        return Err(Error::Domain(format!("eps1 = {eps1}")));
    }
    if case.order() == 1 {
        let bound = below_bound(case).expect("order-1 cases have a bound");
        return Ok(if eps1 <= bound {
            RangeCheck::Allowed(Window::Below)
        } else {
            RangeCheck::Rejected(format!("epsilon above {}", if bound == 1.5 { "3/2" } else { "1/2" }))
        });
    }
    let eps2 = eps2.ok_or(Error::MissingEpsilon(case.name()))?;
    if !eps2.is_finite() {
        return Err(Error::Domain(format!("eps2 = {eps2}")));
    }
    if eps2 >= eps1 {
        return Err(Error::Ordering { eps1, eps2 });
    }
    if let Some(bound) = below_bound(case) {
        if eps1 <= bound {
            return Ok(RangeCheck::Allowed(Window::Below));
        }
    }
    let (lo, hi) = band_numerators(case).expect("order-2 cases have bands");
    let j = ((2.0 * eps2 - lo) / 4.0).floor();
    if j >= 0.0 && eps2 >= (lo + 4.0 * j) / 2.0 && eps1 <= (hi + 4.0 * j) / 2.0 {
        return Ok(RangeCheck::Allowed(Window::Band(j as u32)));
    }
    Ok(RangeCheck::Rejected(format!(
        "eps1 = {eps1}, eps2 = {eps2} fall in no nodeless window of {case}"
    )))
}
