use crate::error::{Error, Result};

/// Uniform interior grid xᵢ = i·h, i = 1..=n, h = l/(n+1), Dirichlet at 0 and l.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub l: f64,
    pub n: usize,
}

impl GridSpec {
    pub const DEFAULT: GridSpec = GridSpec { l: 12.0, n: 4000 };

    pub fn new(l: f64, n: usize) -> Result<GridSpec> {
        if !(l.is_finite() && l >= 8.0) {
            return Err(Error::Grid(format!("L = {l} must be at least 8")));
        }
        if n < 100 {
            return Err(Error::Grid(format!("N = {n} must be at least 100")));
        }
        Ok(GridSpec { l, n })
    }

    pub fn h(&self) -> f64 {
        self.l / (self.n + 1) as f64
    }

    /// The i-th point, 1-based.
    pub fn x(&self, i: usize) -> f64 {
        i as f64 * self.h()
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.n).map(|i| self.x(i))
    }

    /// Same interval with the spacing halved.
    pub fn refined(&self) -> GridSpec {
        GridSpec { l: self.l, n: 2 * self.n + 1 }
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::DEFAULT
    }
}
