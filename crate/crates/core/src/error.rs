use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("gamma has a pole at {0}")]
    Pole(f64),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("index {n} outside supported range 0..={max}")]
    IndexRange { n: usize, max: usize },

    #[error("seed vanishes at x = {x}")]
    SeedZero { x: f64 },

    #[error("factorization energies must satisfy eps2 < eps1 (eps1 = {eps1}, eps2 = {eps2})")]
    Ordering { eps1: f64, eps2: f64 },

    #[error("second factorization energy required for {0}")]
    MissingEpsilon(&'static str),

    #[error("rejected: {0}")]
    Rejected(String),

    #[error("singular transformation: reduced Wronskian changes sign near x = {x}")]
    Singular { x: f64 },

    #[error("energy {energy} coincides with a factorization energy")]
    EnergyCoincidence { energy: f64 },

    #[error("undetermined: {reason}")]
    Undetermined { reason: String },

    #[error("extremal state vanishes identically")]
    ZeroState,

    #[error("g vanishes at x = {x}")]
    NearZero { x: f64 },

    #[error("x = {x} lies within 1e-3 of a pole")]
    NearSingularity { x: f64 },

    #[error("finite-difference stencil leaves the domain at x = {x}")]
    Stencil { x: f64 },

    #[error("potential not finite at x = {x}")]
    PotentialNotFinite { x: f64 },

    #[error("eigenvalue bisection stalled in [{lo}, {hi}]")]
    Convergence { lo: f64, hi: f64 },

    #[error("invalid grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
