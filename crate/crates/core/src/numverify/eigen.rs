use super::grid::GridSpec;
use crate::error::{Error, Result};

pub const MAX_LEVELS: usize = 15;
const MAX_BISECTIONS: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct EigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// |E(h/2) − E_extrapolated| per level, present after Richardson.
    pub error_estimates: Option<Vec<f64>>,
    /// Grid functions normalized so that Σ h·vᵢ² = 1.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    pub grid: GridSpec,
    pub extrapolated: bool,
}

// −½ d²/dx² + V as a symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiag {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiag {
    fn build<V: Fn(f64) -> f64>(v: &V, grid: &GridSpec) -> Result<Tridiag> {
        let h = grid.h();
        let mut diag = Vec::with_capacity(grid.n);
        for x in grid.points() {
            let vx = v(x);
            if !vx.is_finite() {
                return Err(Error::PotentialNotFinite { x });
            }
            diag.push(1.0 / (h * h) + vx);
        }
        Ok(Tridiag { diag, off: -0.5 / (h * h) })
    }

    // Number of eigenvalues strictly below lambda.
    fn sturm_count(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + lambda.abs() + self.off.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().fold(f64::INFINITY, |m, &d| m.min(d - r));
        let hi = self.diag.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d + r));
        (lo, hi)
    }

    // The j-th (0-based) eigenvalue by bisection on the Sturm count.
    fn eigenvalue(&self, j: usize, bounds: (f64, f64)) -> Result<f64> {
        let (mut lo, mut hi) = bounds;
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                return Ok(mid);
            }
            if self.sturm_count(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::Convergence { lo, hi })
    }

    // Inverse iteration with a Thomas solve.
    fn eigenvector(&self, lambda: f64, h: f64) -> Vec<f64> {
        let n = self.diag.len();
        let shift = lambda + 1e-10 * lambda.abs().max(1.0);
        let mut v = vec![1.0; n];
        let mut c = vec![0.0; n];
        let mut y = vec![0.0; n];
        for _ in 0..3 {
            let mut denom = self.diag[0] - shift;
            c[0] = self.off / denom;
            y[0] = v[0] / denom;
            for i in 1..n {
                denom = self.diag[i] - shift - self.off * c[i - 1];
                if denom == 0.0 {
                    denom = f64::EPSILON;
                }
                c[i] = self.off / denom;
                y[i] = (v[i] - self.off * y[i - 1]) / denom;
            }
            v[n - 1] = y[n - 1];
            for i in (0..n - 1).rev() {
                v[i] = y[i] - c[i] * v[i + 1];
            }
            let norm = (h * v.iter().map(|t| t * t).sum::<f64>()).sqrt();
            v.iter_mut().for_each(|t| *t /= norm);
        }
        // Fix the sign so the first sizeable entry is positive.
        let peak = v.iter().fold(0.0_f64, |m, t| m.max(t.abs()));
        if let Some(first) = v.iter().find(|t| t.abs() > 1e-3 * peak) {
            if *first < 0.0 {
                v.iter_mut().for_each(|t| *t = -*t);
            }
        }
        v
    }
}

/// Lowest `k` Dirichlet eigenvalues on a single grid.
pub fn solve_dirichlet_single<V: Fn(f64) -> f64>(
    v: V,
    grid: GridSpec,
    k: usize,
    with_vectors: bool,
) -> Result<EigenResult> {
    if k == 0 || k > MAX_LEVELS {
        return Err(Error::IndexRange { n: k, max: MAX_LEVELS });
    }
    let t = Tridiag::build(&v, &grid)?;
    let bounds = t.gershgorin();
    let eigenvalues = (0..k).map(|j| t.eigenvalue(j, bounds)).collect::<Result<Vec<_>>>()?;
    let eigenvectors = with_vectors.then(|| eigenvalues.iter().map(|&e| t.eigenvector(e, grid.h())).collect());
    Ok(EigenResult { eigenvalues, error_estimates: None, eigenvectors, grid, extrapolated: false })
}

/// Lowest `k` eigenvalues, Richardson-extrapolated from grids h and h/2.
pub fn solve_dirichlet<V: Fn(f64) -> f64>(v: V, grid: GridSpec, k: usize) -> Result<EigenResult> {
    let coarse = solve_dirichlet_single(&v, grid, k, false)?;
    let fine = solve_dirichlet_single(&v, grid.refined(), k, false)?;
    let (eigenvalues, errors) = coarse
        .eigenvalues
        .iter()
        .zip(&fine.eigenvalues)
        .map(|(c, f)| {
            let e = (4.0 * f - c) / 3.0;
            (e, (f - e).abs())
        })
        .unzip();
    Ok(EigenResult {
        eigenvalues,
        error_estimates: Some(errors),
        eigenvectors: None,
        grid,
        extrapolated: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn particle_in_a_box() {
        let g = GridSpec::new(10.0, 400).unwrap();
        let r = solve_dirichlet(|_| 0.0, g, 3).unwrap();
        for (j, e) in r.eigenvalues.iter().enumerate() {
            let n = (j + 1) as f64;
            let exact = 0.5 * (n * std::f64::consts::PI / 10.0).powi(2);
            assert!((e - exact).abs() < 1e-9, "{e} vs {exact}");
        }
    }

    #[test]
    fn vectors_normalized() {
        let g = GridSpec::new(10.0, 300).unwrap();
        let r = solve_dirichlet_single(|x| 0.5 * x * x, g, 2, true).unwrap();
        let vs = r.eigenvectors.unwrap();
        for v in &vs {
            let n: f64 = g.h() * v.iter().map(|t| t * t).sum::<f64>();
            assert!((n - 1.0).abs() < 1e-10);
        }
        let dot: f64 = g.h() * vs[0].iter().zip(&vs[1]).map(|(a, b)| a * b).sum::<f64>();
        assert!(dot.abs() < 1e-8);
    }

    #[test]
    fn non_finite_potential_is_reported() {
        let g = GridSpec::new(8.0, 100).unwrap();
        let r = solve_dirichlet_single(|x| if x > 4.0 { f64::NAN } else { 0.0 }, g, 1, false);
        assert!(matches!(r, Err(Error::PotentialNotFinite { .. })));
    }

    #[test]
    fn grid_guards() {
        assert!(GridSpec::new(7.0, 500).is_err());
        assert!(GridSpec::new(12.0, 99).is_err());
        assert_eq!(GridSpec::new(12.0, 100).unwrap().refined().n, 201);
    }
}
