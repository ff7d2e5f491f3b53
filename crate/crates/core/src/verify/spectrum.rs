//! Finite-difference spectrum of the partner Hamiltonian
//! `−d²/dx² + 8α²/sin²(2αx)`, extracted by Sturm-sequence bisection.

use crate::error::{Error, Result};
use crate::models::WellConfig;

/// Largest mode count the cross-check is meant for.
pub const MAX_MODES: usize = 10;
pub const MIN_GRID_POINTS: usize = 100;

/// Real symmetric tridiagonal matrix stored as its diagonal and the squares
/// of its off-diagonal (the Sturm count only needs `e_i²`).
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    diag: Vec<f64>,
    off_sq: Vec<f64>,
    pivot_floor: f64,
}

impl SymmetricTridiagonal {
    pub fn new(diag: Vec<f64>, off: &[f64]) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Parameter(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        let off_sq: Vec<f64> = off.iter().map(|e| e * e).collect();
        let scale = off_sq.iter().copied().fold(f64::MIN_POSITIVE, f64::max);
        Ok(SymmetricTridiagonal {
            diag,
            off_sq,
            pivot_floor: f64::MIN_POSITIVE * scale.max(1.0),
        })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `shift`: the count of negative
    /// pivots in the `LDLᵀ` factorization of `T − shift·I`.
    pub fn count_below(&self, shift: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - shift;
        for i in 0..self.dim() {
            if i > 0 {
                q = self.diag[i] - shift - self.off_sq[i - 1] / q;
            }
            if q.abs() < self.pivot_floor {
                q = -self.pivot_floor;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let off = |i: usize| -> f64 {
            let left = if i > 0 { self.off_sq[i - 1].sqrt() } else { 0.0 };
            let right = if i + 1 < n { self.off_sq[i].sqrt() } else { 0.0 };
            left + right
        };
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            let r = off(i);
            (lo.min(self.diag[i] - r), hi.max(self.diag[i] + r))
        })
    }

    /// The `index`-th smallest eigenvalue (0-based) by bisection.
    pub fn eigenvalue(&self, index: usize) -> Result<f64> {
        if index >= self.dim() {
            return Err(Error::Unresolvable {
                requested: index + 1,
                available: self.dim(),
            });
        }
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// Second-difference discretization on `x_i = (i + 1/2)h`, `h = π/(2α·N)`,
/// with Dirichlet ghost values. The half-step offset keeps every sample of
/// the potential finite.
pub fn fd_hamiltonian(cfg: &WellConfig, grid_points: usize) -> Result<SymmetricTridiagonal> {
    if grid_points < MIN_GRID_POINTS {
        return Err(Error::Parameter(format!(
            "need at least {MIN_GRID_POINTS} grid points, got {grid_points}"
        )));
    }
    let alpha = cfg.alpha();
    let h = cfg.length() / grid_points as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag = (0..grid_points)
        .map(|i| {
            let x = (i as f64 + 0.5) * h;
            let s = (2.0 * alpha * x).sin();
            2.0 * inv_h2 + 8.0 * alpha * alpha / (s * s)
        })
        .collect();
    let off = vec![-inv_h2; grid_points - 1];
    SymmetricTridiagonal::new(diag, &off)
}

/// Lowest `count` eigenvalues of the discretized partner Hamiltonian, ascending.
pub fn fd_spectrum(cfg: &WellConfig, grid_points: usize, count: usize) -> Result<Vec<f64>> {
    if count > MAX_MODES || count > grid_points {
        return Err(Error::Unresolvable {
            requested: count,
            available: MAX_MODES.min(grid_points),
        });
    }
    let h = fd_hamiltonian(cfg, grid_points)?;
    (0..count).map(|j| h.eigenvalue(j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_laplacian_matches_closed_form() {
        // Eigenvalues of tridiag(−1, 2, −1) are 2 − 2cos(jπ/(n+1)).
        let n = 50;
        let t = SymmetricTridiagonal::new(vec![2.0; n], &vec![-1.0; n - 1]).unwrap();
        for j in 0..n {
            let exact = 2.0 - 2.0 * (std::f64::consts::PI * (j + 1) as f64 / (n + 1) as f64).cos();
            assert!((t.eigenvalue(j).unwrap() - exact).abs() < 1e-13, "mode {j}");
        }
        assert_eq!(t.count_below(-0.1), 0);
        assert_eq!(t.count_below(4.1), n);
        assert!(t.eigenvalue(n).is_err());
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(SymmetricTridiagonal::new(vec![1.0, 2.0], &[]).is_err());
        assert!(SymmetricTridiagonal::new(vec![], &[]).is_err());
    }

    #[test]
    fn spectrum_argument_validation() {
        let cfg = WellConfig::new(1.0).unwrap();
        assert!(fd_spectrum(&cfg, 99, 1).is_err());
        assert!(matches!(fd_spectrum(&cfg, 1000, 11), Err(Error::Unresolvable { .. })));
        assert!(fd_spectrum(&cfg, 1000, 0).unwrap().is_empty());
    }

    #[test]
    fn low_modes_near_exact_energies() {
        let cfg = WellConfig::new(1.0).unwrap();
        let ev = fd_spectrum(&cfg, 1000, 4).unwrap();
        assert!(ev.windows(2).all(|w| w[0] < w[1]));
        for (n, e) in ev.iter().enumerate() {
            let exact = 4.0 * ((n + 2) as f64).powi(2);
            assert!(((e - exact) / exact).abs() < 1e-2, "mode {n}: {e}");
        }
        // No spurious mode below the ground-state band.
        let h = fd_hamiltonian(&cfg, 1000).unwrap();
        assert_eq!(h.count_below(16.0 * 0.99), 0);
    }
}
