//! One intertwining step from the square well.
//!
//! Factorizing `H₀ = L†L + ω²` with `L = d/dx + W` and swapping the factors
//! gives the partner `H₁ = LL† + ω²`. Its eigenfunctions are `χ_k = Lφ_k`
//! with the same energies `ε_k`. The seed is always the nodeless ground
//! state `φ₁`, so `W = −φ₁′/φ₁ = −2α·cot(2αx)` and `ω² = ε₁ = 4α²`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::models::{box_energy, WellConfig};

/// Everything needed to intertwine square-well states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarbouxContext {
    cfg: WellConfig,
    omega_sq: f64,
}

impl DarbouxContext {
    /// Context seeded with the ground state `φ₁`.
    pub fn new(cfg: WellConfig) -> Self {
        DarbouxContext {
            cfg,
            omega_sq: box_energy(&cfg, 1),
        }
    }

    /// Only `seed_index = 1` is accepted: every excited well state has
    /// interior nodes, which would make `W` singular inside the interval.
    pub fn with_seed(cfg: WellConfig, seed_index: u32) -> Result<Self> {
        if seed_index != 1 {
            return Err(Error::Parameter(format!(
                "seed state φ_{seed_index} has interior nodes; only the ground state φ_1 gives a regular partner"
            )));
        }
        Ok(Self::new(cfg))
    }

    pub fn config(&self) -> &WellConfig {
        &self.cfg
    }

    pub fn seed_index(&self) -> u32 {
        1
    }

    /// Factorization constant `ω² = ε₁`.
    pub fn omega_sq(&self) -> f64 {
        self.omega_sq
    }

    /// `W(x) = −2α·cot(2αx)`.
    pub fn superpotential(&self, x: f64) -> Result<f64> {
        self.cfg.check_open(x)?;
        let two_a = 2.0 * self.cfg.alpha();
        let (s, c) = (two_a * x).sin_cos();
        Ok(-two_a * c / s)
    }

    /// `W′(x) = 4α²/sin²(2αx)`.
    pub fn superpotential_derivative(&self, x: f64) -> Result<f64> {
        self.cfg.check_open(x)?;
        let two_a = 2.0 * self.cfg.alpha();
        let s = (two_a * x).sin();
        Ok(two_a * two_a / (s * s))
    }

    /// `V₁ = W′ + W² + ω²`, which reduces to `8α²/sin²(2αx)`.
    pub fn partner_potential(&self, x: f64) -> Result<f64> {
        let w = self.superpotential(x)?;
        Ok(self.superpotential_derivative(x)? + w * w + self.omega_sq)
    }

    /// `χ_k = Lφ_k = √(4α/π)·2α·[k cos(2αkx) − cot(2αx) sin(2αkx)]`.
    ///
    /// Un-normalized; `k = 1` is annihilated and returns (numerically) zero.
    pub fn intertwine(&self, k: u32, x: f64) -> Result<f64> {
        self.cfg.check_open(x)?;
        let alpha = self.cfg.alpha();
        let t = 2.0 * alpha * x;
        let kf = f64::from(k);
        let (sk, ck) = (kf * t).sin_cos();
        let cot = t.cos() / t.sin();
        Ok((4.0 * alpha / PI).sqrt() * 2.0 * alpha * (kf * ck - cot * sk))
    }

    /// `Ñ_k = 1/√(ε_k − ω²) = 1/(2α√(k²−1))`.
    pub fn transform_normalization(&self, k: u32) -> Result<f64> {
        if k < 2 {
            return Err(Error::Annihilated { k });
        }
        Ok(1.0 / (box_energy(&self.cfg, k) - self.omega_sq).sqrt())
    }

    /// Normalized partner eigenstate `χ̃_k = Ñ_k·χ_k` with energy `ε_k`.
    pub fn transformed_eigenpair(&self, k: u32) -> Result<TransformedState> {
        let scale = self.transform_normalization(k)?;
        Ok(TransformedState {
            ctx: *self,
            k,
            energy: box_energy(&self.cfg, k),
            scale,
        })
    }
}

/// A normalized eigenstate of the partner Hamiltonian, evaluated through the
/// literal intertwining formula (singular only at the endpoints).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedState {
    ctx: DarbouxContext,
    k: u32,
    energy: f64,
    scale: f64,
}

impl TransformedState {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn profile(&self, x: f64) -> Result<f64> {
        Ok(self.scale * self.ctx.intertwine(self.k, x)?)
    }
}
