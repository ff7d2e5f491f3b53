//! Closed trigonometric eigenfunctions of the `κ = λ = 2` potential and the
//! identities linking them to the hypergeometric form.
//!
//! The partner eigenstates are
//! `χ̃_k(x) = N_k[k cos(kt) − cot(t) sin(kt)]`, `t = 2αx`,
//! with `N_k = √(4α/π)/√(k²−1)`. The cotangent term has removable
//! singularities at `t ∈ {0, π}`, so it is evaluated as
//! `cos(t)·U_{k−1}(cos t)` (Chebyshev polynomial of the second kind). The
//! hypergeometric states `ψ_n` coincide with `χ̃_{n+2}` once their amplitude
//! is `A_n = N_{n+2}/C_n`. The `C_n` are computed exactly from the midpoint
//! values of `₂F₁` at `z = 1/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hypergeom::{RealPolynomial, TerminatingHypergeometric};
use crate::models::{HypergeometricState, PTParams, WellConfig};
use crate::numerics::{chebyshev_u_with_derivatives, Rational};

/// Default exclusion radius, in `t = 2αx` units, around the nodes of `sin t`.
pub const DEFAULT_NODE_MARGIN: f64 = 1e-3;

/// Second derivatives are refused this close (in `x`) to either endpoint.
const CURVATURE_ENDPOINT_GUARD: f64 = 1e-6;

/// `N_k = √(4α/π)/√(k²−1)`.
pub fn trig_norm(k: u32, alpha: f64) -> f64 {
    let k = f64::from(k);
    (4.0 * alpha / PI).sqrt() / (k * k - 1.0).sqrt()
}

/// `(−1)^p` for a nonnegative `p`.
fn sign(p: u32) -> i64 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Value and first two `x`-derivatives of an eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

/// Normalized partner eigenfunction `χ̃_k`, `k ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigEigenfunction {
    k: u32,
    cfg: WellConfig,
    norm: f64,
}

impl TrigEigenfunction {
    pub fn new(k: u32, cfg: WellConfig) -> Result<Self> {
        if k < 2 {
            return Err(Error::Annihilated { k });
        }
        Ok(TrigEigenfunction {
            k,
            cfg,
            norm: trig_norm(k, cfg.alpha()),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn config(&self) -> &WellConfig {
        &self.cfg
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// `ε_k = 4α²k²`.
    pub fn energy(&self) -> f64 {
        crate::models::box_energy(&self.cfg, self.k)
    }

    /// `χ̃_k(x)` on the closed interval; zero at both endpoints.
    pub fn eval(&self, x: f64) -> Result<f64> {
        self.cfg.check_closed(x)?;
        let t = 2.0 * self.cfg.alpha() * x;
        Ok(self.norm * trig_bracket(self.k, t))
    }

    /// `χ̃_k`, `χ̃_k′`, `χ̃_k″` by differentiating the Chebyshev form term by term.
    pub fn derivatives(&self, x: f64) -> Result<Derivatives> {
        self.cfg.check_open(x)?;
        let len = self.cfg.length();
        if x < CURVATURE_ENDPOINT_GUARD || len - x < CURVATURE_ENDPOINT_GUARD {
            return Err(Error::Domain {
                x,
                lo: CURVATURE_ENDPOINT_GUARD,
                hi: len - CURVATURE_ENDPOINT_GUARD,
            });
        }
        let alpha = self.cfg.alpha();
        let t = 2.0 * alpha * x;
        let k = f64::from(self.k);
        let (s, c) = t.sin_cos();
        let (sk, ck) = (k * t).sin_cos();
        let u = chebyshev_u_with_derivatives(self.k - 1, c);

        // g(t) = cos t · U_{k−1}(cos t)
        let g = c * u.value;
        let dg = -s * (u.value + c * u.first);
        let d2g = -c * (u.value + c * u.first) + s * s * (2.0 * u.first + c * u.second);

        let f = k * ck - g;
        let df = -k * k * sk - dg;
        let d2f = -k * k * k * ck - d2g;
        Ok(Derivatives {
            value: self.norm * f,
            first: self.norm * 2.0 * alpha * df,
            second: self.norm * 4.0 * alpha * alpha * d2f,
        })
    }
}

/// `k cos(kt) − cos(t)·U_{k−1}(cos t)`, equal to `k cos(kt) − cot(t) sin(kt)`.
pub fn trig_bracket(k: u32, t: f64) -> f64 {
    let c = t.cos();
    f64::from(k) * (f64::from(k) * t).cos() - c * chebyshev_u_with_derivatives(k - 1, c).value
}

/// `χ̃_{n+2}(π/(4α))` and `χ̃′_{n+2}(π/(4α))` from the closed midpoint formulas
/// `−N(n+2)cos(nπ/2)` and `N·2α[(n+2)²−1]sin(nπ/2)`.
pub fn trig_midpoint(n: u32, cfg: &WellConfig) -> (f64, f64) {
    let k = n + 2;
    let norm = trig_norm(k, cfg.alpha());
    let (cos_half, sin_half) = match n % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    };
    let value = -norm * f64::from(k) * cos_half;
    let first = norm * 2.0 * cfg.alpha() * f64::from(k * k - 1) * sin_half;
    (value, first)
}

/// `C_n` by parity: for `n = 2m`,
/// `C = (−1)^{m+1}/(8(m+1)) · ₂F₁(−2m, 2m+4; 5/2; 1/2)`; for `n = 2m+1`,
/// `C = (−1)^{m+1}/20 · (2m+1)(2m+5)/(4(m+1)(m+2)) · ₂F₁(−2m, 2m+6; 7/2; 1/2)`.
pub fn coefficient_c(n: u32) -> Rational {
    let half = Rational::new(1, 2);
    let m = n / 2;
    let mi = i64::from(m);
    if n.is_multiple_of(2) {
        let f = TerminatingHypergeometric::symmetric_pt(2 * m).eval_exact(&half);
        Rational::new(sign(m + 1), 8 * (mi + 1)) * f
    } else {
        let f = TerminatingHypergeometric::new(2 * m, Rational::integer(2 * mi + 6), Rational::new(7, 2))
            .expect("c = 7/2 is valid")
            .eval_exact(&half);
        Rational::new(sign(m + 1), 20)
            * Rational::new((2 * mi + 1) * (2 * mi + 5), 4 * (mi + 1) * (mi + 2))
            * f
    }
}

/// The same coefficient written directly in `n`:
/// even `n`: `(−1)^{n/2+1} ₂F₁(−n, n+4; 5/2; 1/2) / (4(n+2))`;
/// odd `n`: `(−1)^{(n−1)/2+1} n(n+4) ₂F₁(−n+1, n+5; 7/2; 1/2) / (20((n+2)²−1))`.
pub fn coefficient_c_by_degree(n: u32) -> Rational {
    let half = Rational::new(1, 2);
    let ni = i64::from(n);
    if n.is_multiple_of(2) {
        let f = TerminatingHypergeometric::symmetric_pt(n).eval_exact(&half);
        f * Rational::new(sign(n / 2 + 1), 4 * (ni + 2))
    } else {
        let (factor, shifted) = TerminatingHypergeometric::symmetric_pt(n).derivative();
        // factor = −n(n+4)/(5/2); shifted = ₂F₁(−(n−1), n+5; 7/2; ·)
        debug_assert_eq!(factor, Rational::new(-2 * ni * (ni + 4), 5));
        let f = shifted.eval_exact(&half);
        f * Rational::new(sign((n - 1) / 2 + 1) * ni * (ni + 4), 20 * ((ni + 2) * (ni + 2) - 1))
    }
}

/// `A_n = N_{n+2}/C_n`, sign included, so that `ψ_n = χ̃_{n+2}`.
pub fn normalization_a(n: u32, cfg: &WellConfig) -> Result<f64> {
    let c = coefficient_c(n);
    if c.is_zero() {
        return Err(Error::VanishingDenominator(format!("C_{n} = 0")));
    }
    Ok(trig_norm(n + 2, cfg.alpha()) / c.to_f64())
}

/// Normalized hypergeometric eigenstate `ψ_n` with amplitude `A_n`.
pub fn hypergeometric_eigenstate(n: u32, cfg: &WellConfig) -> Result<HypergeometricState> {
    let amplitude = normalization_a(n, cfg)?;
    Ok(HypergeometricState::new(*cfg, PTParams::symmetric(), n, amplitude))
}

/// `ψ_n(π/(4α))` and `ψ_n′(π/(4α))` in the hypergeometric form:
/// `A_n/4 · ₂F₁(−n, n+4; 5/2; 1/2)` and
/// `A_n α/10 · (−n)(n+4) · ₂F₁(−n+1, n+5; 7/2; 1/2)`, both `₂F₁` values exact.
pub fn hypergeometric_midpoint(n: u32, cfg: &WellConfig) -> Result<(f64, f64)> {
    let a = normalization_a(n, cfg)?;
    let half = Rational::new(1, 2);
    let family = TerminatingHypergeometric::symmetric_pt(n);
    let value = a * (family.eval_exact(&half) / 4).to_f64();
    let (factor, shifted) = family.derivative();
    // dz/dx = α·sin(2αx) = α at the midpoint; sin²·cos² has zero slope there.
    let slope = factor * shifted.eval_exact(&half) / 4;
    Ok((value, a * cfg.alpha() * slope.to_f64()))
}

/// Which hypergeometric/trigonometric identity a [`TrigIdentity`] encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// `₂F₁(−n, n+4; 5/2; sin²αx) = 4C_n·[bracket_{n+2}]/sin²(2αx)`.
    Base { n: u32 },
    /// Even ratio form, normalized by `₂F₁(−2m, 2m+4; 5/2; 1/2)`.
    Even { m: u32 },
    /// Odd ratio form, normalized by `₂F₁(−2m, 2m+6; 7/2; 1/2)`.
    Odd { m: u32 },
}

/// Both sides of an identity
/// `F(sin²αx)/D = P·[k cos(kt) − cot(t) sin(kt)]/sin²(t)`, `t = 2αx`.
#[derive(Debug, Clone)]
pub struct TrigIdentity {
    kind: IdentityKind,
    k: u32,
    numerator: RealPolynomial,
    denominator: f64,
    prefactor: f64,
}

impl TrigIdentity {
    pub fn new(kind: IdentityKind) -> Result<Self> {
        let half = Rational::new(1, 2);
        let (k, family, denominator, prefactor) = match kind {
            IdentityKind::Base { n } => {
                let c = coefficient_c(n);
                if c.is_zero() {
                    return Err(Error::VanishingDenominator(format!("C_{n} = 0")));
                }
                (n + 2, TerminatingHypergeometric::symmetric_pt(n), Rational::one(), c * 4)
            }
            IdentityKind::Even { m } => {
                let family = TerminatingHypergeometric::symmetric_pt(2 * m);
                let d = family.eval_exact(&half);
                (2 * m + 2, family, d, Rational::new(sign(m + 1), 2 * (i64::from(m) + 1)))
            }
            IdentityKind::Odd { m } => {
                let mi = i64::from(m);
                let d = TerminatingHypergeometric::new(2 * m, Rational::integer(2 * mi + 6), Rational::new(7, 2))
                    .expect("c = 7/2 is valid")
                    .eval_exact(&half);
                let p = Rational::new(sign(m + 1), 20)
                    * Rational::new((2 * mi + 1) * (2 * mi + 5), (mi + 1) * (mi + 2));
                (2 * m + 3, TerminatingHypergeometric::symmetric_pt(2 * m + 1), d, p)
            }
        };
        if denominator.is_zero() {
            return Err(Error::VanishingDenominator(format!(
                "normalizing ₂F₁ value at z = 1/2 is zero for {kind:?}"
            )));
        }
        Ok(TrigIdentity {
            kind,
            k,
            numerator: family.polynomial(),
            denominator: denominator.to_f64(),
            prefactor: prefactor.to_f64(),
        })
    }

    pub fn kind(&self) -> IdentityKind {
        self.kind
    }

    /// `(lhs, rhs)` at `x`; refuses points within `margin` (in `t`) of a node
    /// of `sin t`, where the right side is a 0/0 cancellation.
    pub fn sides(&self, cfg: &WellConfig, x: f64, margin: f64) -> Result<(f64, f64)> {
        cfg.check_open(x)?;
        let t = 2.0 * cfg.alpha() * x;
        if t.min(PI - t) < margin {
            return Err(Error::Stability { t, margin });
        }
        let (s, _) = cfg.sin_cos(x);
        let lhs = self.numerator.eval(s * s) / self.denominator;
        let st = t.sin();
        let rhs = self.prefactor * trig_bracket(self.k, t) / (st * st);
        Ok((lhs, rhs))
    }

    /// Two-sided comparison over `points` equally spaced `t`-values in
    /// `[margin, π − margin]`.
    pub fn sweep(&self, cfg: &WellConfig, points: usize, margin: f64) -> Result<IdentitySweep> {
        let mut sweep = IdentitySweep::default();
        let (lo, hi) = (margin, PI - margin);
        let step = if points > 1 { (hi - lo) / (points - 1) as f64 } else { 0.0 };
        for i in 0..points {
            let t = lo + step * i as f64;
            // Keep the grid inside the margin despite rounding in t ↦ x ↦ t.
            let x = (t / (2.0 * cfg.alpha())).clamp(
                margin / (2.0 * cfg.alpha()) * (1.0 + 1e-12),
                (PI - margin) / (2.0 * cfg.alpha()) * (1.0 - 1e-12),
            );
            let (lhs, rhs) = self.sides(cfg, x, margin)?;
            sweep.max_abs_dev = sweep.max_abs_dev.max((lhs - rhs).abs());
            sweep.max_abs_lhs = sweep.max_abs_lhs.max(lhs.abs());
            sweep.points += 1;
        }
        Ok(sweep)
    }
}

/// Summary of a two-sided identity comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct IdentitySweep {
    pub points: usize,
    pub max_abs_dev: f64,
    pub max_abs_lhs: f64,
}

impl IdentitySweep {
    /// `max|lhs − rhs| / max|lhs|`.
    pub fn relative(&self) -> f64 {
        if self.max_abs_lhs == 0.0 {
            self.max_abs_dev
        } else {
            self.max_abs_dev / self.max_abs_lhs
        }
    }
}

/// Sides of the base identity at `x` with the default node margin.
pub fn identity_sides(n: u32, cfg: &WellConfig, x: f64) -> Result<(f64, f64)> {
    TrigIdentity::new(IdentityKind::Base { n })?.sides(cfg, x, DEFAULT_NODE_MARGIN)
}

/// Sides of the even ratio identity at `x` with the default node margin.
pub fn ratio_identity_even(m: u32, cfg: &WellConfig, x: f64) -> Result<(f64, f64)> {
    TrigIdentity::new(IdentityKind::Even { m })?.sides(cfg, x, DEFAULT_NODE_MARGIN)
}

/// Sides of the odd ratio identity at `x` with the default node margin.
pub fn ratio_identity_odd(m: u32, cfg: &WellConfig, x: f64) -> Result<(f64, f64)> {
    TrigIdentity::new(IdentityKind::Odd { m })?.sides(cfg, x, DEFAULT_NODE_MARGIN)
}
