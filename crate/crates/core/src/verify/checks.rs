//! Individual quantitative checks of the closed forms and integrals.

use std::f64::consts::PI;

use crate::closed_form::{
    coefficient_c, coefficient_c_by_degree, hypergeometric_eigenstate, trig_bracket, IdentityKind,
    TrigEigenfunction, TrigIdentity,
};
use crate::darboux::DarbouxContext;
use crate::error::Result;
use crate::hypergeom::{midpoint_vanishing, RealPolynomial, TerminatingHypergeometric};
use crate::models::{box_eigenfunction_derivatives, box_energy, WellConfig};
use crate::numerics::Rational;

use super::integrate::Integrator;
use super::report::CheckResult;
use super::spectrum::fd_spectrum;
use super::Tolerances;

/// Source of the coefficients `C_n`; swapped out in tests to make sure
/// corrupted coefficients are caught.
pub type CoefficientFn = fn(u32) -> Rational;

/// Sample counts for grid-based checks.
pub const IDENTITY_POINTS: usize = 1000;
pub const CORRESPONDENCE_POINTS: usize = 500;
pub const RESIDUAL_POINTS: usize = 1000;

/// Runs checks for one `α` with a fixed quadrature setup.
#[derive(Debug, Clone)]
pub struct Verifier {
    cfg: WellConfig,
    integrator: Integrator,
    tolerances: Tolerances,
    coefficient: CoefficientFn,
}

impl Verifier {
    pub fn new(cfg: WellConfig, integrator: Integrator, tolerances: Tolerances) -> Self {
        Verifier {
            cfg,
            integrator,
            tolerances,
            coefficient: coefficient_c,
        }
    }

    pub fn with_coefficients(mut self, coefficient: CoefficientFn) -> Self {
        self.coefficient = coefficient;
        self
    }

    pub fn config(&self) -> &WellConfig {
        &self.cfg
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tolerances
    }

    fn c_squared(&self, n: u32) -> f64 {
        let c = (self.coefficient)(n);
        (&c * &c).to_f64()
    }

    fn series(n: u32) -> RealPolynomial {
        TerminatingHypergeometric::symmetric_pt(n).polynomial()
    }

    /// `∫₀¹ z^{3/2}(1−z)^{3/2} g(z) dz` for smooth `g`.
    ///
    /// The weight is only `C¹` at the endpoints, which caps Gauss-Legendre at
    /// an algebraic rate. Splitting at `z = 1/2` and substituting `z = u²` on
    /// the left, `1 − z = u²` on the right, makes both halves smooth:
    /// `∫₀^{1/√2} 2u⁴(1−u²)^{3/2} g(u²) du + ∫₀^{1/√2} 2u⁴(1−u²)^{3/2} g(1−u²) du`.
    fn beta_weighted<G: Fn(f64) -> f64>(&self, g: G) -> Result<f64> {
        let top = std::f64::consts::FRAC_1_SQRT_2;
        let jacobian_weight = |u: f64| {
            let u2 = u * u;
            2.0 * u2 * u2 * (1.0 - u2).powf(1.5)
        };
        let left = self
            .integrator
            .integrate(|u| jacobian_weight(u) * g(u * u), 0.0, top)?;
        let right = self
            .integrator
            .integrate(|u| jacobian_weight(u) * g(1.0 - u * u), 0.0, top)?;
        Ok(left + right)
    }

    /// `∫₀^π [k cos kx − cot x sin kx]² dx = π/2·(k²−1)`.
    pub fn check_trig_norm(&self, k: u32) -> Result<CheckResult> {
        let computed = self
            .integrator
            .integrate(|t| trig_bracket(k, t).powi(2), 0.0, PI)?;
        let reference = PI / 2.0 * f64::from(k * k - 1);
        Ok(CheckResult::new(
            format!("trig_norm[k={k}]"),
            computed,
            reference,
            self.tolerances.quadrature,
        ))
    }

    /// `∫₀^{π/2} sin⁴x cos⁴x ₂F₁²(−n, n+4; 5/2; sin²x) dx = π/4·((n+2)²−1)·C_n²`
    /// and its `z = sin²x` form over `(0, 1)` with reference `π/2·((n+2)²−1)·C_n²`.
    pub fn check_hypergeom_norm(&self, n: u32) -> Result<[CheckResult; 2]> {
        let poly = Self::series(n);
        let weight = f64::from((n + 2) * (n + 2) - 1) * self.c_squared(n);
        let x_form = self.integrator.integrate(
            |x| {
                let (s, c) = x.sin_cos();
                let f = poly.eval(s * s);
                (s * c).powi(4) * f * f
            },
            0.0,
            PI / 2.0,
        )?;
        let z_form = self.beta_weighted(|z| {
            let f = poly.eval(z);
            f * f
        })?;
        let tol = self.tolerances.quadrature;
        Ok([
            CheckResult::new(format!("hypergeom_norm_x[n={n}]"), x_form, PI / 4.0 * weight, tol),
            CheckResult::new(format!("hypergeom_norm_z[n={n}]"), z_form, PI / 2.0 * weight, tol),
        ])
    }

    /// The `n = 0` z-form integral against `B(5/2, 5/2) = 3π/128`, a
    /// reference that does not involve `C_0`.
    pub fn check_beta_reference(&self) -> Result<CheckResult> {
        let computed = self.beta_weighted(|_| 1.0)?;
        Ok(CheckResult::new(
            "beta_5/2_5/2",
            computed,
            3.0 * PI / 128.0,
            self.tolerances.quadrature,
        ))
    }

    /// `⟨x⟩_k = ∫ x·χ̃_k² dx = π/(4α)`.
    pub fn check_expectation_x(&self, k: u32) -> Result<CheckResult> {
        let chi = TrigEigenfunction::new(k, self.cfg)?;
        let computed = self.integrator.integrate(
            |x| x * chi.eval(x).unwrap_or(f64::NAN).powi(2),
            0.0,
            self.cfg.length(),
        )?;
        Ok(CheckResult::new(
            format!("expectation_x[k={k}]"),
            computed,
            self.cfg.midpoint(),
            self.tolerances.expectation,
        ))
    }

    /// `∫₀^π [k cos kx − cot x sin kx]²·x dx = π²/4·(k²−1)`.
    pub fn check_first_moment_trig(&self, k: u32) -> Result<CheckResult> {
        let computed = self
            .integrator
            .integrate(|t| t * trig_bracket(k, t).powi(2), 0.0, PI)?;
        Ok(CheckResult::new(
            format!("first_moment_trig[k={k}]"),
            computed,
            PI * PI / 4.0 * f64::from(k * k - 1),
            self.tolerances.quadrature,
        ))
    }

    /// `∫₀^{π/2} sin⁴x cos⁴x ₂F₁²(…; sin²x)·x dx = π²/16·((n+2)²−1)·C_n²`.
    pub fn check_first_moment_hypergeom(&self, n: u32) -> Result<CheckResult> {
        let poly = Self::series(n);
        let computed = self.integrator.integrate(
            |x| {
                let (s, c) = x.sin_cos();
                let f = poly.eval(s * s);
                x * (s * c).powi(4) * f * f
            },
            0.0,
            PI / 2.0,
        )?;
        let reference = PI * PI / 16.0 * f64::from((n + 2) * (n + 2) - 1) * self.c_squared(n);
        Ok(CheckResult::new(
            format!("first_moment_hypergeom[n={n}]"),
            computed,
            reference,
            self.tolerances.quadrature,
        ))
    }

    /// Upper triangle (diagonal included) of the Gram matrix of `χ̃_2..χ̃_{k_max}`.
    pub fn check_orthonormality(&self, k_max: u32) -> Result<Vec<CheckResult>> {
        let states = (2..=k_max)
            .map(|k| TrigEigenfunction::new(k, self.cfg))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for (i, a) in states.iter().enumerate() {
            for b in &states[i..] {
                let g = self.integrator.integrate(
                    |x| a.eval(x).unwrap_or(f64::NAN) * b.eval(x).unwrap_or(f64::NAN),
                    0.0,
                    self.cfg.length(),
                )?;
                let reference = if a.k() == b.k() { 1.0 } else { 0.0 };
                out.push(CheckResult::new(
                    format!("gram[{}][{}]", a.k(), b.k()),
                    g,
                    reference,
                    self.tolerances.orthonormality,
                ));
            }
        }
        Ok(out)
    }

    /// `max |−χ̃″ + V₁χ̃ − ε_kχ̃| / ε_k` over a grid staying `margin` (in
    /// `t = 2αx`) away from both endpoints.
    pub fn check_residual(&self, k: u32, margin: f64) -> Result<CheckResult> {
        let chi = TrigEigenfunction::new(k, self.cfg)?;
        let ctx = DarbouxContext::new(self.cfg);
        let energy = chi.energy();
        let two_a = 2.0 * self.cfg.alpha();
        let mut worst = 0.0f64;
        for t in interior_grid(margin, PI - margin, RESIDUAL_POINTS) {
            let x = t / two_a;
            let d = chi.derivatives(x)?;
            let r = -d.second + ctx.partner_potential(x)? * d.value - energy * d.value;
            worst = worst.max(r.abs() / energy);
        }
        Ok(CheckResult::new(
            format!("residual[k={k}]"),
            worst,
            0.0,
            self.tolerances.residual,
        ))
    }

    /// Same residual for the square-well state `φ_k` against `H₀`.
    pub fn check_box_residual(&self, k: u32) -> Result<CheckResult> {
        let energy = box_energy(&self.cfg, k);
        let len = self.cfg.length();
        let mut worst = 0.0f64;
        for x in interior_grid(0.0, len, RESIDUAL_POINTS) {
            let (_, second) = box_eigenfunction_derivatives(&self.cfg, k, x)?;
            let phi = crate::models::box_eigenfunction(&self.cfg, k, x)?;
            worst = worst.max((-second - energy * phi).abs() / energy);
        }
        Ok(CheckResult::new(
            format!("box_residual[k={k}]"),
            worst,
            0.0,
            self.tolerances.residual,
        ))
    }

    /// `max |lhs − rhs| / max |lhs|` for one identity over the node-excluding grid.
    pub fn check_identity(&self, kind: IdentityKind, margin: f64) -> Result<CheckResult> {
        let name = match kind {
            IdentityKind::Base { n } => format!("identity_base[n={n}]"),
            IdentityKind::Even { m } => format!("identity_even[m={m}]"),
            IdentityKind::Odd { m } => format!("identity_odd[m={m}]"),
        };
        let sweep = TrigIdentity::new(kind)?.sweep(&self.cfg, IDENTITY_POINTS, margin)?;
        Ok(CheckResult::new(name, sweep.relative(), 0.0, self.tolerances.identity))
    }

    /// `A_n·(hypergeometric form)` against `χ̃_{n+2}`, as
    /// `max |ψ_n − χ̃_{n+2}| / max |χ̃_{n+2}|` on interior points.
    pub fn check_correspondence(&self, n: u32) -> Result<CheckResult> {
        let chi = TrigEigenfunction::new(n + 2, self.cfg)?;
        let c = (self.coefficient)(n);
        let amplitude = if c.is_zero() {
            f64::NAN
        } else {
            chi.norm() / c.to_f64()
        };
        let psi = crate::models::HypergeometricState::new(
            self.cfg,
            crate::models::PTParams::symmetric(),
            n,
            amplitude,
        );
        let (mut dev, mut scale) = (0.0f64, 0.0f64);
        for x in interior_grid(0.0, self.cfg.length(), CORRESPONDENCE_POINTS) {
            let a = chi.eval(x)?;
            let b = psi.eval(x)?;
            dev = dev.max((a - b).abs());
            scale = scale.max(a.abs());
        }
        let rel = if dev.is_nan() || amplitude.is_nan() { f64::NAN } else { dev / scale };
        Ok(CheckResult::new(
            format!("correspondence[n={n}]"),
            rel,
            0.0,
            self.tolerances.identity,
        ))
    }

    /// Exact vanishing of the two midpoint families; tolerance zero.
    pub fn check_midpoint_vanishing(&self, m: u32) -> Vec<CheckResult> {
        let half = Rational::new(1, 2);
        let mut out = vec![CheckResult::new(
            format!("midpoint_vanishing_odd[m={m}]"),
            TerminatingHypergeometric::symmetric_pt(2 * m + 1)
                .eval_exact(&half)
                .to_f64(),
            0.0,
            0.0,
        )];
        if m >= 1 {
            let shifted = TerminatingHypergeometric::new(
                2 * m - 1,
                Rational::from(2 * m + 5),
                Rational::new(7, 2),
            )
            .expect("c = 7/2 is valid")
            .eval_exact(&half);
            out.push(CheckResult::new(
                format!("midpoint_vanishing_shifted[m={m}]"),
                shifted.to_f64(),
                0.0,
                0.0,
            ));
        }
        debug_assert_eq!(
            out.iter().all(|c| c.passed),
            midpoint_vanishing(m).all_vanish()
        );
        out
    }

    /// Parity-indexed and degree-indexed `C_n` formulas agree exactly.
    pub fn check_coefficient_forms(&self, n: u32) -> CheckResult {
        let diff = coefficient_c(n) - coefficient_c_by_degree(n);
        CheckResult::new(format!("coefficient_forms[n={n}]"), diff.to_f64(), 0.0, 0.0)
    }

    /// `ψ_n` with amplitude `A_n` has unit L² norm.
    pub fn check_normalized_state(&self, n: u32) -> Result<CheckResult> {
        let psi = hypergeometric_eigenstate(n, &self.cfg)?;
        let norm = self.integrator.integrate(
            |x| psi.eval(x).unwrap_or(f64::NAN).powi(2),
            0.0,
            self.cfg.length(),
        )?;
        Ok(CheckResult::new(
            format!("hypergeom_state_norm[n={n}]"),
            norm,
            1.0,
            self.tolerances.quadrature,
        ))
    }

    /// Lowest `count` finite-difference eigenvalues against `4α²(n+2)²`.
    pub fn check_fd_spectrum(&self, grid_points: usize, count: usize) -> Result<Vec<CheckResult>> {
        let values = fd_spectrum(&self.cfg, grid_points, count)?;
        Ok(values
            .into_iter()
            .enumerate()
            .map(|(n, e)| {
                let exact = box_energy(&self.cfg, n as u32 + 2);
                CheckResult::new(
                    format!("fd_spectrum[n={n}]"),
                    e,
                    exact,
                    self.tolerances.spectrum,
                )
            })
            .collect())
    }
}

/// `count` equally spaced points on `[lo, hi]`, endpoints excluded when
/// `lo`/`hi` are the interval ends (strictly interior spacing).
fn interior_grid(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (count + 1) as f64;
    (1..=count).map(move |i| lo + step * i as f64)
}
