//! Verification suite: every closed-form integral and identity checked
//! against quadrature or exact arithmetic, collected into a report.

mod checks;
mod integrate;
mod report;
mod spectrum;

pub use checks::{
    CoefficientFn, Verifier, CORRESPONDENCE_POINTS, IDENTITY_POINTS, RESIDUAL_POINTS,
};
pub use integrate::{integrate, Integrator};
pub use report::{CheckResult, Parameters, VerificationReport};
pub use spectrum::{fd_hamiltonian, fd_spectrum, SymmetricTridiagonal, MAX_MODES, MIN_GRID_POINTS};

use crate::closed_form::{coefficient_c, IdentityKind, DEFAULT_NODE_MARGIN};
use crate::error::{Error, Result};
use crate::models::WellConfig;

/// Per-family tolerances, addressable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative, quadrature against closed-form integrals.
    pub quadrature: f64,
    /// Absolute on off-diagonals, relative on the unit diagonal.
    pub orthonormality: f64,
    pub expectation: f64,
    /// Relative two-sided deviation of identities and the correspondence.
    pub identity: f64,
    /// Schrödinger residual scaled by the energy.
    pub residual: f64,
    /// Finite-difference eigenvalues against exact energies.
    pub spectrum: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-10,
            orthonormality: 1e-10,
            expectation: 1e-10,
            identity: 1e-9,
            residual: 1e-8,
            spectrum: 1e-2,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 6] = [
        "quadrature",
        "orthonormality",
        "expectation",
        "identity",
        "residual",
        "spectrum",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "quadrature" => &mut self.quadrature,
            "orthonormality" => &mut self.orthonormality,
            "expectation" => &mut self.expectation,
            "identity" => &mut self.identity,
            "residual" => &mut self.residual,
            "spectrum" => &mut self.spectrum,
            _ => return None,
        })
    }

    /// Overrides one tolerance; unknown names and non-positive values are rejected.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Parameter(format!(
                "tolerance {name} must be a positive number, got {value}"
            )));
        }
        let slot = self.slot(name).ok_or_else(|| {
            Error::Parameter(format!(
                "unknown tolerance {name:?}; expected one of {}",
                Self::NAMES.join(", ")
            ))
        })?;
        *slot = value;
        Ok(())
    }
}

/// Parameters of a full verification run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub alpha: f64,
    /// Highest hypergeometric degree `n`; trig checks run to `k = n_max + 2`.
    pub n_max: u32,
    pub quad_order: usize,
    pub panels: usize,
    pub grid_points: usize,
    pub spectrum_modes: usize,
    pub node_margin: f64,
    pub tolerances: Tolerances,
    pub coefficient: CoefficientFn,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            alpha: 1.0,
            n_max: 10,
            quad_order: 64,
            panels: 32,
            grid_points: 4000,
            spectrum_modes: 3,
            node_margin: DEFAULT_NODE_MARGIN,
            tolerances: Tolerances::default(),
            coefficient: coefficient_c,
        }
    }
}

impl SuiteConfig {
    pub fn k_max(&self) -> u32 {
        self.n_max + 2
    }

    pub fn parameters(&self) -> Parameters {
        Parameters {
            alpha: self.alpha,
            n_max: self.n_max,
            k_max: self.k_max(),
            quad_order: self.quad_order,
            panels: self.panels,
            grid_points: self.grid_points,
        }
    }
}

/// Collects results, turning a failed computation into a failed check.
struct Collector(Vec<CheckResult>);

impl Collector {
    fn one(&mut self, name: impl Into<String>, reference: f64, tol: f64, r: Result<CheckResult>) {
        self.0.push(r.unwrap_or_else(|_| CheckResult::errored(name, reference, tol)));
    }

    fn many<I: IntoIterator<Item = CheckResult>>(&mut self, name: impl Into<String>, tol: f64, r: Result<I>) {
        match r {
            Ok(items) => self.0.extend(items),
            Err(_) => self.0.push(CheckResult::errored(name, 0.0, tol)),
        }
    }
}

/// Runs every check over the configured ranges. Only an invalid
/// configuration is an error; individual failures land in the report.
pub fn run_full_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let cfg = WellConfig::new(config.alpha)?;
    let integrator = Integrator::new(config.quad_order, config.panels)?;
    if config.grid_points < MIN_GRID_POINTS {
        return Err(Error::Parameter(format!(
            "grid_points must be at least {MIN_GRID_POINTS}"
        )));
    }
    if config.spectrum_modes > MAX_MODES {
        return Err(Error::Unresolvable {
            requested: config.spectrum_modes,
            available: MAX_MODES,
        });
    }
    let tol = config.tolerances;
    let v = Verifier::new(cfg, integrator, tol).with_coefficients(config.coefficient);
    let mut out = Collector(Vec::new());
    let k_range = 2..=config.k_max();
    let n_range = 0..=config.n_max;
    let margin = config.node_margin;

    for k in k_range.clone() {
        out.one(format!("trig_norm[k={k}]"), 0.0, tol.quadrature, v.check_trig_norm(k));
    }
    for k in k_range.clone() {
        out.one(format!("first_moment_trig[k={k}]"), 0.0, tol.quadrature, v.check_first_moment_trig(k));
    }
    for k in k_range.clone() {
        out.one(format!("expectation_x[k={k}]"), cfg.midpoint(), tol.expectation, v.check_expectation_x(k));
    }
    out.many("gram", tol.orthonormality, v.check_orthonormality(config.k_max()));
    for k in k_range.clone() {
        out.one(format!("residual[k={k}]"), 0.0, tol.residual, v.check_residual(k, margin));
    }
    for k in 1..=config.k_max() {
        out.one(format!("box_residual[k={k}]"), 0.0, tol.residual, v.check_box_residual(k));
    }

    out.one("beta_5/2_5/2", 0.0, tol.quadrature, v.check_beta_reference());
    for n in n_range.clone() {
        out.many(format!("hypergeom_norm[n={n}]"), tol.quadrature, v.check_hypergeom_norm(n));
        out.one(
            format!("first_moment_hypergeom[n={n}]"),
            0.0,
            tol.quadrature,
            v.check_first_moment_hypergeom(n),
        );
    }
    for n in n_range.clone() {
        out.0.push(v.check_coefficient_forms(n));
    }
    for m in 0..=config.n_max {
        out.0.extend(v.check_midpoint_vanishing(m));
    }
    for n in n_range.clone() {
        out.one(
            format!("identity_base[n={n}]"),
            0.0,
            tol.identity,
            v.check_identity(IdentityKind::Base { n }, margin),
        );
    }
    for m in 0..=config.n_max / 2 {
        out.one(
            format!("identity_even[m={m}]"),
            0.0,
            tol.identity,
            v.check_identity(IdentityKind::Even { m }, margin),
        );
        out.one(
            format!("identity_odd[m={m}]"),
            0.0,
            tol.identity,
            v.check_identity(IdentityKind::Odd { m }, margin),
        );
    }
    for n in n_range {
        out.one(format!("correspondence[n={n}]"), 0.0, tol.identity, v.check_correspondence(n));
    }
    out.many(
        "fd_spectrum",
        tol.spectrum,
        v.check_fd_spectrum(config.grid_points, config.spectrum_modes),
    );

    Ok(VerificationReport::new(config.parameters(), out.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("residual", 1e-20).unwrap();
        assert_eq!(t.residual, 1e-20);
        assert!(t.set("nonsense", 1e-3).is_err());
        assert!(t.set("identity", -1.0).is_err());
        assert!(t.set("identity", f64::NAN).is_err());
    }

    #[test]
    fn invalid_suite_configs() {
        let bad_alpha = SuiteConfig { alpha: 0.0, ..SuiteConfig::default() };
        assert!(run_full_suite(&bad_alpha).is_err());
        let bad_grid = SuiteConfig { grid_points: 10, ..SuiteConfig::default() };
        assert!(run_full_suite(&bad_grid).is_err());
        let bad_order = SuiteConfig { quad_order: 0, ..SuiteConfig::default() };
        assert!(run_full_suite(&bad_order).is_err());
    }
}
