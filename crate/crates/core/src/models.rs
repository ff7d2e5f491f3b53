//! The two Hamiltonians: the infinite square well on `(0, π/(2α))` and the
//! trigonometric Pöschl-Teller potential on the same interval.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::hypergeom::{RealPolynomial, TerminatingHypergeometric};
use crate::numerics::Rational;

/// Relative slack when testing whether `x` hits the right endpoint.
const ENDPOINT_SLACK: f64 = 4.0 * f64::EPSILON;

/// Inverse-length scale `α`; the interval is `(0, π/(2α))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellConfig {
    alpha: f64,
}

impl WellConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::Parameter(format!("alpha must be positive, got {alpha}")));
        }
        Ok(WellConfig { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Right endpoint `π/(2α)`.
    pub fn length(&self) -> f64 {
        FRAC_PI_2 / self.alpha
    }

    /// `π/(4α)`, the symmetry point.
    pub fn midpoint(&self) -> f64 {
        0.5 * self.length()
    }

    pub(crate) fn check_closed(&self, x: f64) -> Result<()> {
        let hi = self.length();
        if x.is_nan() || x < 0.0 || x > hi * (1.0 + ENDPOINT_SLACK) {
            return Err(Error::Domain { x, lo: 0.0, hi });
        }
        Ok(())
    }

    pub(crate) fn check_open(&self, x: f64) -> Result<()> {
        let hi = self.length();
        if x.is_nan() || x <= 0.0 || x >= hi {
            return Err(Error::Domain { x, lo: 0.0, hi });
        }
        Ok(())
    }

    /// `(sin αx, cos αx)` with `cos αx` taken as `sin(π/2 − αx)` so that it
    /// vanishes exactly at the right endpoint.
    pub(crate) fn sin_cos(&self, x: f64) -> (f64, f64) {
        let ax = self.alpha * x;
        (ax.sin(), (FRAC_PI_2 - ax).sin())
    }
}

/// Pöschl-Teller exponents `κ, λ > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTParams {
    kappa: f64,
    lambda: f64,
}

impl PTParams {
    pub fn new(kappa: f64, lambda: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 1.0) || !(lambda.is_finite() && lambda > 1.0) {
            return Err(Error::Parameter(format!(
                "Pöschl-Teller exponents must exceed 1, got κ = {kappa}, λ = {lambda}"
            )));
        }
        Ok(PTParams { kappa, lambda })
    }

    /// `κ = λ = 2`, the case reachable from the square well by one Darboux step.
    pub fn symmetric() -> Self {
        PTParams { kappa: 2.0, lambda: 2.0 }
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

fn box_norm(cfg: &WellConfig) -> f64 {
    (4.0 * cfg.alpha / PI).sqrt()
}

/// `φ_k(x) = √(4α/π)·sin(2αkx)` on the closed interval.
pub fn box_eigenfunction(cfg: &WellConfig, k: u32, x: f64) -> Result<f64> {
    cfg.check_closed(x)?;
    Ok(box_norm(cfg) * (2.0 * cfg.alpha * f64::from(k) * x).sin())
}

/// `(φ_k′(x), φ_k″(x))`.
pub fn box_eigenfunction_derivatives(cfg: &WellConfig, k: u32, x: f64) -> Result<(f64, f64)> {
    cfg.check_closed(x)?;
    let omega = 2.0 * cfg.alpha * f64::from(k);
    let (s, c) = (omega * x).sin_cos();
    let norm = box_norm(cfg);
    Ok((norm * omega * c, -norm * omega * omega * s))
}

/// `ε_k = 4α²k²`.
pub fn box_energy(cfg: &WellConfig, k: u32) -> f64 {
    let k = f64::from(k);
    4.0 * cfg.alpha * cfg.alpha * k * k
}

/// `α²[κ(κ−1)/sin²(αx) + λ(λ−1)/cos²(αx)]` on the open interval.
pub fn pt_potential(cfg: &WellConfig, p: &PTParams, x: f64) -> Result<f64> {
    cfg.check_open(x)?;
    let (s, c) = cfg.sin_cos(x);
    let a2 = cfg.alpha * cfg.alpha;
    Ok(a2 * (p.kappa * (p.kappa - 1.0) / (s * s) + p.lambda * (p.lambda - 1.0) / (c * c)))
}

/// `E_n = α²(2n + κ + λ)²`.
pub fn pt_energy(cfg: &WellConfig, p: &PTParams, n: u32) -> f64 {
    let q = 2.0 * f64::from(n) + p.kappa + p.lambda;
    cfg.alpha * cfg.alpha * q * q
}

/// Hypergeometric form `A·sin^κ(αx)·cos^λ(αx)·₂F₁(−n, n+κ+λ; κ+1/2; sin²αx)`
/// with the series coefficients prepared once.
#[derive(Debug, Clone)]
pub struct HypergeometricState {
    cfg: WellConfig,
    params: PTParams,
    amplitude: f64,
    series: RealPolynomial,
}

impl HypergeometricState {
    pub fn new(cfg: WellConfig, params: PTParams, n: u32, amplitude: f64) -> Self {
        let exact = |v: f64| Rational::from_f64(v).expect("finite parameter");
        let b = exact(f64::from(n) + params.kappa + params.lambda);
        let c = exact(params.kappa + 0.5);
        let series = TerminatingHypergeometric::new(n, b, c)
            .expect("κ + 1/2 > 3/2 is never a nonpositive integer")
            .polynomial();
        HypergeometricState { cfg, params, amplitude, series }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.cfg.check_closed(x)?;
        let (s, c) = self.cfg.sin_cos(x);
        let envelope = s.powf(self.params.kappa) * c.powf(self.params.lambda);
        Ok(self.amplitude * envelope * self.series.eval(s * s))
    }
}

/// One-shot evaluation of the hypergeometric eigenfunction form; the result
/// is normalized only if `amplitude` is the matching normalization constant.
pub fn pt_eigen_hypergeom(
    cfg: &WellConfig,
    p: &PTParams,
    n: u32,
    amplitude: f64,
    x: f64,
) -> Result<f64> {
    HypergeometricState::new(*cfg, *p, n, amplitude).eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_4;

    fn unit() -> WellConfig {
        WellConfig::new(1.0).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(WellConfig::new(0.0).is_err());
        assert!(WellConfig::new(-1.0).is_err());
        assert!(WellConfig::new(f64::NAN).is_err());
        assert!(PTParams::new(1.0, 2.0).is_err());
        assert!(PTParams::new(2.0, 1.0).is_err());
        assert!(PTParams::new(1.5, 3.0).is_ok());
    }

    #[test]
    fn box_examples() {
        let cfg = unit();
        assert_relative_eq!(
            box_eigenfunction(&cfg, 1, FRAC_PI_4).unwrap(),
            (4.0 / PI).sqrt(),
            max_relative = 1e-15
        );
        assert_eq!(box_eigenfunction(&cfg, 3, 0.0).unwrap(), 0.0);
        assert!(box_eigenfunction(&cfg, 1, -0.1).is_err());
        assert!(box_eigenfunction(&cfg, 1, 1.6).is_err());

        assert_eq!(box_energy(&cfg, 1), 4.0);
        assert_eq!(box_energy(&cfg, 2), 16.0);
        assert_eq!(box_energy(&WellConfig::new(0.5).unwrap(), 3), 9.0);
    }

    #[test]
    fn potential_examples() {
        let cfg = unit();
        let p = PTParams::symmetric();
        assert_relative_eq!(pt_potential(&cfg, &p, FRAC_PI_4).unwrap(), 8.0, max_relative = 1e-14);
        assert!(pt_potential(&cfg, &p, 0.0).is_err());
        assert!(pt_potential(&cfg, &p, cfg.length()).is_err());
    }

    #[test]
    fn symmetric_potential_closed_form() {
        for alpha in [0.5, 1.0, 2.0] {
            let cfg = WellConfig::new(alpha).unwrap();
            let p = PTParams::symmetric();
            let (lo, hi) = (1e-3, cfg.length() - 1e-3);
            for i in 0..=400 {
                let x = lo + (hi - lo) * f64::from(i) / 400.0;
                let v = pt_potential(&cfg, &p, x).unwrap();
                let closed = 8.0 * alpha * alpha / (2.0 * alpha * x).sin().powi(2);
                assert!(((v - closed) / closed).abs() <= 1e-11, "α={alpha} x={x}");
            }
        }
    }

    #[test]
    fn energy_examples_and_correspondence() {
        let p = PTParams::symmetric();
        assert_eq!(pt_energy(&unit(), &p, 0), 16.0);
        assert_eq!(pt_energy(&unit(), &p, 1), 36.0);
        assert_eq!(pt_energy(&WellConfig::new(2.0).unwrap(), &p, 0), 64.0);
        for alpha in [0.25, 0.5, 1.0, 3.0] {
            let cfg = WellConfig::new(alpha).unwrap();
            for n in 0..20 {
                assert_eq!(pt_energy(&cfg, &p, n), box_energy(&cfg, n + 2));
            }
        }
    }

    #[test]
    fn hypergeometric_form_examples() {
        let cfg = unit();
        let p = PTParams::symmetric();
        assert_relative_eq!(
            pt_eigen_hypergeom(&cfg, &p, 0, 1.0, FRAC_PI_4).unwrap(),
            0.25,
            max_relative = 1e-15
        );
        assert_eq!(pt_eigen_hypergeom(&cfg, &PTParams::new(1.7, 3.2).unwrap(), 3, 1.0, 0.0).unwrap(), 0.0);
        assert!(pt_eigen_hypergeom(&cfg, &p, 1, 1.0, FRAC_PI_4).unwrap().abs() < 1e-16);
        assert_eq!(pt_eigen_hypergeom(&cfg, &p, 2, 1.0, cfg.length()).unwrap(), 0.0);
    }

    #[test]
    fn box_gram_matrix_is_identity() {
        let cfg = unit();
        let rule = crate::numerics::gauss_legendre(64).unwrap();
        let panels = 8;
        let h = cfg.length() / f64::from(panels);
        for i in 1..=6 {
            for j in 1..=6 {
                let mut acc = 0.0;
                for p in 0..panels {
                    let a = h * f64::from(p);
                    acc += rule.integrate(
                        |x| box_eigenfunction(&cfg, i, x).unwrap() * box_eigenfunction(&cfg, j, x).unwrap(),
                        a,
                        a + h,
                    );
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((acc - expected).abs() <= 1e-12, "({i},{j}) = {acc}");
            }
        }
    }
}
