//! Composite Gauss-Legendre integration.

use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre, QuadratureRule};

/// `panels` equal subintervals, each integrated with the same rule.
#[derive(Debug, Clone)]
pub struct Integrator {
    rule: QuadratureRule,
    panels: usize,
}

impl Integrator {
    pub fn new(order: usize, panels: usize) -> Result<Self> {
        if panels == 0 {
            return Err(Error::Parameter("panel count must be at least 1".into()));
        }
        Ok(Integrator {
            rule: gauss_legendre(order)?,
            panels,
        })
    }

    pub fn order(&self) -> usize {
        self.rule.order()
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    /// `∫_a^b f`; any non-finite sample aborts with the offending abscissa.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
            return Err(Error::Parameter(format!("integration bounds must satisfy a < b, got [{a}, {b}]")));
        }
        let width = (b - a) / self.panels as f64;
        let half = 0.5 * width;
        let mut total = 0.0;
        for p in 0..self.panels {
            let mid = a + width * (p as f64 + 0.5);
            let mut panel = 0.0;
            for (&node, &weight) in self.rule.nodes().iter().zip(self.rule.weights()) {
                let x = mid + half * node;
                let y = f(x);
                if !y.is_finite() {
                    return Err(Error::NonFinite { x });
                }
                panel += weight * y;
            }
            total += half * panel;
        }
        Ok(total)
    }
}

/// One-shot composite integration; build an [`Integrator`] to reuse the rule.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize, panels: usize) -> Result<f64> {
    Integrator::new(order, panels)?.integrate(f, a, b)
}
