//! Gauss-Legendre rules on `[−1, 1]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const MAX_NEWTON_STEPS: usize = 100;
const ROOT_TOLERANCE: f64 = 1e-15;

/// Nodes and weights of an `order`-point Gauss-Legendre rule.
///
/// Nodes are strictly increasing and exactly antisymmetric; weights are
/// mirrored to match.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫_a^b f` with the rule mapped affinely onto `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

/// `(P_n(x), P_n′(x))` by the Bonnet recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p_prev, mut p) = (1.0, x);
    for j in 2..=n {
        let j = j as f64;
        let p_next = ((2.0 * j - 1.0) * x * p - (j - 1.0) * p_prev) / j;
        (p_prev, p) = (p, p_next);
    }
    let n = n as f64;
    let dp = n * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Builds the `order`-point rule by Newton iteration on `P_order` started
/// from Chebyshev-like guesses `cos(π(i − 1/4)/(order + 1/2))`.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Parameter("quadrature order must be at least 1".into()));
    }
    if order == 1 {
        return Ok(QuadratureRule {
            nodes: vec![0.0],
            weights: vec![2.0],
        });
    }

    let half = order.div_ceil(2);
    let mut upper = Vec::with_capacity(half);
    for i in 1..=half {
        let mut x = (PI * (i as f64 - 0.25) / (order as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..MAX_NEWTON_STEPS {
            let (p, dp) = legendre_with_derivative(order, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= ROOT_TOLERANCE {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence { order, index: i });
        }
        let (_, dp) = legendre_with_derivative(order, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        upper.push((x, w));
    }

    // `upper` runs from the largest node down; mirror it.
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    for (i, &(x, w)) in upper.iter().enumerate() {
        let hi = order - 1 - i;
        nodes[hi] = x;
        weights[hi] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    Ok(QuadratureRule { nodes, weights })
}
