use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("x = {x} lies outside the admissible domain [{lo}, {hi}]")]
    Domain { x: f64, lo: f64, hi: f64 },

    #[error("state k = {k} is annihilated by the intertwining operator and cannot be normalized")]
    Annihilated { k: u32 },

    #[error("vanishing denominator: {0}")]
    VanishingDenominator(String),

    #[error(
        "t = {t} is within {margin} of a node of sin(t); use the polynomial path instead"
    )]
    Stability { t: f64, margin: f64 },

    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },

    #[error("Newton iteration for Legendre root {index} of order {order} did not converge")]
    Convergence { order: usize, index: usize },

    #[error("requested {requested} eigenvalues but at most {available} are resolvable")]
    Unresolvable { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
