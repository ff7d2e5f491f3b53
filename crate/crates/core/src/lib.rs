//! Exact and numerical machinery for the symmetric Pöschl-Teller potential
//! `8α²/sin²(2αx)` on `(0, π/(2α))`.
//!
//! The potential is obtained from the infinite square well by a single
//! Darboux (intertwining) step seeded with the well's ground state. Its
//! eigenfunctions therefore have two representations: a terminating Gauss
//! hypergeometric polynomial `₂F₁(−n, n+4; 5/2; sin²αx)` and a closed
//! trigonometric combination. This crate evaluates both, evaluates the
//! coefficients linking them in exact rational arithmetic, and checks the
//! resulting identities and integrals numerically.
//!
//! Module map:
//!
//! * [`numerics`]: rationals, Pochhammer symbols, double-double helpers,
//!   Chebyshev `U_k`, Gauss-Legendre rules.
//! * [`hypergeom`]: terminating `₂F₁` evaluation (exact and floating point).
//! * [`models`]: the square well and the general Pöschl-Teller potential.
//! * [`darboux`]: superpotential, partner potential, intertwined states.
//! * [`closed_form`]: stable trigonometric eigenfunctions, `C_n`, `A_n`, and
//!   both sides of the hypergeometric/trigonometric identities.
//! * [`verify`]: quadrature checks, residuals, finite-difference spectrum,
//!   and the aggregated [`verify::VerificationReport`].

pub mod closed_form;
pub mod darboux;
pub mod error;
pub mod hypergeom;
pub mod models;
pub mod numerics;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::Rational;
