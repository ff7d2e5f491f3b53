//! Foundation arithmetic shared by every other module.

mod chebyshev;
pub mod dd;
mod quadrature;
mod rational;

pub use chebyshev::{chebyshev_u, chebyshev_u_with_derivatives, ChebyshevU};
pub use dd::DoubleDouble;
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use rational::{pochhammer, Rational};
