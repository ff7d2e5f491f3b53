//! Chebyshev polynomials of the second kind.

/// `U_k(c)` by forward three-term recurrence `U_{j+1} = 2c·U_j − U_{j−1}`.
///
/// For `c = cos t`, `U_k(c)·sin t = sin((k+1)t)`, which lets `sin(kt)/sin(t)`
/// be evaluated without dividing by `sin t`.
pub fn chebyshev_u(k: u32, c: f64) -> f64 {
    chebyshev_u_with_derivatives(k, c).value
}

/// `U_k` with its first two derivatives in the argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevU {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

/// `U_k(c)`, `U_k′(c)`, `U_k″(c)` from the differentiated recurrences
/// `U′_{j+1} = 2U_j + 2c·U′_j − U′_{j−1}` and
/// `U″_{j+1} = 4U′_j + 2c·U″_j − U″_{j−1}`.
pub fn chebyshev_u_with_derivatives(k: u32, c: f64) -> ChebyshevU {
    // (U_{j-1}, U_j) and derivatives, starting at j = 0 with U_{-1} = 0.
    let (mut u_prev, mut u) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    let (mut s_prev, mut s) = (0.0, 0.0);
    for _ in 0..k {
        let u_next = 2.0 * c * u - u_prev;
        let d_next = 2.0 * u + 2.0 * c * d - d_prev;
        let s_next = 4.0 * d + 2.0 * c * s - s_prev;
        (u_prev, u) = (u, u_next);
        (d_prev, d) = (d, d_next);
        (s_prev, s) = (s, s_next);
    }
    ChebyshevU {
        value: u,
        first: d,
        second: s,
    }
}
