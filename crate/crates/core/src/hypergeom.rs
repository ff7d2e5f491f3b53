//! Terminating Gauss hypergeometric polynomials `₂F₁(−n, b; c; z)`.
//!
//! With a non-positive integer first parameter the series stops after
//! `n + 1` terms. The exact path sums those terms in rational arithmetic.
//! The floating-point path rounds the exact coefficients to double-double
//! and runs Horner's scheme in double-double. The alternating sums at
//! `n ≈ 25` lose more than 15 digits to cancellation, so plain `f64`
//! summation is not enough.

use crate::error::{Error, Result};
use crate::numerics::{DoubleDouble, Rational};

/// `₂F₁(−n, b; c; ·)` for a nonnegative integer `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminatingHypergeometric {
    degree: u32,
    b: Rational,
    c: Rational,
}

impl TerminatingHypergeometric {
    /// Rejects `c ∈ {0, −1, −2, …}`, where the series is undefined.
    pub fn new(degree: u32, b: Rational, c: Rational) -> Result<Self> {
        if c.is_integer() && (c.is_zero() || c.is_negative()) {
            return Err(Error::Parameter(format!(
                "third parameter c = {c} is zero or a negative integer"
            )));
        }
        Ok(TerminatingHypergeometric { degree, b, c })
    }

    /// `₂F₁(−n, n+4; 5/2; ·)`, the family carried by the `κ = λ = 2` eigenstates.
    pub fn symmetric_pt(n: u32) -> Self {
        Self::new(n, Rational::from(n) + 4, Rational::new(5, 2)).expect("c = 5/2 is valid")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Ratio between consecutive series coefficients, `(−n+j)(b+j)/((c+j)(j+1))`.
    fn coefficient_ratio(&self, j: u32) -> Rational {
        let minus_n = -i64::from(self.degree);
        let num = (&self.b + i64::from(j)) * (minus_n + i64::from(j));
        let den = (&self.c + i64::from(j)) * (i64::from(j) + 1);
        num / den
    }

    /// Monomial coefficients `(−n)_j (b)_j / ((c)_j j!)`, `j = 0..=n`.
    ///
    /// Trailing entries vanish when a Pochhammer factor of `b` truncates the
    /// series early.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut coeffs = Vec::with_capacity(self.degree as usize + 1);
        let mut current = Rational::one();
        coeffs.push(current.clone());
        for j in 0..self.degree {
            current = current * self.coefficient_ratio(j);
            coeffs.push(current.clone());
        }
        coeffs
    }

    /// Exact value at rational `z`.
    pub fn eval_exact(&self, z: &Rational) -> Rational {
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for j in 0..self.degree {
            term = term * self.coefficient_ratio(j) * z;
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        sum
    }

    /// Floating-point value at real `z`.
    ///
    /// Builds the coefficient table on every call; hoist
    /// [`TerminatingHypergeometric::polynomial`] out of hot loops instead.
    pub fn eval(&self, z: f64) -> f64 {
        self.polynomial().eval(z)
    }

    pub fn polynomial(&self) -> RealPolynomial {
        RealPolynomial::from_rationals(&self.coefficients())
    }

    /// Parameter-shift form of the derivative:
    /// `d/dz ₂F₁(−n, b; c; z) = (−n·b/c) · ₂F₁(−(n−1), b+1; c+1; z)`.
    ///
    /// For `n = 0` the factor is zero and the parameters are returned unchanged.
    pub fn derivative(&self) -> (Rational, TerminatingHypergeometric) {
        if self.degree == 0 {
            return (Rational::zero(), self.clone());
        }
        let factor = &self.b * -i64::from(self.degree) / &self.c;
        let shifted = TerminatingHypergeometric {
            degree: self.degree - 1,
            b: &self.b + 1,
            c: &self.c + 1,
        };
        (factor, shifted)
    }
}

/// Real polynomial with double-double coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<DoubleDouble>,
}

impl RealPolynomial {
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        RealPolynomial {
            coeffs: coeffs.iter().map(Rational::to_double_double).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation carried out in double-double.
    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(DoubleDouble::default(), |acc, &c| acc * z + c)
            .to_f64()
    }
}

/// Exact midpoint evaluations of the two vanishing families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MidpointVanishing {
    /// `₂F₁(−(2m+1), 2m+5; 5/2; 1/2) = 0`.
    pub odd_family: bool,
    /// `₂F₁(−(2m−1), 2m+5; 7/2; 1/2) = 0`; `None` for `m = 0`, where the
    /// first parameter is `+1` and the series does not terminate.
    pub shifted_family: Option<bool>,
}

impl MidpointVanishing {
    pub fn all_vanish(&self) -> bool {
        self.odd_family && self.shifted_family.unwrap_or(true)
    }
}

/// The two midpoint sums that vanish for every `m`, evaluated exactly.
pub fn midpoint_vanishing(m: u32) -> MidpointVanishing {
    let half = Rational::new(1, 2);
    let odd = TerminatingHypergeometric::symmetric_pt(2 * m + 1);
    let shifted_family = (m >= 1).then(|| {
        TerminatingHypergeometric::new(2 * m - 1, Rational::from(2 * m + 5), Rational::new(7, 2))
            .expect("c = 7/2 is valid")
            .eval_exact(&half)
            .is_zero()
    });
    MidpointVanishing {
        odd_family: odd.eval_exact(&half).is_zero(),
        shifted_family,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u32, b: Rational, c: Rational) -> TerminatingHypergeometric {
        TerminatingHypergeometric::new(n, b, c).unwrap()
    }

    #[test]
    fn rejects_nonpositive_integer_c() {
        for c in [0, -1, -4] {
            assert!(TerminatingHypergeometric::new(2, Rational::one(), Rational::integer(c)).is_err());
        }
        assert!(TerminatingHypergeometric::new(2, Rational::one(), Rational::new(-1, 2)).is_ok());
    }

    #[test]
    fn exact_examples() {
        let half = Rational::new(1, 2);
        assert_eq!(
            h(0, 4.into(), Rational::new(5, 2)).eval_exact(&half),
            Rational::one()
        );
        assert_eq!(
            h(1, 5.into(), Rational::new(5, 2)).eval_exact(&half),
            Rational::zero()
        );
        // 1 − 2·6·(1/2)/(5/2) + (−2)(−1)·6·7·(1/4)/((5/2)(7/2)·2) = 1 − 12/5 + 6/5
        assert_eq!(
            h(2, 6.into(), Rational::new(5, 2)).eval_exact(&half),
            Rational::new(-1, 5)
        );
    }

    #[test]
    fn real_examples() {
        let f = h(2, 6.into(), Rational::new(5, 2));
        assert!((f.eval(0.5) + 0.2).abs() < 1e-14);
        assert_eq!(f.eval(0.0), 1.0);
        let g = h(1, 5.into(), Rational::new(5, 2));
        let s = (std::f64::consts::PI / 6.0).sin();
        assert!((g.eval(s * s) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn truncating_b_shortens_series() {
        // (−1)_j vanishes from j = 2 on.
        let f = h(5, Rational::integer(-1), Rational::new(3, 2));
        let coeffs = f.coefficients();
        assert_eq!(coeffs.len(), 6);
        assert!(coeffs[2..].iter().all(Rational::is_zero));
        // 1 + (−5)(−1)/(3/2)·z at z = 3/4
        assert_eq!(f.eval_exact(&Rational::new(3, 4)), Rational::new(7, 2));
    }

    #[test]
    fn derivative_parameters() {
        let (factor, shifted) = h(1, 5.into(), Rational::new(5, 2)).derivative();
        assert_eq!(factor, Rational::integer(-2));
        assert_eq!(shifted, h(0, 6.into(), Rational::new(7, 2)));

        let (factor, shifted) = h(0, 3.into(), Rational::new(1, 3)).derivative();
        assert!(factor.is_zero());
        assert_eq!(shifted.degree(), 0);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let f = TerminatingHypergeometric::symmetric_pt(4);
        let (factor, shifted) = f.derivative();
        let (z, step) = (0.3, 1e-5);
        let fd = (f.eval(z + step) - f.eval(z - step)) / (2.0 * step);
        let analytic = factor.to_f64() * shifted.eval(z);
        assert!((fd - analytic).abs() <= 1e-7 * analytic.abs().max(1.0), "{fd} vs {analytic}");
    }

    #[test]
    fn midpoint_vanishing_examples() {
        assert_eq!(
            midpoint_vanishing(0),
            MidpointVanishing { odd_family: true, shifted_family: None }
        );
        assert_eq!(
            midpoint_vanishing(1),
            MidpointVanishing { odd_family: true, shifted_family: Some(true) }
        );
        assert!(midpoint_vanishing(5).all_vanish());
    }
}
