use proptest::prelude::*;
use ptdarboux::hypergeom::{midpoint_vanishing, TerminatingHypergeometric};
use ptdarboux::Rational;

fn lagrange(nodes: &[(Rational, Rational)], at: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let mut basis = Rational::one();
        for (j, (xj, _)) in nodes.iter().enumerate() {
            if i != j {
                basis = basis * (at - xj) / (xi - xj);
            }
        }
        acc += &(basis * yi);
    }
    acc
}

#[test]
fn exact_and_real_paths_agree() {
    let zs = [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)];
    for n in 0..=25u32 {
        let h = TerminatingHypergeometric::symmetric_pt(n);
        let poly = h.polynomial();
        let scale: f64 = h.coefficients().iter().map(|c| c.abs().to_f64()).sum();
        for &(p, q) in &zs {
            let z = Rational::new(p, q);
            let exact = h.eval_exact(&z);
            let real = poly.eval(p as f64 / q as f64);
            if exact.is_zero() {
                // Zero sums: absolute error against the size of the terms.
                assert!(real.abs() <= 1e-13 * scale.max(1.0) * f64::EPSILON, "n={n} z={z}: {real}");
            } else {
                let e = exact.to_f64();
                let rel = ((real - e) / e).abs();
                assert!(rel <= 1e-13, "n={n} z={z}: rel {rel}");
            }
        }
    }
}

#[test]
fn midpoint_families_vanish_exactly() {
    for m in 0..=25 {
        let r = midpoint_vanishing(m);
        assert!(r.odd_family, "m={m}");
        assert_eq!(r.shifted_family, if m == 0 { None } else { Some(true) });
    }
}

#[test]
fn even_midpoint_values_are_nonzero() {
    let half = Rational::new(1, 2);
    for m in 0..=25 {
        assert!(!TerminatingHypergeometric::symmetric_pt(2 * m).eval_exact(&half).is_zero());
    }
}

#[test]
fn degree_bound_by_interpolation() {
    for n in 0..=12u32 {
        let h = TerminatingHypergeometric::symmetric_pt(n);
        let nodes: Vec<_> = (0..n as i64 + 2)
            .map(|i| {
                let z = Rational::new(i, n as i64 + 2);
                let y = h.eval_exact(&z);
                (z, y)
            })
            .collect();
        let extra = Rational::new(7, 5);
        assert_eq!(lagrange(&nodes, &extra), h.eval_exact(&extra), "n={n}");
    }
}

proptest! {
    #[test]
    fn exact_sum_matches_pochhammer_terms(n in 0u32..15, bn in -20i64..20, bd in 1i64..6, cn in 1i64..30, cd in 1i64..6, zn in -8i64..8) {
        let b = Rational::new(bn, bd);
        let c = Rational::new(cn, cd);
        let z = Rational::new(zn, 8);
        let h = TerminatingHypergeometric::new(n, b.clone(), c.clone()).unwrap();
        let mut direct = Rational::zero();
        let mut fact = Rational::one();
        let mut zpow = Rational::one();
        for j in 0..=n {
            if j > 0 {
                fact = fact * i64::from(j);
                zpow *= &z;
            }
            let term = ptdarboux::numerics::pochhammer(&Rational::integer(-i64::from(n)), j)
                * ptdarboux::numerics::pochhammer(&b, j)
                / ptdarboux::numerics::pochhammer(&c, j)
                / &fact
                * &zpow;
            direct += &term;
        }
        prop_assert_eq!(h.eval_exact(&z), direct);
    }

    #[test]
    fn real_path_tracks_exact_path(n in 0u32..20, zn in 0i64..=64) {
        let h = TerminatingHypergeometric::symmetric_pt(n);
        let z = Rational::new(zn, 64);
        let exact = h.eval_exact(&z).to_f64();
        let real = h.eval(zn as f64 / 64.0);
        prop_assert!((real - exact).abs() <= 1e-13 * exact.abs().max(1e-3));
    }
}
