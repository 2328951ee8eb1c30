mod common;

use common::*;
use disc_analysis::polynomial::{BallPolynomial, Monomial};
use disc_analysis::quadrature::{
    bergman_norm_disc, boundary_samples, disc_integrate, hardy_norm, hardy_norm_with,
    sphere_integrate, DiscGrid, SphereSampler,
};
use disc_analysis::C64;
use proptest::prelude::*;

proptest! {
    #[test]
    fn radial_moments_are_exact(s in 0u32..40, k in 0u32..6) {
        let grid = DiscGrid::default();
        let v = disc_integrate(|z| z.norm().powi(s as i32), k as f64, &grid).unwrap();
        // ∫_0^1 r^{s+1} (1−r²)^k dr = B((s+2)/2, k+1)/2, by the recursion in k
        let mut oracle = 1.0 / (s as f64 + 2.0);
        for j in 1..=k {
            oracle *= j as f64 / (s as f64 / 2.0 + 1.0 + j as f64);
        }
        prop_assert!((v - oracle).abs() < 1e-12);
    }

    #[test]
    fn nonradial_monomials_integrate_to_zero(m in 1u32..20, s in 0u32..10) {
        let grid = DiscGrid::default();
        let re = disc_integrate(|z| (z.powu(m) * z.norm().powi(s as i32)).re, 0.0, &grid).unwrap();
        let im = disc_integrate(|z| (z.powu(m) * z.norm().powi(s as i32)).im, 0.0, &grid).unwrap();
        prop_assert!(re.abs() < 1e-13 && im.abs() < 1e-13);
    }

    #[test]
    fn sphere_moments_match_closed_form(a in 0u32..6, b in 0u32..6) {
        // ∫ |ζ1|^{2a} |ζ2|^{2b} dσ = a! b! / (a + b + 1)!
        let s = SphereSampler::product_rule(32, 16).unwrap();
        let v = sphere_integrate(|z| z[0].norm_sqr().powi(a as i32) * z[1].norm_sqr().powi(b as i32), &s).unwrap();
        let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
        let oracle = fact(a) * fact(b) / fact(a + b + 1);
        prop_assert!((v - oracle).abs() < 1e-13);
    }

    #[test]
    fn hardy_means_grow_with_radius(c1 in -1.0..1.0f64, c2 in -1.0..1.0f64, c3 in -1.0..1.0f64, p in 1.0..4.0f64) {
        let f = BallPolynomial::new(2, vec![
            Monomial { coeff: c(c1), powers: vec![0, 0] },
            Monomial { coeff: C64::new(0.0, c2), powers: vec![1, 2] },
            Monomial { coeff: c(c3), powers: vec![3, 0] },
        ]).unwrap();
        let s = SphereSampler::product_rule(16, 32).unwrap();
        prop_assert!(hardy_norm(&f, p, &s).unwrap().monotone_in_r);
    }
}

#[test]
fn monte_carlo_agrees_with_product_rule() {
    let f = |w: &[C64]| c(1.0) + w[0] * w[1] * 2.0 + w[1].powu(3);
    let exact = hardy_norm_with(f, 2.0, &SphereSampler::product_rule(32, 64).unwrap()).unwrap().value;
    // ‖f‖² = 1 + 4·(1/6) + 1/4
    assert!((exact * exact - (1.0 + 4.0 / 6.0 + 0.25)).abs() < 1e-12);
    let mc = hardy_norm_with(f, 2.0, &SphereSampler::monte_carlo(2, 200_000, 5).unwrap()).unwrap().value;
    assert!((mc - exact).abs() < 0.01, "mc {mc} vs {exact}");
}

#[test]
fn monte_carlo_in_three_dimensions() {
    let s = SphereSampler::monte_carlo(3, 100_000, 9).unwrap();
    // ∫|ζ1|² dσ = 1/n
    let v = sphere_integrate(|z| z[0].norm_sqr(), &s).unwrap();
    assert!((v - 1.0 / 3.0).abs() < 5e-3);
    assert_eq!(SphereSampler::for_dimension(3, 10, 1).unwrap().nodes().len(), 10);
}

#[test]
fn bergman_norms_of_monomials() {
    let grid = DiscGrid::default();
    for k in 0..6u32 {
        for p in [1.0, 2.0, 3.0] {
            let v = bergman_norm_disc(|z| z.powu(k), p, 1.0, &grid).unwrap();
            let s = k as f64 * p;
            let oracle = (1.0 / ((s + 2.0) * (s / 2.0 + 2.0))).powf(1.0 / p);
            assert!((v - oracle).abs() < 1e-12);
        }
    }
}

#[test]
fn boundary_samples_are_unit_and_seeded() {
    let a = boundary_samples(2, 8, 3).unwrap();
    assert_eq!(a[0].coords(), &[c(1.0), c(0.0)]);
    assert!(a.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    assert_eq!(a, boundary_samples(2, 8, 3).unwrap());
    assert!(boundary_samples(2, 0, 3).is_err());
}
