//! Integration over the disc against `(1−|z|²)^k dλ` and over the sphere
//! `∂B_n` against the normalized surface measure `σ`.
//!
//! `λ` is planar area divided by `2π`, so `λ(D) = 1/2` and
//! `∫_D |z|^s dλ = 1/(s+2)`.

use std::f64::consts::TAU;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{C64, CPoint};
use crate::polynomial::BallPolynomial;

pub const DEFAULT_RADIAL: usize = 32;
pub const DEFAULT_ANGULAR: usize = 128;
pub const DEFAULT_SPHERE_RADIAL: usize = 32;
pub const DEFAULT_SPHERE_ANGULAR: usize = 64;
/// Radii at which Hardy means are sampled.
pub const HARDY_RADII: [f64; 4] = [0.5, 0.9, 0.99, 1.0];

/// Sum in a fixed pairwise order.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 16 {
        return values.iter().sum();
    }
    let (left, right) = values.split_at(values.len() / 2);
    pairwise_sum(left) + pairwise_sum(right)
}

fn legendre_unit_interval(count: usize) -> Result<Vec<(f64, f64)>> {
    let degree = NonZeroUsize::new(count)
        .ok_or_else(|| Error::Parameter("quadrature needs at least one node".into()))?;
    let rule = GaussLegendre::new(degree);
    let mut pairs: Vec<(f64, f64)> = rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs)
}

/// Product rule on the disc: Gauss–Legendre in the radius (with the area
/// factor `r` folded into the weights) and the trapezoidal rule in angle.
///
/// With `R` radial nodes the rule integrates `r^m` exactly for `m ≤ 2R − 2`,
/// odd powers included.
#[derive(Debug, Clone)]
pub struct DiscGrid {
    radial: usize,
    angular: usize,
    nodes: Vec<(C64, f64)>,
}

impl DiscGrid {
    pub fn new(radial: usize, angular: usize) -> Result<Self> {
        if angular == 0 {
            return Err(Error::Parameter("angular node count must be positive".into()));
        }
        let radii = legendre_unit_interval(radial)?;
        let mut nodes = Vec::with_capacity(radial * angular);
        for &(r, w) in &radii {
            for t in 0..angular {
                let theta = TAU * t as f64 / angular as f64;
                nodes.push((C64::from_polar(r, theta), w * r / angular as f64));
            }
        }
        Ok(Self {
            radial,
            angular,
            nodes,
        })
    }

    pub fn radial(&self) -> usize {
        self.radial
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    pub fn nodes(&self) -> &[(C64, f64)] {
        &self.nodes
    }

    pub fn total_weight(&self) -> f64 {
        pairwise_sum(&self.nodes.iter().map(|n| n.1).collect::<Vec<_>>())
    }
}

impl Default for DiscGrid {
    fn default() -> Self {
        Self::new(DEFAULT_RADIAL, DEFAULT_ANGULAR).expect("default grid parameters are valid")
    }
}

fn check_weight_exponent(k: f64) -> Result<()> {
    if !k.is_finite() || k < 0.0 {
        return Err(Error::Parameter(format!(
            "weight exponent must be finite and nonnegative, got {k}"
        )));
    }
    Ok(())
}

/// `Σ g(z_i) (1−|z_i|²)^k w_i ≈ ∫_D g (1−|z|²)^k dλ`.
pub fn disc_integrate<G>(g: G, weight_exponent: f64, grid: &DiscGrid) -> Result<f64>
where
    G: Fn(C64) -> f64,
{
    check_weight_exponent(weight_exponent)?;
    let mut terms = Vec::with_capacity(grid.nodes.len());
    for &(z, w) in &grid.nodes {
        let v = g(z);
        if !v.is_finite() {
            return Err(Error::Integration {
                node: format!("z = {z}"),
            });
        }
        terms.push(v * (1.0 - z.norm_sqr()).powf(weight_exponent) * w);
    }
    Ok(pairwise_sum(&terms))
}

fn check_exponent(p: f64) -> Result<()> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::Parameter(format!("p must lie in [1, ∞), got {p}")));
    }
    Ok(())
}

/// `(∫_D |g|^p (1−|z|²)^k dλ)^{1/p}`.
pub fn bergman_norm_disc<G>(g: G, p: f64, weight_exponent: f64, grid: &DiscGrid) -> Result<f64>
where
    G: Fn(C64) -> C64,
{
    check_exponent(p)?;
    Ok(disc_integrate(|z| g(z).norm().powf(p), weight_exponent, grid)?.powf(1.0 / p))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SphereMode {
    /// Exact parametrization of `∂B_2`: `z = (√(1−u) e^{iθ₁}, √u e^{iθ₂})`,
    /// `dσ = du dθ₁ dθ₂ / 4π²`.
    ProductRule { radial: usize, angular: usize },
    /// Normalized complex Gaussian vectors.
    MonteCarlo { seed: u64, samples: usize },
}

/// A weighted point set approximating `σ` on `∂B_n`.
#[derive(Debug, Clone)]
pub struct SphereSampler {
    dimension: usize,
    mode: SphereMode,
    nodes: Vec<(CPoint, f64)>,
}

impl SphereSampler {
    pub fn product_rule(radial: usize, angular: usize) -> Result<Self> {
        if angular == 0 {
            return Err(Error::Parameter("angular node count must be positive".into()));
        }
        let us = legendre_unit_interval(radial)?;
        let a = angular as f64;
        let mut nodes = Vec::with_capacity(radial * angular * angular);
        for &(u, w) in &us {
            let (c, s) = ((1.0 - u).sqrt(), u.sqrt());
            for t1 in 0..angular {
                let e1 = C64::from_polar(c, TAU * t1 as f64 / a);
                for t2 in 0..angular {
                    let e2 = C64::from_polar(s, TAU * t2 as f64 / a);
                    nodes.push((CPoint::new(vec![e1, e2])?, w / (a * a)));
                }
            }
        }
        Ok(Self {
            dimension: 2,
            mode: SphereMode::ProductRule { radial, angular },
            nodes,
        })
    }

    pub fn monte_carlo(dimension: usize, samples: usize, seed: u64) -> Result<Self> {
        if dimension == 0 || samples == 0 {
            return Err(Error::Parameter(
                "Monte Carlo sampling needs a positive dimension and sample count".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weight = 1.0 / samples as f64;
        let mut nodes = Vec::with_capacity(samples);
        while nodes.len() < samples {
            let coords: Vec<C64> = (0..dimension)
                .map(|_| {
                    C64::new(
                        StandardNormal.sample(&mut rng),
                        StandardNormal.sample(&mut rng),
                    )
                })
                .collect();
            let norm = coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.0 {
                nodes.push((
                    CPoint::new(coords.into_iter().map(|c| c / norm).collect())?,
                    weight,
                ));
            }
        }
        Ok(Self {
            dimension,
            mode: SphereMode::MonteCarlo { seed, samples },
            nodes,
        })
    }

    /// Product rule for `n = 2`, Monte Carlo otherwise.
    pub fn for_dimension(dimension: usize, mc_samples: usize, seed: u64) -> Result<Self> {
        if dimension == 2 {
            Self::product_rule(DEFAULT_SPHERE_RADIAL, DEFAULT_SPHERE_ANGULAR)
        } else {
            Self::monte_carlo(dimension, mc_samples, seed)
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn mode(&self) -> SphereMode {
        self.mode
    }

    pub fn nodes(&self) -> &[(CPoint, f64)] {
        &self.nodes
    }
}

/// Deterministic sample of `count` points of `∂B_n`: `(1, 0, ..., 0)` first,
/// then normalized complex Gaussian vectors from `seed`.
pub fn boundary_samples(dimension: usize, count: usize, seed: u64) -> Result<Vec<CPoint>> {
    if dimension == 0 || count == 0 {
        return Err(Error::Parameter("need a positive dimension and sample count".into()));
    }
    let mut points = vec![CPoint::unit(dimension)];
    if count > 1 {
        let mc = SphereSampler::monte_carlo(dimension, count - 1, seed)?;
        points.extend(mc.nodes.into_iter().map(|(z, _)| z));
    }
    Ok(points)
}

/// `∫_{∂B_n} g dσ`.
pub fn sphere_integrate<G>(g: G, sampler: &SphereSampler) -> Result<f64>
where
    G: Fn(&[C64]) -> f64,
{
    let mut terms = Vec::with_capacity(sampler.nodes.len());
    for (zeta, w) in &sampler.nodes {
        let v = g(zeta.coords());
        if !v.is_finite() {
            return Err(Error::Integration {
                node: format!("ζ = {:?}", zeta.coords()),
            });
        }
        terms.push(v * w);
    }
    Ok(pairwise_sum(&terms))
}

#[derive(Debug, Clone, Serialize)]
pub struct HardyNorm {
    pub p: f64,
    pub value: f64,
    /// `(r, ∫ |f(rζ)|^p dσ(ζ))` on [`HARDY_RADII`].
    pub radial_means: Vec<(f64, f64)>,
    pub monotone_in_r: bool,
}

/// `H^p` norm of a function holomorphic on a neighbourhood of the closed ball.
pub fn hardy_norm_with<F>(f: F, p: f64, sampler: &SphereSampler) -> Result<HardyNorm>
where
    F: Fn(&[C64]) -> C64,
{
    check_exponent(p)?;
    let mut radial_means = Vec::with_capacity(HARDY_RADII.len());
    let mut scratch = vec![C64::new(0.0, 0.0); sampler.dimension];
    for &r in &HARDY_RADII {
        let mut terms = Vec::with_capacity(sampler.nodes.len());
        for (zeta, w) in &sampler.nodes {
            for (s, z) in scratch.iter_mut().zip(zeta.coords()) {
                *s = z * r;
            }
            let v = f(&scratch).norm().powf(p);
            if !v.is_finite() {
                return Err(Error::Integration {
                    node: format!("r = {r}, ζ = {:?}", zeta.coords()),
                });
            }
            terms.push(v * w);
        }
        radial_means.push((r, pairwise_sum(&terms)));
    }
    let monotone_in_r = radial_means
        .windows(2)
        .all(|w| w[1].1 >= w[0].1 * (1.0 - 1e-12) - 1e-15);
    let sup = radial_means.iter().map(|m| m.1).fold(0.0, f64::max);
    Ok(HardyNorm {
        p,
        value: sup.powf(1.0 / p),
        radial_means,
        monotone_in_r,
    })
}

pub fn hardy_norm(f: &BallPolynomial, p: f64, sampler: &SphereSampler) -> Result<HardyNorm> {
    if f.dimension() != sampler.dimension {
        return Err(Error::DimensionMismatch {
            expected: sampler.dimension,
            found: f.dimension(),
        });
    }
    hardy_norm_with(|w| f.eval(w), p, sampler)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_mass_is_half() {
        for (r, t) in [(1, 1), (8, 16), (32, 128), (64, 256)] {
            let grid = DiscGrid::new(r, t).unwrap();
            assert!((grid.total_weight() - 0.5).abs() < 1e-12);
        }
        assert!(DiscGrid::new(0, 8).is_err());
        assert!(DiscGrid::new(8, 0).is_err());
    }

    #[test]
    fn disc_integrate_examples() {
        let grid = DiscGrid::default();
        assert!((disc_integrate(|_| 1.0, 0.0, &grid).unwrap() - 0.5).abs() < 1e-14);
        assert!((disc_integrate(|z| z.norm_sqr(), 0.0, &grid).unwrap() - 0.25).abs() < 1e-14);
        assert!((disc_integrate(|_| 1.0, 1.0, &grid).unwrap() - 0.25).abs() < 1e-14);
        let err = disc_integrate(|_| f64::NAN, 0.0, &grid).unwrap_err();
        assert!(matches!(err, Error::Integration { .. }));
        assert!(disc_integrate(|_| 1.0, -1.0, &grid).is_err());
    }

    #[test]
    fn bergman_norm_examples() {
        let grid = DiscGrid::default();
        let one = bergman_norm_disc(|_| C64::new(1.0, 0.0), 1.0, 0.0, &grid).unwrap();
        assert!((one - 0.5).abs() < 1e-14);
        let z = bergman_norm_disc(|z| z, 2.0, 0.0, &grid).unwrap();
        assert!((z - 0.5).abs() < 1e-14);
        let z2 = bergman_norm_disc(|z| z * z, 2.0, 0.0, &grid).unwrap();
        assert!((z2 - (1.0f64 / 6.0).sqrt()).abs() < 1e-14);
        assert!(bergman_norm_disc(|z| z, 0.5, 0.0, &grid).is_err());
    }

    #[test]
    fn sphere_examples() {
        let s = SphereSampler::product_rule(16, 16).unwrap();
        assert!((sphere_integrate(|_| 1.0, &s).unwrap() - 1.0).abs() < 1e-12);
        assert!((sphere_integrate(|z| z[0].norm_sqr(), &s).unwrap() - 0.5).abs() < 1e-13);
        let re = sphere_integrate(|z| z[0].re, &s).unwrap();
        let im = sphere_integrate(|z| z[0].im, &s).unwrap();
        assert!(re.abs() < 1e-13 && im.abs() < 1e-13);
    }

    #[test]
    fn monte_carlo_is_seeded() {
        let a = SphereSampler::monte_carlo(3, 500, 11).unwrap();
        let b = SphereSampler::monte_carlo(3, 500, 11).unwrap();
        let c = SphereSampler::monte_carlo(3, 500, 12).unwrap();
        let f = |z: &[C64]| z[1].norm_sqr();
        assert_eq!(sphere_integrate(f, &a).unwrap(), sphere_integrate(f, &b).unwrap());
        assert_ne!(sphere_integrate(f, &a).unwrap(), sphere_integrate(f, &c).unwrap());
        for (z, _) in a.nodes() {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hardy_norm_examples() {
        let s = SphereSampler::product_rule(16, 16).unwrap();
        let one = BallPolynomial::constant(2, C64::new(1.0, 0.0));
        for p in [1.0, 2.0, 3.5] {
            assert!((hardy_norm(&one, p, &s).unwrap().value - 1.0).abs() < 1e-12);
        }
        let w1 = hardy_norm(&BallPolynomial::monomial(&[1, 0]), 2.0, &s).unwrap();
        assert!((w1.value - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(w1.monotone_in_r);
        let w11 = hardy_norm(&BallPolynomial::monomial(&[2, 0]), 2.0, &s).unwrap();
        assert!((w11.value - (1.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(hardy_norm(&one, 0.9, &s).is_err());
        assert!(hardy_norm(&BallPolynomial::monomial(&[1]), 2.0, &s).is_err());
    }
}
