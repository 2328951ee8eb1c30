//! Oracles and generators shared by the integration tests. Nothing here calls
//! into the library's numerics except constructors.

#![allow(dead_code)]

use std::f64::consts::TAU;

use disc_analysis::{CPoint, DiscMap, C64};
use rand::Rng;

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the disc of radius `r`.
pub fn disc_point<R: Rng>(rng: &mut R, r: f64) -> C64 {
    C64::from_polar(r * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>())
}

/// Point of `B_n` with modulus below `r`, direction uniform.
pub fn ball_point<R: Rng>(rng: &mut R, n: usize, r: f64) -> CPoint {
    let v: Vec<C64> = (0..n)
        .map(|_| C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
        .collect();
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let s = r * rng.gen::<f64>() / norm;
    CPoint::new(v.into_iter().map(|x| x * s).collect()).unwrap()
}

/// Direct evaluation of a polynomial disc from its coefficients.
pub fn eval_coefficients(coefficients: &[Vec<C64>], z: C64) -> Vec<C64> {
    coefficients
        .iter()
        .map(|cs| cs.iter().rev().fold(c(0.0), |acc, &a| acc * z + a))
        .collect()
}

/// Random polynomial disc scaled so its sampled boundary sup is `0.999`.
pub fn random_disc<R: Rng>(rng: &mut R, n: usize, degree: usize, origin_fixed: bool) -> DiscMap {
    let mut coefficients: Vec<Vec<C64>> = (0..n)
        .map(|_| {
            (0..=degree)
                .map(|m| {
                    if m == 0 && origin_fixed {
                        c(0.0)
                    } else {
                        C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
                    }
                })
                .collect()
        })
        .collect();
    let sup = (0..8192)
        .map(|i| {
            let z = C64::from_polar(1.0, TAU * i as f64 / 8192.0);
            eval_coefficients(&coefficients, z).iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
        })
        .fold(0.0, f64::max);
    for cs in &mut coefficients {
        for a in cs.iter_mut() {
            *a *= 0.999 / sup;
        }
    }
    DiscMap::validate(coefficients, n, degree).unwrap()
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
/// symmetric embedding `[[A, −B], [B, A]]` of `A + iB`. Every eigenvalue
/// appears twice there; one copy of each is returned, ascending.
pub fn jacobi_hermitian_eigenvalues(m: &[Vec<C64>]) -> Vec<f64> {
    let n = m.len();
    let size = 2 * n;
    let mut a = vec![vec![0.0; size]; size];
    for i in 0..n {
        for j in 0..n {
            let h = 0.5 * (m[i][j] + m[j][i].conj());
            a[i][j] = h.re;
            a[i + n][j + n] = h.re;
            a[i][j + n] = -h.im;
            a[i + n][j] = h.im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..size)
            .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..size {
            for q in (p + 1)..size {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                for k in 0..size {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = cs * akp - sn * akq;
                    a[k][q] = sn * akp + cs * akq;
                }
                for k in 0..size {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = cs * apk - sn * aqk;
                    a[q][k] = sn * apk + cs * aqk;
                }
            }
        }
    }
    let mut d: Vec<f64> = (0..size).map(|i| a[i][i]).collect();
    d.sort_by(f64::total_cmp);
    d.into_iter().step_by(2).collect()
}

/// Pick matrix straight from its entry formula.
pub fn pick_entries(nodes: &[C64], targets: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = nodes.len();
    (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    let pairing: C64 = targets[l].iter().zip(&targets[k]).map(|(x, y)| x * y.conj()).sum();
                    (c(1.0) - pairing) / (c(1.0) - nodes[k].conj() * nodes[l])
                })
                .collect()
        })
        .collect()
}

/// Area of `{|z| < 1, |1 − z| < δ}` by the two-circle lens formula.
pub fn lens_area(delta: f64) -> f64 {
    delta * delta * (delta / 2.0).acos() + (1.0 - delta * delta / 2.0).acos()
        - 0.5 * (delta * delta * (4.0 - delta * delta)).sqrt()
}

/// Poisson integral of the indicator of the arc `{|e^{it} − 1| < δ}` by the
/// midpoint rule, normalized so the full circle gives `2π`.
pub fn poisson_arc(z: C64, delta: f64, samples: usize) -> f64 {
    let beta = 2.0 * (delta / 2.0).min(1.0).asin();
    let h = 2.0 * beta / samples as f64;
    (0..samples)
        .map(|i| {
            let t = -beta + (i as f64 + 0.5) * h;
            let w = C64::from_polar(1.0, t);
            (1.0 - z.norm_sqr()) / (w - z).norm_sqr() * h
        })
        .sum()
}

/// Gleason distance from `1 − |ψ_a(b)|²` written out directly.
pub fn gleason_oracle(a: &[C64], b: &[C64]) -> f64 {
    let na: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    let nb: f64 = b.iter().map(|x| x.norm_sqr()).sum();
    let ab: C64 = a.iter().zip(b).map(|(x, y)| x * y.conj()).sum();
    (1.0 - (1.0 - na) * (1.0 - nb) / (c(1.0) - ab).norm_sqr()).max(0.0).sqrt()
}
