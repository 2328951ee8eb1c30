//! Pushforward of `(1−|z|²)^{n−2} dλ` under a disc `φ : D → B_n`, its mass
//! on the boxes `Q(ζ, δ)`, the subordination ratio, and the one-variable
//! estimates behind the box bound (harmonic indicator of an arc, boundary
//! slices, Schwarz decay, boundary moments of Blaschke products).
//!
//! Masses are in `λ = area/(2π)` units. Arc measures on the circle are
//! reported both as arc length (total `2π`) and normalized (total `1`).

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{C64, CPoint, DiscMap, HolomorphicDisc, Region};
use crate::polynomial::BallPolynomial;
use crate::quadrature::{self, bergman_norm_disc, disc_integrate, pairwise_sum, DiscGrid, SphereSampler};

/// Box masses are computed by node counting; these defaults keep the
/// counting error at a few percent down to `δ = 0.05`.
pub const BOX_GRID_RADIAL: usize = 256;
pub const BOX_GRID_ANGULAR: usize = 2048;
pub const SLICE_SAMPLES: usize = 8192;
pub const MOMENT_SAMPLES: usize = 8192;
pub const SCHWARZ_PROBES: usize = 500;
pub const SCHWARZ_TOLERANCE: f64 = 1e-9;
pub const INNER_TOLERANCE: f64 = 1e-9;

/// Box constant for `n = 2` in `λ` units: the area bound `(8/π) δ²` divided by `2π`.
pub const CARLESON_CONSTANT: f64 = 4.0 / (PI * PI);

/// `μ = φ_*((1−|z|²)^{n−2} dλ)` discretized on a disc grid.
#[derive(Debug, Clone)]
pub struct PushforwardMeasure {
    map: DiscMap,
    weight_exponent: f64,
    grid_shape: (usize, usize),
    /// `(φ(z_i), |z_i|, w_i (1−|z_i|²)^{n−2})`
    atoms: Vec<(CPoint, f64, f64)>,
}

impl PushforwardMeasure {
    pub fn new(map: DiscMap, grid: &DiscGrid) -> Result<Self> {
        let n = map.dimension();
        if n < 2 {
            return Err(Error::Parameter(
                "the pushforward weight (1−|z|²)^{n−2} needs n ≥ 2".into(),
            ));
        }
        let weight_exponent = (n - 2) as f64;
        let atoms = grid
            .nodes()
            .iter()
            .map(|&(z, w)| {
                let weight = w * (1.0 - z.norm_sqr()).powf(weight_exponent);
                (map.eval(z), z.norm(), weight)
            })
            .collect();
        Ok(Self {
            map,
            weight_exponent,
            grid_shape: (grid.radial(), grid.angular()),
            atoms,
        })
    }

    /// On the default box-mass grid.
    pub fn with_box_grid(map: DiscMap) -> Result<Self> {
        Self::new(map, &DiscGrid::new(BOX_GRID_RADIAL, BOX_GRID_ANGULAR)?)
    }

    pub fn map(&self) -> &DiscMap {
        &self.map
    }

    pub fn weight_exponent(&self) -> f64 {
        self.weight_exponent
    }

    pub fn total_mass(&self) -> f64 {
        pairwise_sum(&self.atoms.iter().map(|a| a.2).collect::<Vec<_>>())
    }

    fn check_box(&self, zeta: &CPoint, delta: f64) -> Result<Region> {
        if zeta.dim() != self.map.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.map.dimension(),
                found: zeta.dim(),
            });
        }
        if !(delta > 0.0) {
            return Err(Error::Parameter(format!("δ must be positive, got {delta}")));
        }
        Region::pseudo_ball(zeta.clone(), delta)
    }

    /// Grid nodes `z` with `φ(z) ∈ Q(ζ, δ)` but `|z| < 1 − δ`. When `φ(0) = 0`
    /// Schwarz's lemma forbids these, so the count must be zero.
    pub fn annulus_violations(&self, zeta: &CPoint, delta: f64) -> Result<usize> {
        let q = self.check_box(zeta, delta)?;
        Ok(self
            .atoms
            .iter()
            .filter(|(w, r, _)| *r < 1.0 - delta && q.contains_unchecked(w))
            .count())
    }
}

/// `μ(Q(ζ, δ))` by node counting.
pub fn pushforward_box_mass(mu: &PushforwardMeasure, zeta: &CPoint, delta: f64) -> Result<f64> {
    let q = mu.check_box(zeta, delta)?;
    let inside: Vec<f64> = mu
        .atoms
        .iter()
        .filter(|(w, _, _)| q.contains_unchecked(w))
        .map(|a| a.2)
        .collect();
    Ok(pairwise_sum(&inside))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoxEntry {
    pub zeta_index: usize,
    pub delta: f64,
    pub mass: f64,
    pub ratio_delta_n: f64,
    pub ratio_delta_sq: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CarlesonReport {
    pub dimension: usize,
    pub weight_exponent: f64,
    pub units: &'static str,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub total_mass: f64,
    pub zetas: Vec<CPoint>,
    pub deltas: Vec<f64>,
    pub entries: Vec<BoxEntry>,
    pub sup_ratio_delta_n: f64,
    pub sup_ratio_delta_sq: f64,
    /// `φ(0) = 0`, the hypothesis under which the bounds below are predicted.
    pub origin_fixed: bool,
    /// `4/π²` for `mass/δ²` when `n = 2`.
    pub predicted_bound_delta_sq: f64,
    /// `(4/π²)·2^{n−2}` for `mass/δ^n`.
    pub predicted_bound_delta_n: f64,
    pub annulus_violations: usize,
}

/// Box masses over every `(ζ, δ)` pair with both normalizations of the ratio.
pub fn carleson_scan(mu: &PushforwardMeasure, zetas: &[CPoint], deltas: &[f64]) -> Result<CarlesonReport> {
    if zetas.is_empty() || deltas.is_empty() {
        return Err(Error::Parameter("the ζ and δ grids must be nonempty".into()));
    }
    let n = mu.map.dimension();
    let origin_fixed = mu.map.fixes_origin();
    let mut entries = Vec::with_capacity(zetas.len() * deltas.len());
    let mut annulus_violations = 0;
    for (zeta_index, zeta) in zetas.iter().enumerate() {
        for &delta in deltas {
            let mass = pushforward_box_mass(mu, zeta, delta)?;
            if origin_fixed {
                annulus_violations += mu.annulus_violations(zeta, delta)?;
            }
            entries.push(BoxEntry {
                zeta_index,
                delta,
                mass,
                ratio_delta_n: mass / delta.powi(n as i32),
                ratio_delta_sq: mass / (delta * delta),
            });
        }
    }
    let sup = |f: fn(&BoxEntry) -> f64| entries.iter().map(f).fold(0.0, f64::max);
    Ok(CarlesonReport {
        dimension: n,
        weight_exponent: mu.weight_exponent,
        units: "mass in lambda = area/(2 pi); Q(zeta, delta) = {z : |1 - <z, zeta>| < delta}",
        grid_radial: mu.grid_shape.0,
        grid_angular: mu.grid_shape.1,
        total_mass: mu.total_mass(),
        zetas: zetas.to_vec(),
        deltas: deltas.to_vec(),
        sup_ratio_delta_n: sup(|e| e.ratio_delta_n),
        sup_ratio_delta_sq: sup(|e| e.ratio_delta_sq),
        entries,
        origin_fixed,
        predicted_bound_delta_sq: CARLESON_CONSTANT,
        predicted_bound_delta_n: CARLESON_CONSTANT * 2f64.powi(n as i32 - 2),
        annulus_violations,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SubordinationRatio {
    pub p: f64,
    /// `∫_D |f∘φ|^p (1−|z|²)^{n−2} dλ`
    pub disc_integral: f64,
    pub hardy_norm: f64,
    pub ratio: f64,
}

/// `∫_D |f∘φ|^p (1−|z|²)^{n−2} dλ / ‖f‖_{H^p}^p`.
pub fn subordination_ratio(
    f: &BallPolynomial,
    phi: &DiscMap,
    p: f64,
    grid: &DiscGrid,
    sampler: &SphereSampler,
) -> Result<SubordinationRatio> {
    let n = phi.dimension();
    if n < 2 {
        return Err(Error::Parameter("subordination needs n ≥ 2".into()));
    }
    if f.dimension() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.dimension(),
        });
    }
    phi.require_origin_fixed()?;
    if f.is_zero() {
        return Err(Error::UndefinedRatio("f vanishes identically".into()));
    }
    let hardy = quadrature::hardy_norm(f, p, sampler)?.value;
    if !(hardy > 0.0) {
        return Err(Error::UndefinedRatio("‖f‖_p is zero".into()));
    }
    let disc_integral = disc_integrate(
        |z| f.eval(phi.eval(z).coords()).norm().powf(p),
        (n - 2) as f64,
        grid,
    )?;
    Ok(SubordinationRatio {
        p,
        disc_integral,
        hardy_norm: hardy,
        ratio: disc_integral / hardy.powf(p),
    })
}

/// Harmonic extension to the upper half-plane of the indicator of
/// `(−δ, δ)` with kernel `2y/((x−t)² + y²)`:
/// `arctan((x+δ)/y) − arctan((x−δ)/y)`.
pub fn harmonic_indicator_halfplane(x: f64, y: f64, delta: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("y must be positive, got {y}")));
    }
    if !(delta > 0.0) {
        return Err(Error::Parameter(format!("δ must be positive, got {delta}")));
    }
    Ok(((x + delta) / y).atan() - ((x - delta) / y).atan())
}

/// Half-angle `β` of the arc `I = {θ : |1 − e^{iθ}| < δ} = (−β, β)`.
pub fn arc_half_angle(delta: f64) -> f64 {
    if delta >= 2.0 {
        PI
    } else {
        2.0 * (delta / 2.0).asin()
    }
}

/// `Ĩ(z) = ∫_I (1−|z|²)/|e^{iθ} − z|² dθ` for `I = {θ : |1 − e^{iθ}| < δ}`.
///
/// The kernel has total mass `2π`, so `Ĩ(0) = |I|` and `Ĩ → 2π` on `I`.
/// Evaluated in closed form: `Ĩ(z) = 2Θ − |I|`, where `Θ` is the angle at `z`
/// swept counterclockwise from `e^{−iβ} − z` to `e^{iβ} − z`.
pub fn harmonic_indicator_disc(z: C64, delta: f64) -> Result<f64> {
    if z.norm_sqr() >= 1.0 {
        return Err(Error::Domain(format!("|{z}| >= 1")));
    }
    if !(delta > 0.0) {
        return Err(Error::Parameter(format!("δ must be positive, got {delta}")));
    }
    let beta = arc_half_angle(delta);
    if beta >= PI {
        return Ok(TAU);
    }
    let theta = ((C64::from_polar(1.0, beta) - z) / (C64::from_polar(1.0, -beta) - z))
        .arg()
        .rem_euclid(TAU);
    Ok(2.0 * theta - 2.0 * beta)
}

/// `A_δ = {z : Ĩ(z) > π/4}`.
pub fn in_level_set(z: C64, delta: f64) -> Result<bool> {
    Ok(harmonic_indicator_disc(z, delta)? > FRAC_PI_4)
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceMeasure {
    pub rho: f64,
    pub delta: f64,
    /// Arc length of `{θ : φ(ρe^{iθ}) ∈ A_δ}`.
    pub arc_length: f64,
    /// The same set under the normalized measure `dθ/2π`.
    pub normalized: f64,
    /// Arc length `|I|` of `I`.
    pub arc_of_interval: f64,
    /// `(4/π)|I|`, the bound for `normalized`.
    pub normalized_bound: f64,
    pub within_bound: bool,
}

/// Measure of the boundary slice `{θ : Ĩ(φ(ρe^{iθ})) > π/4}` of a scalar disc
/// with `φ(0) = 0`, from 8192 equispaced samples.
pub fn boundary_slice_measure(phi: &DiscMap, rho: f64, delta: f64) -> Result<SliceMeasure> {
    if phi.dimension() != 1 {
        return Err(Error::Parameter("boundary slices need a scalar disc".into()));
    }
    phi.require_origin_fixed()?;
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::Parameter(format!("ρ must lie in [0, 1), got {rho}")));
    }
    let mut hits = 0usize;
    for i in 0..SLICE_SAMPLES {
        let z = C64::from_polar(rho, TAU * i as f64 / SLICE_SAMPLES as f64);
        let w = phi.eval_coordinate(0, z);
        if w.norm_sqr() < 1.0 && in_level_set(w, delta)? {
            hits += 1;
        }
    }
    let normalized = hits as f64 / SLICE_SAMPLES as f64;
    let arc_of_interval = 2.0 * arc_half_angle(delta);
    let normalized_bound = 4.0 / PI * arc_of_interval;
    Ok(SliceMeasure {
        rho,
        delta,
        arc_length: TAU * normalized,
        normalized,
        arc_of_interval,
        normalized_bound,
        within_bound: normalized <= normalized_bound,
    })
}

fn uniform_disc_point(rng: &mut ChaCha8Rng) -> C64 {
    let r = rng.gen::<f64>().sqrt();
    C64::from_polar(r, TAU * rng.gen::<f64>())
}

#[derive(Debug, Clone, Serialize)]
pub struct SchwarzDecayReport {
    pub power: u32,
    pub p: f64,
    pub probes: usize,
    /// `max_z |f(φ(z))| − |z|` over the probes.
    pub max_excess: f64,
    pub schwarz_holds: bool,
    /// `‖(f∘φ)^k‖_{A^p}^p`.
    pub norm_p: f64,
    /// `1/(kp + 2)`.
    pub bound: f64,
    pub decay_holds: bool,
    pub sphere_sup: f64,
}

/// Checks `|f∘φ(z)| ≤ |z|` on random probes and `‖(f∘φ)^k‖_{A^p}^p ≤ 1/(kp+2)`
/// for `f(0) = 0`, `|f| ≤ 1` on the sphere and `φ(0) = 0`.
pub fn schwarz_decay_check(
    f: &BallPolynomial,
    phi: &DiscMap,
    power: u32,
    p: f64,
    grid: &DiscGrid,
    sampler: &SphereSampler,
    seed: u64,
) -> Result<SchwarzDecayReport> {
    if power == 0 {
        return Err(Error::Parameter("the power k must be at least 1".into()));
    }
    if f.dimension() != phi.dimension() || sampler.dimension() != phi.dimension() {
        return Err(Error::DimensionMismatch {
            expected: phi.dimension(),
            found: f.dimension(),
        });
    }
    phi.require_origin_fixed()?;
    let origin = f.eval(CPoint::origin(f.dimension()).coords());
    if origin.norm() > 1e-12 {
        return Err(Error::Precondition(format!("f(0) = {origin} ≠ 0")));
    }
    let sphere_sup = sampler
        .nodes()
        .iter()
        .map(|(z, _)| f.eval(z.coords()).norm())
        .fold(0.0, f64::max);
    if sphere_sup > 1.0 + SCHWARZ_TOLERANCE {
        return Err(Error::Precondition(format!(
            "sup |f| on the sphere sample is {sphere_sup}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_excess = (0..SCHWARZ_PROBES)
        .map(|_| {
            let z = uniform_disc_point(&mut rng);
            f.eval(phi.eval(z).coords()).norm() - z.norm()
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let norm = bergman_norm_disc(|z| f.eval(phi.eval(z).coords()).powu(power), p, 0.0, grid)?;
    let norm_p = norm.powf(p);
    let bound = 1.0 / (power as f64 * p + 2.0);
    Ok(SchwarzDecayReport {
        power,
        p,
        probes: SCHWARZ_PROBES,
        max_excess,
        schwarz_holds: max_excess <= SCHWARZ_TOLERANCE,
        norm_p,
        bound,
        decay_holds: norm_p <= bound * (1.0 + 1e-10) + 1e-14,
        sphere_sup,
    })
}

/// Finite Blaschke product `Π (z − a)/(1 − conj(a) z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlaschkeProduct {
    zeros: Vec<C64>,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<C64>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::Shape("a Blaschke product needs at least one zero".into()));
        }
        if let Some(a) = zeros.iter().find(|a| a.norm_sqr() >= 1.0) {
            return Err(Error::Domain(format!("zero {a} is not in the open disc")));
        }
        Ok(Self { zeros })
    }

    pub fn zeros(&self) -> &[C64] {
        &self.zeros
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.zeros.iter().fold(C64::new(1.0, 0.0), |acc, &a| {
            acc * (z - a) / (C64::new(1.0, 0.0) - a.conj() * z)
        })
    }
}

/// `∫_T (φ*)^j dσ` on 8192 boundary samples. For an inner `φ` with
/// `φ(0) = 0` the pushforward of `σ` is `σ`, so this is `1` for `j = 0` and
/// `0` otherwise.
pub fn inner_pushforward_moments(phi: &BlaschkeProduct, j: u32) -> Result<C64> {
    if phi.eval(C64::new(0.0, 0.0)).norm() > 1e-12 {
        return Err(Error::Precondition("the inner function must vanish at 0".into()));
    }
    let mut re = Vec::with_capacity(MOMENT_SAMPLES);
    let mut im = Vec::with_capacity(MOMENT_SAMPLES);
    for i in 0..MOMENT_SAMPLES {
        let b = phi.eval(C64::from_polar(1.0, TAU * i as f64 / MOMENT_SAMPLES as f64));
        if (b.norm() - 1.0).abs() > INNER_TOLERANCE {
            return Err(Error::Precondition(format!(
                "not inner: |φ| = {} on the boundary",
                b.norm()
            )));
        }
        let v = b.powu(j);
        re.push(v.re);
        im.push(v.im);
    }
    let n = MOMENT_SAMPLES as f64;
    Ok(C64::new(pairwise_sum(&re) / n, pairwise_sum(&im) / n))
}
