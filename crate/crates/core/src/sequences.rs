//! Point sequences in the ball: weighted `ℓ^p` norms, Gleason separation,
//! greedy nets, admissible-region counts and discs passing through a
//! sequence.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    disc_automorphism, gleason_distance_disc, gleason_unchecked, BallAutomorphism, CPoint,
    DiscMap, HolomorphicDisc, Region, C64,
};
use crate::pick::{psd_check, scalar_np_solve, PickProblem, ScalarInterpolant};
use crate::quadrature::{hardy_norm_with, HardyNorm, SphereSampler};

/// Residual bound for `φ(α_k) = a_k`.
pub const TRACE_TOLERANCE: f64 = 1e-8;
/// Slack in the necessary-condition inequalities.
pub const NECESSARY_SLACK: f64 = 1e-10;
/// Normalization check `a_0 = 0`, `α_0 = 0`.
pub const NORMALIZED_TOLERANCE: f64 = 1e-12;

/// Finite sequence of points of `B_n`.
///
/// JSON form: `{"dimension": 2, "points": [[[re, im], [re, im]], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSequence {
    dimension: usize,
    points: Vec<CPoint>,
}

#[derive(Deserialize)]
struct RawSequence {
    dimension: usize,
    points: Vec<CPoint>,
}

impl<'de> Deserialize<'de> for PointSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSequence::deserialize(d)?;
        PointSequence::new(raw.dimension, raw.points).map_err(serde::de::Error::custom)
    }
}

impl PointSequence {
    pub fn new(dimension: usize, points: Vec<CPoint>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Shape("sequence dimension must be positive".into()));
        }
        for p in &points {
            if p.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: p.dim(),
                });
            }
            p.check_in_ball()?;
        }
        Ok(Self { dimension, points })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[CPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points with `|a| ≤ radius`, order kept.
    pub fn truncate(&self, radius: f64) -> PointSequence {
        PointSequence {
            dimension: self.dimension,
            points: self
                .points
                .iter()
                .filter(|a| a.norm() <= radius)
                .cloned()
                .collect(),
        }
    }
}

fn weighted_norm(lambda: &[C64], moduli_sqr: &[f64], p: f64, exponent: f64) -> Result<f64> {
    if lambda.len() != moduli_sqr.len() {
        return Err(Error::Shape(format!(
            "{} weights for {} points",
            lambda.len(),
            moduli_sqr.len()
        )));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::Parameter(format!("p must lie in [1, ∞), got {p}")));
    }
    if !(exponent >= 0.0) || !exponent.is_finite() {
        return Err(Error::Parameter(format!(
            "weight exponent must be nonnegative, got {exponent}"
        )));
    }
    let terms: Vec<f64> = lambda
        .iter()
        .zip(moduli_sqr)
        .map(|(l, m)| l.norm().powf(p) * (1.0 - m).powf(exponent))
        .collect();
    Ok(crate::quadrature::pairwise_sum(&terms).powf(1.0 / p))
}

/// `(Σ_k |λ_k|^p (1−|a_k|²)^e)^{1/p}`.
pub fn weighted_seq_norm(lambda: &[C64], points: &[CPoint], p: f64, exponent: f64) -> Result<f64> {
    let m: Vec<f64> = points.iter().map(CPoint::norm_sqr).collect();
    weighted_norm(lambda, &m, p, exponent)
}

/// The same norm for nodes in the disc.
pub fn weighted_seq_norm_disc(lambda: &[C64], nodes: &[C64], p: f64, exponent: f64) -> Result<f64> {
    let m: Vec<f64> = nodes.iter().map(|z| z.norm_sqr()).collect();
    weighted_norm(lambda, &m, p, exponent)
}

/// Smallest pairwise Gleason distance.
pub fn min_separation(seq: &PointSequence) -> Result<f64> {
    if seq.len() < 2 {
        return Err(Error::Parameter("separation needs at least two points".into()));
    }
    let pts = &seq.points;
    let mut best: f64 = 1.0;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.min(gleason_unchecked(pts[i].coords(), pts[j].coords()));
        }
    }
    Ok(best)
}

/// Smallest pairwise Gleason distance between disc nodes.
pub fn min_separation_disc(nodes: &[C64]) -> Result<f64> {
    if nodes.len() < 2 {
        return Err(Error::Parameter("separation needs at least two points".into()));
    }
    let mut best: f64 = 1.0;
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            best = best.min(gleason_distance_disc(nodes[i], nodes[j])?);
        }
    }
    Ok(best)
}

const HALTON_BASES: [u64; 4] = [2, 3, 5, 7];

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut out = 0.0;
    while i > 0 {
        out += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    out
}

/// Candidates for [`greedy_net`]: a Halton sequence in `[0,1)^4` with a
/// seeded Cranley–Patterson shift, mapped to the uniform distribution on
/// `{z ∈ C² : |z| ≤ radius}` and sorted by modulus.
///
/// Sorting makes greedy selection commute with truncation: the net built on
/// the candidates with `|z| ≤ r'` is the part of the full net with `|z| ≤ r'`.
pub fn net_candidates(radius: f64, count: usize, seed: u64) -> Result<Vec<CPoint>> {
    if count == 0 {
        return Err(Error::Parameter("candidate count must be positive".into()));
    }
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Parameter(format!("truncation radius must lie in (0, 1), got {radius}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: [f64; 4] = std::array::from_fn(|_| rng.gen::<f64>());
    let mut out: Vec<(f64, CPoint)> = (1..=count as u64)
        .map(|i| {
            let u: [f64; 4] =
                std::array::from_fn(|d| (radical_inverse(i, HALTON_BASES[d]) + shift[d]).fract());
            let rho = radius * u[0].powf(0.25);
            let s = u[1];
            let z = CPoint::new(vec![
                C64::from_polar(rho * (1.0 - s).sqrt(), TAU * u[2]),
                C64::from_polar(rho * s.sqrt(), TAU * u[3]),
            ])
            .expect("finite coordinates");
            (z.norm(), z)
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out.into_iter().map(|(_, z)| z).collect())
}

/// Greedy maximal `δ`-separated subset of `candidates`, scanned in order.
pub fn greedy_select(candidates: &[CPoint], delta: f64) -> Result<PointSequence> {
    let dimension = candidates
        .first()
        .map(CPoint::dim)
        .ok_or_else(|| Error::Parameter("candidate set is empty".into()))?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Parameter(format!("δ must lie in (0, 1), got {delta}")));
    }
    let mut net: Vec<CPoint> = Vec::new();
    for c in candidates {
        // recent picks have similar modulus, so scan backwards to reject early
        let far = net
            .iter()
            .rev()
            .all(|s| gleason_unchecked(s.coords(), c.coords()) >= delta);
        if far {
            net.push(c.clone());
        }
    }
    PointSequence::new(dimension, net)
}

/// Greedy `δ`-net of `{|z| ≤ radius}` in `B_2` over `candidate_count` seeded
/// candidates.
pub fn greedy_net(delta: f64, radius: f64, candidate_count: usize, seed: u64) -> Result<PointSequence> {
    greedy_select(&net_candidates(radius, candidate_count, seed)?, delta)
}

#[derive(Debug, Clone, Serialize)]
pub struct NetCheck {
    pub delta: f64,
    pub size: usize,
    pub min_separation: f64,
    /// Largest distance from a candidate to its nearest net point.
    pub covering_radius: f64,
    pub separated: bool,
    pub maximal: bool,
}

/// Brute-force re-check of separation and maximality against the candidates.
pub fn verify_net(net: &PointSequence, candidates: &[CPoint], delta: f64) -> Result<NetCheck> {
    let min_sep = if net.len() >= 2 { min_separation(net)? } else { 1.0 };
    let mut covering: f64 = 0.0;
    for c in candidates {
        let nearest = net
            .points
            .iter()
            .map(|s| gleason_unchecked(s.coords(), c.coords()))
            .fold(1.0, f64::min);
        covering = covering.max(nearest);
    }
    Ok(NetCheck {
        delta,
        size: net.len(),
        min_separation: min_sep,
        covering_radius: covering,
        separated: min_sep >= delta - 1e-12,
        maximal: covering < delta,
    })
}

/// Number of points of `seq` in `Γ(ζ, α)` for each `ζ`.
pub fn admissible_counts(seq: &PointSequence, zetas: &[CPoint], alpha: f64) -> Result<Vec<usize>> {
    if !(alpha > 0.5) || !alpha.is_finite() {
        return Err(Error::Parameter(format!("aperture must exceed 1/2, got {alpha}")));
    }
    zetas
        .iter()
        .map(|zeta| {
            let region = Region::admissible(zeta.clone(), alpha)?;
            let mut count = 0;
            for a in &seq.points {
                if region.contains(a)? {
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceResiduals {
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub passed: bool,
}

/// `|φ(α_k) − a_k|` for each `k`.
pub fn disc_trace_residuals<F>(phi: &F, sigma: &[C64], seq: &PointSequence) -> Result<TraceResiduals>
where
    F: HolomorphicDisc + ?Sized,
{
    if sigma.len() != seq.len() {
        return Err(Error::Shape(format!(
            "{} nodes for {} points",
            sigma.len(),
            seq.len()
        )));
    }
    if phi.dimension() != seq.dimension {
        return Err(Error::DimensionMismatch {
            expected: seq.dimension,
            found: phi.dimension(),
        });
    }
    let residuals: Vec<f64> = sigma
        .iter()
        .zip(&seq.points)
        .map(|(&alpha, a)| phi.eval(alpha).distance(a))
        .collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    Ok(TraceResiduals {
        passed: max_residual <= TRACE_TOLERANCE,
        residuals,
        max_residual,
    })
}

/// Moves the first point of `seq` and the first node of `sigma` to the origin
/// with `ψ_{a_0}` and `m_{α_0}`. Both maps are Gleason isometries.
pub fn normalize_to_origin(seq: &PointSequence, sigma: &[C64]) -> Result<(PointSequence, Vec<C64>)> {
    let (a0, alpha0) = match (seq.points.first(), sigma.first()) {
        (Some(a), Some(&s)) => (a.clone(), s),
        _ => return Err(Error::Parameter("normalization needs nonempty input".into())),
    };
    let psi = BallAutomorphism::new(a0)?;
    let points = seq
        .points
        .iter()
        .map(|a| psi.apply(a))
        .collect::<Result<Vec<_>>>()?;
    let mut points = points;
    // ψ_a(a) = 0 exactly in exact arithmetic
    points[0] = CPoint::origin(seq.dimension);
    for &s in sigma {
        if s.norm_sqr() >= 1.0 {
            return Err(Error::Domain(format!("node {s} is not in the disc")));
        }
    }
    let mut nodes: Vec<C64> = sigma.iter().map(|&s| disc_automorphism(alpha0, s)).collect();
    nodes[0] = C64::new(0.0, 0.0);
    Ok((PointSequence::new(seq.dimension, points)?, nodes))
}

/// `z ↦ (g_1(z), ..., g_n(z)) / √n` with scalar Schur interpolants `g_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoordinateDisc {
    coordinates: Vec<ScalarInterpolant>,
    scale: f64,
}

impl CoordinateDisc {
    pub fn coordinates(&self) -> &[ScalarInterpolant] {
        &self.coordinates
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

impl HolomorphicDisc for CoordinateDisc {
    fn dimension(&self) -> usize {
        self.coordinates.len()
    }

    fn eval(&self, z: C64) -> CPoint {
        CPoint::new(self.coordinates.iter().map(|g| g.eval(z) * self.scale).collect())
            .expect("interpolant values are finite")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnyDisc {
    Polynomial(DiscMap),
    Coordinatewise(CoordinateDisc),
}

impl HolomorphicDisc for AnyDisc {
    fn dimension(&self) -> usize {
        match self {
            AnyDisc::Polynomial(d) => d.dimension(),
            AnyDisc::Coordinatewise(d) => d.dimension(),
        }
    }

    fn eval(&self, z: C64) -> CPoint {
        match self {
            AnyDisc::Polynomial(d) => d.eval(z),
            AnyDisc::Coordinatewise(d) => d.eval(z),
        }
    }
}

/// A disc `φ` together with nodes `σ` such that `φ(σ) = S`.
#[derive(Debug, Clone, Serialize)]
pub struct DiscThroughS {
    sigma: Vec<C64>,
    disc: AnyDisc,
    points: PointSequence,
    residuals: TraceResiduals,
}

/// Pick matrices with smallest eigenvalue below this fraction of the trace
/// are pushed further out before solving.
const CONSTRUCTION_MARGIN: f64 = 1e-6;
const CONSTRUCTION_STEPS: usize = 40;

impl DiscThroughS {
    /// Checks the trace residuals of an explicit disc.
    pub fn new(sigma: Vec<C64>, disc: AnyDisc, points: PointSequence) -> Result<Self> {
        for &s in &sigma {
            if s.norm_sqr() >= 1.0 {
                return Err(Error::Domain(format!("node {s} is not in the disc")));
            }
        }
        let residuals = disc_trace_residuals(&disc, &sigma, &points)?;
        if !residuals.passed {
            return Err(Error::Precondition(format!(
                "disc misses the sequence: max residual {:e}",
                residuals.max_residual
            )));
        }
        Ok(Self {
            sigma,
            disc,
            points,
            residuals,
        })
    }

    /// Builds a disc through `points`, whose first point must be the origin.
    ///
    /// The nodes are `α_0 = 0` and `α_k = t e^{2πik/m}` for `k ≥ 1`. Each
    /// coordinate of `√n · a_k` is interpolated by a scalar Schur function;
    /// `t` is moved towards 1 until every scalar Pick matrix is positive
    /// definite with some margin.
    pub fn construct(points: PointSequence) -> Result<Self> {
        let n = points.dimension;
        let m = points.len();
        if m == 0 {
            return Err(Error::Parameter("cannot build a disc through no points".into()));
        }
        if points.points[0].norm() > NORMALIZED_TOLERANCE {
            return Err(Error::Precondition("first point must be the origin".into()));
        }
        let root_n = (n as f64).sqrt();
        let targets: Vec<Vec<C64>> = (0..n)
            .map(|j| points.points.iter().map(|a| a.coords()[j] * root_n).collect())
            .collect();
        if targets.iter().flatten().any(|w| w.norm() >= 1.0 - 1e-9) {
            return Err(Error::Parameter(
                "every coordinate must be smaller than 1/√n in modulus".into(),
            ));
        }
        let mut t: f64 = 0.5;
        for _ in 0..CONSTRUCTION_STEPS {
            let nodes: Vec<C64> = (0..m)
                .map(|k| {
                    if k == 0 {
                        C64::new(0.0, 0.0)
                    } else {
                        C64::from_polar(t, TAU * k as f64 / (m - 1) as f64)
                    }
                })
                .collect();
            let problems = targets
                .iter()
                .map(|w| PickProblem::scalar(nodes.clone(), w.clone()))
                .collect::<Result<Vec<_>>>()?;
            let mut ready = true;
            for prob in &problems {
                let pick = crate::pick::build_pick_matrix(prob)?;
                let verdict = psd_check(&pick, crate::pick::DEFAULT_PSD_TOLERANCE)?;
                if verdict.min_eigenvalue <= CONSTRUCTION_MARGIN * pick.trace() {
                    ready = false;
                    break;
                }
            }
            if ready {
                let coordinates = problems
                    .iter()
                    .map(scalar_np_solve)
                    .collect::<Result<Vec<_>>>()?;
                let disc = AnyDisc::Coordinatewise(CoordinateDisc {
                    coordinates,
                    scale: 1.0 / root_n,
                });
                return Self::new(nodes, disc, points);
            }
            t = 0.5 * (1.0 + t);
        }
        Err(Error::Conditioning(
            "no node radius made the coordinate Pick matrices definite".into(),
        ))
    }

    pub fn sigma(&self) -> &[C64] {
        &self.sigma
    }

    pub fn disc(&self) -> &AnyDisc {
        &self.disc
    }

    pub fn points(&self) -> &PointSequence {
        &self.points
    }

    pub fn residuals(&self) -> &TraceResiduals {
        &self.residuals
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NecessaryConditionReport {
    pub p: f64,
    /// `|α_k| − |a_k|`; nonnegative when the modulus bound holds.
    pub modulus_gaps: Vec<f64>,
    pub modulus_bound_holds: bool,
    pub disc_norm: f64,
    pub ball_norm: f64,
    pub norm_gap: f64,
    pub norm_bound_holds: bool,
    pub node_separation: Option<f64>,
    pub point_separation: Option<f64>,
    pub separation_transfers: bool,
    pub passed: bool,
}

/// For a normalized disc through a sequence in `B_2`: `|a_k| ≤ |α_k|` and
/// `‖λ‖ over σ ≤ ‖λ‖ over S` with weight exponent 2 on both sides. Also
/// reports whether `σ` is at least as separated as `S`.
pub fn necessary_condition_check(
    d: &DiscThroughS,
    lambda: &[C64],
    p: f64,
) -> Result<NecessaryConditionReport> {
    if d.points.dimension != 2 {
        return Err(Error::Precondition(format!(
            "the check is set in B_2, got dimension {}",
            d.points.dimension
        )));
    }
    let normalized = d.sigma.first().is_some_and(|s| s.norm() <= NORMALIZED_TOLERANCE)
        && d.points.points.first().is_some_and(|a| a.norm() <= NORMALIZED_TOLERANCE);
    if !normalized {
        return Err(Error::Precondition(
            "the first node and the first point must both be the origin".into(),
        ));
    }
    let modulus_gaps: Vec<f64> = d
        .sigma
        .iter()
        .zip(&d.points.points)
        .map(|(s, a)| s.norm() - a.norm())
        .collect();
    let modulus_bound_holds = modulus_gaps.iter().all(|&g| g >= -NECESSARY_SLACK);
    let disc_norm = weighted_seq_norm_disc(lambda, &d.sigma, p, 2.0)?;
    let ball_norm = weighted_seq_norm(lambda, &d.points.points, p, 2.0)?;
    let norm_gap = ball_norm - disc_norm;
    let norm_bound_holds = norm_gap >= -NECESSARY_SLACK;
    let (node_separation, point_separation) = if d.sigma.len() >= 2 {
        (
            Some(min_separation_disc(&d.sigma)?),
            Some(min_separation(&d.points)?),
        )
    } else {
        (None, None)
    };
    let separation_transfers = match (node_separation, point_separation) {
        (Some(a), Some(b)) => a >= b - NECESSARY_SLACK,
        _ => true,
    };
    Ok(NecessaryConditionReport {
        p,
        modulus_gaps,
        modulus_bound_holds,
        disc_norm,
        ball_norm,
        norm_gap,
        norm_bound_holds,
        node_separation,
        point_separation,
        separation_transfers,
        passed: modulus_bound_holds && norm_bound_holds && separation_transfers,
    })
}

/// Discs through small subsets of `net`: around each of up to `bases` net
/// points, the net is moved to the origin and the nearest points whose
/// coordinates stay below `0.9/√2` are interpolated.
pub fn discs_through_net(net: &PointSequence, bases: usize, subset_size: usize) -> Result<Vec<DiscThroughS>> {
    let bound = 0.9 / (net.dimension as f64).sqrt();
    let mut out = Vec::new();
    let stride = (net.len() / bases.max(1)).max(1);
    for base in net.points.iter().step_by(stride).take(bases) {
        let psi = BallAutomorphism::new(base.clone())?;
        let mut moved: Vec<CPoint> = net
            .points
            .iter()
            .filter(|a| *a != base)
            .map(|a| psi.apply(a))
            .collect::<Result<Vec<_>>>()?;
        moved.retain(|a| a.coords().iter().all(|c| c.norm() < bound));
        moved.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
        moved.truncate(subset_size.saturating_sub(1));
        let mut pts = vec![CPoint::origin(net.dimension)];
        pts.extend(moved);
        out.push(DiscThroughS::construct(PointSequence::new(net.dimension, pts)?)?);
    }
    Ok(out)
}

/// `‖f‖` and `‖T_a f‖` in `H^p(B_n)`, where
/// `T_a f(z) = (1−|a|²)^{n/p} (1−⟨z,a⟩)^{−2n/p} f(ψ_a(z))` is the isometry
/// of `H^p` induced by the automorphism `ψ_a`.
pub fn automorphism_transform_norms<F>(
    f: F,
    a: &CPoint,
    p: f64,
    sampler: &SphereSampler,
) -> Result<(HardyNorm, HardyNorm)>
where
    F: Fn(&[C64]) -> C64,
{
    if a.dim() != sampler.dimension() {
        return Err(Error::DimensionMismatch {
            expected: sampler.dimension(),
            found: a.dim(),
        });
    }
    let psi = BallAutomorphism::new(a.clone())?;
    let n = a.dim() as f64;
    let factor = (1.0 - a.norm_sqr()).powf(n / p);
    let transformed = |z: &[C64]| {
        let zp = CPoint::new(z.to_vec()).expect("finite coordinates");
        let denom = (C64::new(1.0, 0.0) - zp.inner(a)).powf(-2.0 * n / p);
        f(psi.apply_unchecked(&zp).coords()) * denom * factor
    };
    let plain = hardy_norm_with(&f, p, sampler)?;
    let image = hardy_norm_with(transformed, p, sampler)?;
    Ok((plain, image))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn pt(x: f64, y: f64) -> CPoint {
        CPoint::real(&[x, y]).unwrap()
    }

    #[test]
    fn weighted_norm_examples() {
        let pts = [pt(0.0, 0.0), pt(0.5, 0.0)];
        let v = weighted_seq_norm(&[c(1.0), c(1.0)], &pts, 2.0, 2.0).unwrap();
        assert!((v - 1.25).abs() < 1e-15);
        assert_eq!(weighted_seq_norm(&[c(0.0), c(0.0)], &pts, 2.0, 2.0).unwrap(), 0.0);
        assert_eq!(weighted_seq_norm(&[c(1.0)], &pts[..1], 3.0, 7.0).unwrap(), 1.0);
        assert!(weighted_seq_norm(&[c(1.0)], &pts, 2.0, 2.0).is_err());
    }

    #[test]
    fn separation_examples() {
        let s = PointSequence::new(2, vec![pt(0.0, 0.0), pt(0.5, 0.0)]).unwrap();
        assert!((min_separation(&s).unwrap() - 0.5).abs() < 1e-15);
        let dup = PointSequence::new(2, vec![pt(0.2, 0.1), pt(0.2, 0.1)]).unwrap();
        assert_eq!(min_separation(&dup).unwrap(), 0.0);
        let sym = PointSequence::new(2, vec![pt(0.3, 0.0), pt(-0.3, 0.0)]).unwrap();
        assert!((min_separation(&sym).unwrap() - 0.6 / 1.09).abs() < 1e-14);
        assert!(min_separation(&PointSequence::new(2, vec![pt(0.0, 0.0)]).unwrap()).is_err());
    }

    #[test]
    fn net_examples() {
        let cands = net_candidates(0.5, 300, 1).unwrap();
        let all_close = cands.iter().all(|x| {
            cands
                .iter()
                .all(|y| gleason_unchecked(x.coords(), y.coords()) < 0.9)
        });
        let net = greedy_select(&cands, 0.9).unwrap();
        assert_eq!(net.len() == 1, all_close);
        assert_eq!(net.points()[0], cands[0]);

        let tiny = greedy_select(&cands, 1e-9).unwrap();
        assert_eq!(tiny.len(), cands.len());
        assert!(net_candidates(0.5, 0, 1).is_err());
        assert!(greedy_net(0.0, 0.5, 10, 1).is_err());
    }

    #[test]
    fn admissible_examples() {
        let seq = PointSequence::new(
            2,
            (1..=12)
                .map(|k| pt(1.0 - 0.5f64.powi(k), 0.0))
                .collect(),
        )
        .unwrap();
        let counts = admissible_counts(&seq, &[pt(1.0, 0.0), pt(0.0, 1.0)], 1.0).unwrap();
        assert_eq!(counts, vec![12, 0]);
        let empty = PointSequence::new(2, vec![]).unwrap();
        assert_eq!(admissible_counts(&empty, &[pt(1.0, 0.0)], 1.0).unwrap(), vec![0]);
    }

    #[test]
    fn trace_examples() {
        let flat = DiscMap::flat(2).unwrap();
        let s = PointSequence::new(2, vec![pt(0.0, 0.0), pt(0.5, 0.0)]).unwrap();
        let r = disc_trace_residuals(&flat, &[c(0.0), c(0.5)], &s).unwrap();
        assert_eq!(r.residuals, vec![0.0, 0.0]);
        assert!(r.passed);
        let s1 = PointSequence::new(2, vec![pt(0.4, 0.0)]).unwrap();
        let r = disc_trace_residuals(&flat, &[c(0.5)], &s1).unwrap();
        assert!((r.residuals[0] - 0.1).abs() < 1e-15 && !r.passed);
        assert!(disc_trace_residuals(&flat, &[c(0.5)], &s).is_err());
    }

    #[test]
    fn normalization_examples() {
        let s = PointSequence::new(2, vec![pt(0.5, 0.0), pt(0.0, 0.0)]).unwrap();
        let (s2, sig2) = normalize_to_origin(&s, &[c(0.5), c(0.0)]).unwrap();
        assert_eq!(s2.points()[0].norm(), 0.0);
        assert!((s2.points()[1].norm() - 0.5).abs() < 1e-15);
        assert_eq!(sig2[0].norm(), 0.0);
        assert!((sig2[1].norm() - 0.5).abs() < 1e-15);
        assert!(normalize_to_origin(&PointSequence::new(2, vec![]).unwrap(), &[]).is_err());
    }

    #[test]
    fn necessary_condition_examples() {
        let nodes = vec![c(0.0), c(0.3), C64::new(0.0, 0.6)];
        let pts = PointSequence::new(
            2,
            nodes.iter().map(|&z| CPoint::new(vec![z, c(0.0)]).unwrap()).collect(),
        )
        .unwrap();
        let d = DiscThroughS::new(nodes, AnyDisc::Polynomial(DiscMap::flat(2).unwrap()), pts).unwrap();
        let r = necessary_condition_check(&d, &[c(1.0); 3], 2.0).unwrap();
        assert!(r.passed && r.norm_gap.abs() < 1e-15);
        assert!(r.modulus_gaps.iter().all(|g| g.abs() < 1e-15));

        let phi = DiscMap::validate(vec![vec![c(0.0), c(0.0), c(0.5)], vec![c(0.0), c(0.5), c(0.0)]], 2, 2)
            .unwrap();
        let a1 = phi.eval(c(0.8));
        assert!((a1.norm() - (0.32f64.powi(2) + 0.16).sqrt()).abs() < 1e-15);
        let pts = PointSequence::new(2, vec![CPoint::origin(2), a1]).unwrap();
        let d = DiscThroughS::new(vec![c(0.0), c(0.8)], AnyDisc::Polynomial(phi), pts).unwrap();
        let r = necessary_condition_check(&d, &[c(1.0), c(1.0)], 2.0).unwrap();
        assert!(r.passed && r.norm_gap > 0.0);

        let off = PointSequence::new(2, vec![pt(0.5, 0.0)]).unwrap();
        let d = DiscThroughS::new(vec![c(0.5)], AnyDisc::Polynomial(DiscMap::flat(2).unwrap()), off)
            .unwrap();
        assert!(matches!(
            necessary_condition_check(&d, &[c(1.0)], 2.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn constructed_disc_passes_through_points() {
        let pts = PointSequence::new(
            2,
            vec![CPoint::origin(2), pt(0.3, 0.1), pt(-0.2, 0.4), CPoint::new(vec![C64::new(0.1, 0.2), c(-0.3)]).unwrap()],
        )
        .unwrap();
        let d = DiscThroughS::construct(pts).unwrap();
        assert!(d.residuals().max_residual <= TRACE_TOLERANCE);
        let r = necessary_condition_check(&d, &[c(1.0); 4], 2.0).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn automorphism_transform_preserves_norm() {
        let s = SphereSampler::product_rule(32, 64).unwrap();
        let a = pt(0.3, 0.0);
        let (f, tf) = automorphism_transform_norms(|w: &[C64]| w[0] * w[1], &a, 2.0, &s).unwrap();
        assert!((f.value - tf.value).abs() < 1e-3);
    }
}
