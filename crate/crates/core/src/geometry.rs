//! Points of the unit ball, the Gleason (pseudo-hyperbolic) distance,
//! involutive automorphisms, boundary regions and polynomial discs.
//!
//! The Hermitian pairing is `⟨z, w⟩ = Σ z_j conj(w_j)` throughout.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Boundary samples used to validate that a polynomial disc stays in the ball.
pub const VALIDATION_SAMPLES: usize = 4096;
/// Slack allowed on the boundary sup of a validated disc.
pub const RANGE_TOLERANCE: f64 = 1e-9;
/// Constant coefficients below this modulus count as `φ(0) = 0`.
pub const ORIGIN_TOLERANCE: f64 = 1e-12;
pub const MAX_DEGREE: usize = 64;

/// A point of `C^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<C64>", into = "Vec<C64>")]
pub struct CPoint(Vec<C64>);

impl TryFrom<Vec<C64>> for CPoint {
    type Error = Error;

    fn try_from(coords: Vec<C64>) -> Result<Self> {
        CPoint::new(coords)
    }
}

impl From<CPoint> for Vec<C64> {
    fn from(p: CPoint) -> Self {
        p.0
    }
}

impl CPoint {
    pub fn new(coords: Vec<C64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Shape("a point needs at least one coordinate".into()));
        }
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Shape("non-finite coordinate".into()));
        }
        Ok(CPoint(coords))
    }

    pub fn origin(dim: usize) -> Self {
        CPoint(vec![C64::new(0.0, 0.0); dim.max(1)])
    }

    /// `(1, 0, ..., 0)`.
    pub fn unit(dim: usize) -> Self {
        let mut p = Self::origin(dim);
        p.0[0] = C64::new(1.0, 0.0);
        p
    }

    /// Point with real coordinates.
    pub fn real(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[C64] {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `⟨self, other⟩ = Σ self_j conj(other_j)`.
    pub fn inner(&self, other: &CPoint) -> C64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(z, w)| z * w.conj())
            .sum()
    }

    pub fn scale(&self, t: C64) -> CPoint {
        CPoint(self.0.iter().map(|c| c * t).collect())
    }

    pub fn sub(&self, other: &CPoint) -> CPoint {
        CPoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn distance(&self, other: &CPoint) -> f64 {
        self.sub(other).norm()
    }

    pub(crate) fn check_dim(&self, other: &CPoint) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_in_ball(&self) -> Result<()> {
        if self.norm_sqr() >= 1.0 {
            return Err(Error::Domain(format!(
                "|z| = {} is not inside the unit ball",
                self.norm()
            )));
        }
        Ok(())
    }
}

fn check_in_disc(a: C64) -> Result<()> {
    if a.norm_sqr() >= 1.0 {
        return Err(Error::Domain(format!("|{a}| >= 1")));
    }
    Ok(())
}

/// Involutive disc automorphism `m_a(z) = (a − z)/(1 − conj(a) z)`.
pub fn disc_automorphism(a: C64, z: C64) -> C64 {
    (a - z) / (C64::new(1.0, 0.0) - a.conj() * z)
}

/// Gleason distance in the disc, `|(a − b)/(1 − conj(a) b)|`.
pub fn gleason_distance_disc(a: C64, b: C64) -> Result<f64> {
    check_in_disc(a)?;
    check_in_disc(b)?;
    Ok(disc_automorphism(a, b).norm())
}

/// Gleason distance in the ball.
///
/// Uses `d² = (|a − b|² − (|a|²|b|² − |⟨a,b⟩|²)) / |1 − ⟨a,b⟩|²`, which is
/// algebraically `1 − (1−|a|²)(1−|b|²)/|1−⟨a,b⟩|²` but does not lose
/// digits when `a` and `b` are close.
pub fn gleason_distance_ball(a: &CPoint, b: &CPoint) -> Result<f64> {
    a.check_dim(b)?;
    a.check_in_ball()?;
    b.check_in_ball()?;
    Ok(gleason_unchecked(a.coords(), b.coords()))
}

pub(crate) fn gleason_unchecked(a: &[C64], b: &[C64]) -> f64 {
    let mut diff = 0.0;
    let mut pairing = C64::new(0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        diff += (x - y).norm_sqr();
        pairing += x * y.conj();
    }
    // |a|²|b|² − |⟨a,b⟩|² as a sum of 2x2 minors
    let mut wedge = 0.0;
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            wedge += (a[i] * b[j] - a[j] * b[i]).norm_sqr();
        }
    }
    let denom = (C64::new(1.0, 0.0) - pairing).norm_sqr();
    ((diff - wedge).max(0.0) / denom).sqrt().min(1.0)
}

/// The involutive automorphism `ψ_a` of the ball exchanging `a` and `0`:
///
/// `ψ_a(z) = (a − P_a z − s_a Q_a z) / (1 − ⟨z, a⟩)`, with `P_a` the
/// orthogonal projection onto `C a`, `Q_a = I − P_a` and `s_a = √(1−|a|²)`.
///
/// For `a = 0` this is `z ↦ −z`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallAutomorphism {
    base: CPoint,
    s: f64,
}

impl BallAutomorphism {
    pub fn new(base: CPoint) -> Result<Self> {
        base.check_in_ball()?;
        let s = (1.0 - base.norm_sqr()).sqrt();
        Ok(Self { base, s })
    }

    pub fn base(&self) -> &CPoint {
        &self.base
    }

    pub fn apply(&self, z: &CPoint) -> Result<CPoint> {
        self.base.check_dim(z)?;
        z.check_in_ball()?;
        Ok(self.apply_unchecked(z))
    }

    /// Also valid on the closed ball, which the sphere integrals need.
    pub(crate) fn apply_unchecked(&self, z: &CPoint) -> CPoint {
        let a = &self.base;
        let a2 = a.norm_sqr();
        let za = z.inner(a);
        let denom = C64::new(1.0, 0.0) - za;
        let coords = if a2 == 0.0 {
            z.coords().iter().map(|c| -c).collect()
        } else {
            let proj = za / a2;
            a.coords()
                .iter()
                .zip(z.coords())
                .map(|(&ai, &zi)| {
                    let p = ai * proj;
                    (ai - p - self.s * (zi - p)) / denom
                })
                .collect()
        };
        CPoint(coords)
    }
}

/// Boundary regions of the ball.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// `Q(ζ, δ) = {z : |1 − ⟨z, ζ⟩| < δ}`.
    PseudoBall { center: CPoint, delta: f64 },
    /// `Γ(ζ, α) = {z : |1 − ⟨z, ζ⟩| < α (1 − |z|²)}`.
    Admissible { center: CPoint, aperture: f64 },
}

fn check_unit(center: &CPoint) -> Result<()> {
    if (center.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "region center must be on the sphere, |ζ| = {}",
            center.norm()
        )));
    }
    Ok(())
}

impl Region {
    pub fn pseudo_ball(center: CPoint, delta: f64) -> Result<Self> {
        check_unit(&center)?;
        if !(delta > 0.0) {
            return Err(Error::Parameter(format!("δ must be positive, got {delta}")));
        }
        Ok(Region::PseudoBall { center, delta })
    }

    pub fn admissible(center: CPoint, aperture: f64) -> Result<Self> {
        check_unit(&center)?;
        if !(aperture > 0.0) {
            return Err(Error::Parameter(format!(
                "aperture must be positive, got {aperture}"
            )));
        }
        Ok(Region::Admissible { center, aperture })
    }

    pub fn center(&self) -> &CPoint {
        match self {
            Region::PseudoBall { center, .. } | Region::Admissible { center, .. } => center,
        }
    }

    pub fn contains(&self, z: &CPoint) -> Result<bool> {
        self.center().check_dim(z)?;
        z.check_in_ball()?;
        Ok(self.contains_unchecked(z))
    }

    pub(crate) fn contains_unchecked(&self, z: &CPoint) -> bool {
        let gap = (C64::new(1.0, 0.0) - z.inner(self.center())).norm();
        match self {
            Region::PseudoBall { delta, .. } => gap < *delta,
            Region::Admissible { aperture, .. } => gap < aperture * (1.0 - z.norm_sqr()),
        }
    }
}

/// A holomorphic map from the disc into `C^n`.
pub trait HolomorphicDisc {
    fn dimension(&self) -> usize;
    fn eval(&self, z: C64) -> CPoint;
}

/// Polynomial disc `φ = (φ_1, ..., φ_n)` validated to map the disc into the
/// closed ball. `coefficients[j][m]` multiplies `z^m` in `φ_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscMap {
    dimension: usize,
    degree: usize,
    coefficients: Vec<Vec<C64>>,
    #[serde(skip)]
    boundary_sup: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscMapJson {
    pub dimension: usize,
    pub degree: usize,
    pub coefficients: Vec<Vec<C64>>,
}

impl<'de> Deserialize<'de> for DiscMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiscMapJson::deserialize(d)?;
        DiscMap::validate(raw.coefficients, raw.dimension, raw.degree)
            .map_err(serde::de::Error::custom)
    }
}

fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs
        .iter()
        .rev()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl DiscMap {
    /// Checks the coefficient shape and the range condition
    /// `sup |φ(e^{iθ})| ≤ 1 + 1e−9` over 4096 boundary samples.
    pub fn validate(coefficients: Vec<Vec<C64>>, dimension: usize, degree: usize) -> Result<Self> {
        if dimension == 0 || coefficients.is_empty() {
            return Err(Error::Shape("empty coefficient array".into()));
        }
        if coefficients.len() != dimension {
            return Err(Error::Shape(format!(
                "expected {dimension} coordinate functions, got {}",
                coefficients.len()
            )));
        }
        if degree > MAX_DEGREE {
            return Err(Error::Shape(format!(
                "degree {degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        if let Some(row) = coefficients.iter().find(|row| row.len() != degree + 1) {
            return Err(Error::Shape(format!(
                "each coordinate needs {} coefficients, got {}",
                degree + 1,
                row.len()
            )));
        }
        if coefficients
            .iter()
            .flatten()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::Shape("non-finite coefficient".into()));
        }
        let mut map = DiscMap {
            dimension,
            degree,
            coefficients,
            boundary_sup: 0.0,
        };
        map.boundary_sup = (0..VALIDATION_SAMPLES)
            .map(|i| {
                let theta = std::f64::consts::TAU * i as f64 / VALIDATION_SAMPLES as f64;
                map.eval(C64::from_polar(1.0, theta)).norm()
            })
            .fold(0.0, f64::max);
        if map.boundary_sup > 1.0 + RANGE_TOLERANCE {
            return Err(Error::RangeViolation {
                sup: map.boundary_sup,
                tolerance: RANGE_TOLERANCE,
            });
        }
        Ok(map)
    }

    pub fn from_json(raw: DiscMapJson) -> Result<Self> {
        Self::validate(raw.coefficients, raw.dimension, raw.degree)
    }

    pub fn to_json(&self) -> DiscMapJson {
        DiscMapJson {
            dimension: self.dimension,
            degree: self.degree,
            coefficients: self.coefficients.clone(),
        }
    }

    /// The flat disc `z ↦ (z, 0, ..., 0)`.
    pub fn flat(dimension: usize) -> Result<Self> {
        let mut coefficients = vec![vec![C64::new(0.0, 0.0); 2]; dimension];
        coefficients[0][1] = C64::new(1.0, 0.0);
        Self::validate(coefficients, dimension, 1)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[Vec<C64>] {
        &self.coefficients
    }

    /// Measured `sup |φ(e^{iθ})|` on the validation grid.
    pub fn boundary_sup(&self) -> f64 {
        self.boundary_sup
    }

    pub fn eval_coordinate(&self, j: usize, z: C64) -> C64 {
        horner(&self.coefficients[j], z)
    }

    pub fn fixes_origin(&self) -> bool {
        self.coefficients
            .iter()
            .all(|row| row[0].norm() <= ORIGIN_TOLERANCE)
    }

    pub fn require_origin_fixed(&self) -> Result<()> {
        if !self.fixes_origin() {
            return Err(Error::Precondition("the disc must satisfy φ(0) = 0".into()));
        }
        Ok(())
    }

    /// The scalar disc formed by one coordinate.
    pub fn coordinate(&self, j: usize) -> Result<DiscMap> {
        if j >= self.dimension {
            return Err(Error::Parameter(format!("no coordinate {j}")));
        }
        DiscMap::validate(vec![self.coefficients[j].clone()], 1, self.degree)
    }
}

impl HolomorphicDisc for DiscMap {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, z: C64) -> CPoint {
        CPoint(self.coefficients.iter().map(|row| horner(row, z)).collect())
    }
}
