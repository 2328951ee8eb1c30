//! Pick–Nevanlinna feasibility for discs with values in the ball or the
//! polydisc, the model-space representation norm, and a Schur-recursion
//! solver for scalar targets.
//!
//! For nodes `α_k ∈ D` and targets `v_k`, a holomorphic `f : D → B_n` with
//! `f(α_k) = v_k` exists iff the Pick matrix
//!
//! ```text
//! P[k][l] = (1 − ⟨v_l, v_k⟩) / (1 − conj(α_k) α_l)
//! ```
//!
//! is positive semidefinite. Equivalently the diagonal operator
//! `k_α ↦ conj(f(α)) k_α` on `span{k_α}` is a contraction; both views are
//! computed here so they can be checked against each other.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{C64, CPoint, HolomorphicDisc, VALIDATION_SAMPLES};
use crate::linalg::{self, CMatrix};

pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_PSD_TOLERANCE: f64 = 1e-9;
/// Eigenvalues below `RANK_THRESHOLD · trace` count as zero.
pub const RANK_THRESHOLD: f64 = 1e-9;
pub const NODE_SEPARATION: f64 = 1e-12;
pub const TARGET_SLACK: f64 = 1e-12;
pub const INTERPOLATION_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetDomain {
    Ball,
    Polydisc,
}

/// Finite interpolation data `α_k ↦ v_k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PickProblem {
    dimension: usize,
    target_domain: TargetDomain,
    nodes: Vec<C64>,
    targets: Vec<CPoint>,
}

#[derive(Deserialize)]
struct RawProblem {
    dimension: usize,
    target_domain: TargetDomain,
    nodes: Vec<C64>,
    targets: Vec<CPoint>,
}

impl<'de> Deserialize<'de> for PickProblem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawProblem::deserialize(d)?;
        PickProblem::new(raw.dimension, raw.target_domain, raw.nodes, raw.targets)
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_nodes(nodes: &[C64]) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::Shape("at least one node is required".into()));
    }
    for a in nodes {
        if !a.re.is_finite() || !a.im.is_finite() || a.norm_sqr() >= 1.0 {
            return Err(Error::Domain(format!("node {a} is not in the open disc")));
        }
    }
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            if (a - b).norm() <= NODE_SEPARATION {
                return Err(Error::Degenerate(format!("coincident nodes {a} and {b}")));
            }
        }
    }
    Ok(())
}

impl PickProblem {
    pub fn new(
        dimension: usize,
        target_domain: TargetDomain,
        nodes: Vec<C64>,
        targets: Vec<CPoint>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        if nodes.len() != targets.len() {
            return Err(Error::Shape(format!(
                "{} nodes but {} targets",
                nodes.len(),
                targets.len()
            )));
        }
        check_nodes(&nodes)?;
        for v in &targets {
            if v.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: v.dim(),
                });
            }
            let size = match target_domain {
                TargetDomain::Ball => v.norm(),
                TargetDomain::Polydisc => v.coords().iter().map(|c| c.norm()).fold(0.0, f64::max),
            };
            if size > 1.0 + TARGET_SLACK {
                return Err(Error::Domain(format!(
                    "target {:?} lies outside the closed {:?}",
                    v.coords(),
                    target_domain
                )));
            }
        }
        Ok(Self {
            dimension,
            target_domain,
            nodes,
            targets,
        })
    }

    /// Scalar problem with targets in the closed disc.
    pub fn scalar(nodes: Vec<C64>, values: Vec<C64>) -> Result<Self> {
        let targets = values
            .into_iter()
            .map(|v| CPoint::new(vec![v]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(1, TargetDomain::Ball, nodes, targets)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn target_domain(&self) -> TargetDomain {
        self.target_domain
    }

    pub fn nodes(&self) -> &[C64] {
        &self.nodes
    }

    pub fn targets(&self) -> &[CPoint] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Same problem with every target multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        Self::new(
            self.dimension,
            self.target_domain,
            self.nodes.clone(),
            self.targets.iter().map(|v| v.scale(C64::new(t, 0.0))).collect(),
        )
    }
}

/// Square matrix equal to its conjugate transpose within 1e−12.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(entries: CMatrix) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, not square",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let defect = linalg::hermitian_defect(&entries);
        if !(defect <= HERMITIAN_TOLERANCE) {
            return Err(Error::NotHermitian(defect));
        }
        Ok(Self(entries))
    }

    pub fn order(&self) -> usize {
        self.0.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.0)
    }

    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.0[(i, i)].re).sum()
    }

    /// Rows as `[re, im]` pairs, for reports.
    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.order())
            .map(|i| (0..self.order()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }
}

fn cauchy_denominator(a: C64, b: C64) -> C64 {
    C64::new(1.0, 0.0) - a.conj() * b
}

/// Szegő Gram matrix `G[k][l] = 1/(1 − conj(α_k) α_l)`.
pub fn kernel_gram(nodes: &[C64]) -> Result<HermitianMatrix> {
    check_nodes(nodes)?;
    let n = nodes.len();
    let g = CMatrix::from_fn(n, n, |k, l| C64::new(1.0, 0.0) / cauchy_denominator(nodes[k], nodes[l]));
    HermitianMatrix::new(g)
}

fn require_domain(problem: &PickProblem, domain: TargetDomain) -> Result<()> {
    if problem.target_domain != domain {
        return Err(Error::Parameter(format!(
            "expected a {domain:?}-valued problem, got {:?}",
            problem.target_domain
        )));
    }
    Ok(())
}

/// `P[k][l] = (1 − ⟨v_l, v_k⟩)/(1 − conj(α_k) α_l)`.
pub fn build_pick_matrix(problem: &PickProblem) -> Result<HermitianMatrix> {
    require_domain(problem, TargetDomain::Ball)?;
    let (a, v) = (&problem.nodes, &problem.targets);
    let n = a.len();
    let m = CMatrix::from_fn(n, n, |k, l| {
        (C64::new(1.0, 0.0) - v[l].inner(&v[k])) / cauchy_denominator(a[k], a[l])
    });
    HermitianMatrix::new(m)
}

/// One scalar Pick matrix per coordinate of a polydisc-valued problem.
pub fn build_polydisc_pick_matrices(problem: &PickProblem) -> Result<Vec<HermitianMatrix>> {
    require_domain(problem, TargetDomain::Polydisc)?;
    let (a, v) = (&problem.nodes, &problem.targets);
    let n = a.len();
    (0..problem.dimension)
        .map(|m| {
            HermitianMatrix::new(CMatrix::from_fn(n, n, |k, l| {
                let (vk, vl) = (v[k].coords()[m], v[l].coords()[m]);
                (C64::new(1.0, 0.0) - vk.conj() * vl) / cauchy_denominator(a[k], a[l])
            }))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub min_eigenvalue: f64,
    /// Tolerance as requested.
    pub tolerance: f64,
    /// Tolerance after scaling by the matrix size, the one actually applied.
    pub effective_tolerance: f64,
    pub eigenvalues: Vec<f64>,
}

/// PSD test by Hermitian eigendecomposition.
///
/// The matrix is accepted when `λ_min ≥ −tol · s`, where
/// `s = max(trace/N, max |entry|)` makes the test scale invariant.
pub fn psd_check(m: &HermitianMatrix, tol: f64) -> Result<FeasibilityVerdict> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    if m.order() == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    let eigenvalues = m.eigenvalues();
    let max_entry = m.entries().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let scale = (m.trace().abs() / m.order() as f64).max(max_entry);
    let effective_tolerance = tol * scale;
    let min_eigenvalue = eigenvalues[0];
    Ok(FeasibilityVerdict {
        feasible: min_eigenvalue >= -effective_tolerance,
        min_eigenvalue,
        tolerance: tol,
        effective_tolerance,
        eigenvalues,
    })
}

/// Feasibility of a problem of either target domain; polydisc problems
/// need every coordinate matrix to be PSD.
pub fn check_feasibility(problem: &PickProblem, tol: f64) -> Result<Vec<FeasibilityVerdict>> {
    match problem.target_domain {
        TargetDomain::Ball => Ok(vec![psd_check(&build_pick_matrix(problem)?, tol)?]),
        TargetDomain::Polydisc => build_polydisc_pick_matrices(problem)?
            .iter()
            .map(|m| psd_check(m, tol))
            .collect(),
    }
}

/// `Σ_m D_m^* G D_m` with `D_m = diag(v_k^m)` in the coordinates where
/// `‖Σ c_k k_{α_k}‖² = c^* G c`.
pub fn representation_gram(nodes: &[C64], values: &[CPoint]) -> Result<CMatrix> {
    if nodes.len() != values.len() {
        return Err(Error::Shape(format!(
            "{} nodes but {} values",
            nodes.len(),
            values.len()
        )));
    }
    if let Some(v) = values.iter().find(|v| v.dim() != values[0].dim()) {
        return Err(Error::DimensionMismatch {
            expected: values[0].dim(),
            found: v.dim(),
        });
    }
    let g = kernel_gram(nodes)?.into_inner();
    let n = nodes.len();
    Ok(CMatrix::from_fn(n, n, |k, l| g[(k, l)] * values[l].inner(&values[k])))
}

/// Operator norm of `k_α ↦ conj(f(α)) k_α` from `span{k_α : α ∈ σ}` into
/// its `n`-fold direct sum, as the square root of the top generalized
/// eigenvalue of `(Σ_m D_m^* G D_m, G)`.
pub fn representation_norm(nodes: &[C64], values: &[CPoint]) -> Result<f64> {
    for v in values {
        if v.norm() > 1.0 + TARGET_SLACK {
            return Err(Error::Domain(format!("value {:?} is outside the ball", v.coords())));
        }
    }
    let a = representation_gram(nodes, values)?;
    let g = kernel_gram(nodes)?.into_inner();
    let mu = linalg::max_generalized_eigenvalue(&a, &g)?;
    Ok(mu.max(0.0).sqrt())
}

/// One step of the Schur recursion: the node peeled off and the value of the
/// current Schur function there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchurStage {
    pub node: C64,
    pub parameter: C64,
}

/// Rational Schur function stored as its recursion chain.
///
/// Evaluation unwinds `f_{j−1} = (γ_j + b_j f_j)/(1 + conj(γ_j) b_j f_j)`
/// from the terminal constant, with `b_j` the Blaschke factor at node `j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarInterpolant {
    stages: Vec<SchurStage>,
    terminal: C64,
    degree: usize,
}

impl ScalarInterpolant {
    pub fn stages(&self) -> &[SchurStage] {
        &self.stages
    }

    /// Zero for the generic solution, unimodular when the Pick matrix is singular.
    pub fn terminal(&self) -> C64 {
        self.terminal
    }

    /// Degree of the rational function.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, z: C64) -> C64 {
        let one = C64::new(1.0, 0.0);
        self.stages.iter().rev().fold(self.terminal, |f, s| {
            let bf = (z - s.node) / (one - s.node.conj() * z) * f;
            (s.parameter + bf) / (one + s.parameter.conj() * bf)
        })
    }

    pub fn boundary_sup(&self) -> f64 {
        boundary_sup(|z| self.eval(z).norm())
    }
}

impl HolomorphicDisc for ScalarInterpolant {
    fn dimension(&self) -> usize {
        1
    }

    fn eval(&self, z: C64) -> CPoint {
        CPoint::new(vec![ScalarInterpolant::eval(self, z)]).expect("interpolant values are finite")
    }
}

fn boundary_sup(f: impl Fn(C64) -> f64) -> f64 {
    (0..VALIDATION_SAMPLES)
        .map(|i| f(C64::from_polar(1.0, TAU * i as f64 / VALIDATION_SAMPLES as f64)))
        .fold(0.0, f64::max)
}

/// Tolerance on the spread of the tail values when the recursion stops at a
/// unimodular constant.
const TERMINAL_SPREAD: f64 = 1e-6;

/// Solves a feasible scalar Nevanlinna–Pick problem by the Schur recursion
/// with every free parameter set to zero.
///
/// When the Pick matrix has rank `r < N` the recursion stops after `r` steps
/// at a unimodular constant and the unique solution, a Blaschke product of
/// degree `r`, is returned.
pub fn scalar_np_solve(problem: &PickProblem) -> Result<ScalarInterpolant> {
    if problem.dimension != 1 {
        return Err(Error::Parameter(format!(
            "the scalar solver needs dimension 1, got {}",
            problem.dimension
        )));
    }
    let pick = match problem.target_domain {
        TargetDomain::Ball => build_pick_matrix(problem)?,
        TargetDomain::Polydisc => build_polydisc_pick_matrices(problem)?.remove(0),
    };
    let verdict = psd_check(&pick, DEFAULT_PSD_TOLERANCE)?;
    if !verdict.feasible {
        return Err(Error::Infeasible {
            min_eigenvalue: verdict.min_eigenvalue,
        });
    }
    let trace = pick.trace();
    let rank = if trace > 0.0 {
        verdict
            .eigenvalues
            .iter()
            .filter(|&&l| l > RANK_THRESHOLD * trace)
            .count()
    } else {
        0
    };

    let one = C64::new(1.0, 0.0);
    let nodes = problem.nodes.clone();
    let mut values: Vec<C64> = problem.targets.iter().map(|v| v.coords()[0]).collect();
    let n = nodes.len();
    let mut stages = Vec::with_capacity(rank);
    let mut terminal = C64::new(0.0, 0.0);
    for step in 0..n {
        if step == rank {
            let tail = &values[step..];
            let mean = tail.iter().sum::<C64>() / tail.len() as f64;
            if mean.norm() == 0.0 {
                return Err(Error::Conditioning(
                    "singular Pick matrix but the reduced values are not unimodular".into(),
                ));
            }
            let c = mean / mean.norm();
            let spread = tail.iter().map(|w| (w - c).norm()).fold(0.0, f64::max);
            if spread > TERMINAL_SPREAD {
                return Err(Error::Conditioning(format!(
                    "rank {rank} Pick matrix but reduced values spread by {spread:e}"
                )));
            }
            terminal = c;
            break;
        }
        let gamma = values[step];
        if gamma.norm() >= 1.0 {
            return Err(Error::Conditioning(format!(
                "Schur parameter {gamma} at step {step} is not inside the disc"
            )));
        }
        let z0 = nodes[step];
        stages.push(SchurStage {
            node: z0,
            parameter: gamma,
        });
        for i in step + 1..n {
            let b = (nodes[i] - z0) / (one - z0.conj() * nodes[i]);
            values[i] = (values[i] - gamma) / (one - gamma.conj() * values[i]) / b;
        }
    }

    let degree = if terminal.norm() == 0.0 {
        stages.len().saturating_sub(1)
    } else {
        stages.len()
    };
    let f = ScalarInterpolant {
        stages,
        terminal,
        degree,
    };
    let worst = problem
        .nodes
        .iter()
        .zip(&problem.targets)
        .map(|(&a, v)| (f.eval(a) - v.coords()[0]).norm())
        .fold(0.0, f64::max);
    if worst > INTERPOLATION_TOLERANCE {
        return Err(Error::Conditioning(format!(
            "recursion lost accuracy: residual {worst:e}"
        )));
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterpolationCheck {
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub boundary_sup: f64,
    pub passed: bool,
}

/// Residuals `|f(α_k) − v_k|` and the sampled boundary sup of `|f|`.
pub fn verify_interpolant<F>(f: &F, problem: &PickProblem) -> InterpolationCheck
where
    F: HolomorphicDisc + ?Sized,
{
    let residuals: Vec<f64> = problem
        .nodes
        .iter()
        .zip(&problem.targets)
        .map(|(&a, v)| f.eval(a).distance(v))
        .collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let boundary_sup = boundary_sup(|z| f.eval(z).norm());
    InterpolationCheck {
        passed: max_residual <= INTERPOLATION_TOLERANCE
            && boundary_sup <= 1.0 + INTERPOLATION_TOLERANCE,
        residuals,
        max_residual,
        boundary_sup,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::DiscMap;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn ball(nodes: &[f64], targets: &[[f64; 2]]) -> PickProblem {
        PickProblem::new(
            2,
            TargetDomain::Ball,
            nodes.iter().map(|&x| c(x)).collect(),
            targets.iter().map(|t| CPoint::real(t).unwrap()).collect(),
        )
        .unwrap()
    }

    fn close(m: &HermitianMatrix, expected: &[&[f64]]) {
        for (i, row) in expected.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert!((m.entries()[(i, j)] - c(x)).norm() < 1e-14, "({i},{j})");
            }
        }
    }

    #[test]
    fn pick_matrix_examples() {
        let m = build_pick_matrix(&ball(&[0.0], &[[0.0, 0.0]])).unwrap();
        close(&m, &[&[1.0]]);
        let m = build_pick_matrix(&ball(&[0.0, 0.1], &[[0.0, 0.0], [0.9, 0.0]])).unwrap();
        close(&m, &[&[1.0, 1.0], &[1.0, 0.19 / 0.99]]);
        let m = build_pick_matrix(&ball(&[0.0, 0.5], &[[0.0, 0.0], [0.5, 0.0]])).unwrap();
        close(&m, &[&[1.0, 1.0], &[1.0, 1.0]]);
    }

    #[test]
    fn problem_validation() {
        let coincident = PickProblem::scalar(vec![c(0.2), c(0.2)], vec![c(0.0), c(0.1)]);
        assert!(matches!(coincident, Err(Error::Degenerate(_))));
        let outside = PickProblem::scalar(vec![c(0.2)], vec![c(1.1)]);
        assert!(matches!(outside, Err(Error::Domain(_))));
        let mismatch = PickProblem::scalar(vec![c(0.2), c(0.3)], vec![c(0.1)]);
        assert!(matches!(mismatch, Err(Error::Shape(_))));
        let bad_node = PickProblem::scalar(vec![c(1.0)], vec![c(0.1)]);
        assert!(matches!(bad_node, Err(Error::Domain(_))));
        // polydisc allows (0.9, 0.9), the ball does not
        let v = vec![CPoint::real(&[0.9, 0.9]).unwrap()];
        assert!(PickProblem::new(2, TargetDomain::Polydisc, vec![c(0.1)], v.clone()).is_ok());
        assert!(PickProblem::new(2, TargetDomain::Ball, vec![c(0.1)], v).is_err());
    }

    #[test]
    fn polydisc_examples() {
        let consts = CPoint::real(&[0.3, -0.6]).unwrap();
        let p = PickProblem::new(
            2,
            TargetDomain::Polydisc,
            vec![c(0.0), c(0.4), c(-0.2)],
            vec![consts.clone(), consts.clone(), consts.clone()],
        )
        .unwrap();
        let mats = build_polydisc_pick_matrices(&p).unwrap();
        let g = kernel_gram(p.nodes()).unwrap();
        for (m, cm) in mats.iter().zip([0.3f64, -0.6]) {
            let expected = g.entries() * c(1.0 - cm * cm);
            assert!((m.entries() - expected).norm() < 1e-14);
            assert!(psd_check(m, 1e-9).unwrap().feasible);
        }

        let scalar = PickProblem::new(
            1,
            TargetDomain::Polydisc,
            vec![c(0.0), c(0.3)],
            vec![CPoint::real(&[0.2]).unwrap(), CPoint::real(&[-0.1]).unwrap()],
        )
        .unwrap();
        let as_ball =
            PickProblem::scalar(vec![c(0.0), c(0.3)], vec![c(0.2), c(-0.1)]).unwrap();
        assert_eq!(
            build_polydisc_pick_matrices(&scalar).unwrap()[0],
            build_pick_matrix(&as_ball).unwrap()
        );

        let p = PickProblem::new(
            2,
            TargetDomain::Polydisc,
            vec![c(0.0), c(0.1)],
            vec![CPoint::real(&[0.0, 0.0]).unwrap(), CPoint::real(&[0.9, 0.9]).unwrap()],
        )
        .unwrap();
        let mats = build_polydisc_pick_matrices(&p).unwrap();
        close(&mats[0], &[&[1.0, 1.0], &[1.0, 0.19 / 0.99]]);
        let verdicts = check_feasibility(&p, 1e-9).unwrap();
        assert!(verdicts.iter().all(|v| !v.feasible));
        assert!(build_pick_matrix(&p).is_err());
    }

    #[test]
    fn psd_examples() {
        let id = HermitianMatrix::new(CMatrix::identity(3, 3)).unwrap();
        let v = psd_check(&id, 1e-9).unwrap();
        assert!(v.feasible && (v.min_eigenvalue - 1.0).abs() < 1e-14);

        let m = build_pick_matrix(&ball(&[0.0, 0.1], &[[0.0, 0.0], [0.9, 0.0]])).unwrap();
        let v = psd_check(&m, 1e-9).unwrap();
        let (a, d): (f64, f64) = (1.0, 0.19 / 0.99);
        let closed_form = 0.5 * (a + d) - (0.25 * (a - d) * (a - d) + 1.0).sqrt();
        assert!(!v.feasible);
        assert!((v.min_eigenvalue - closed_form).abs() < 1e-12);
        assert!((v.min_eigenvalue + 0.4826).abs() < 1e-3);

        let ones = HermitianMatrix::new(CMatrix::from_element(2, 2, c(1.0))).unwrap();
        let v = psd_check(&ones, 1e-9).unwrap();
        assert!(v.feasible && v.min_eigenvalue.abs() < 1e-14);

        let skew = CMatrix::from_row_slice(2, 2, &[c(1.0), c(2.0), c(0.0), c(1.0)]);
        assert!(matches!(HermitianMatrix::new(skew), Err(Error::NotHermitian(_))));
        assert!(psd_check(&id, 0.0).is_err());
    }

    #[test]
    fn gram_examples() {
        let g = kernel_gram(&[c(0.0)]).unwrap();
        close(&g, &[&[1.0]]);
        let g = kernel_gram(&[c(0.0), c(0.5)]).unwrap();
        close(&g, &[&[1.0, 1.0], &[1.0, 4.0 / 3.0]]);
        let g = kernel_gram(&[c(0.0), C64::new(0.3, 0.5), c(-0.7), C64::new(0.0, -0.9)]).unwrap();
        assert!(g.eigenvalues()[0] > 0.0);
        assert!(kernel_gram(&[c(0.2), c(0.2)]).is_err());
    }

    #[test]
    fn representation_norm_examples() {
        let one = |x: f64| CPoint::real(&[x, 0.0]).unwrap();
        let r = representation_norm(&[c(0.3)], &[one(0.7)]).unwrap();
        assert!((r - 0.7).abs() < 1e-12);
        let nodes = [c(0.0), C64::new(0.2, 0.4), c(-0.6)];
        let r = representation_norm(&nodes, &[one(0.45), one(0.45), one(0.45)]).unwrap();
        assert!((r - 0.45).abs() < 1e-12);
        let r = representation_norm(&[c(0.0), c(0.1)], &[one(0.0), one(0.9)]).unwrap();
        assert!(r > 1.0);
        assert!(representation_norm(&[c(0.0), c(0.0)], &[one(0.0), one(0.1)]).is_err());
    }

    #[test]
    fn schur_solver_examples() {
        let f = scalar_np_solve(&PickProblem::scalar(vec![c(0.0)], vec![c(0.0)]).unwrap()).unwrap();
        assert_eq!(f.degree(), 0);
        for z in [c(0.3), C64::new(-0.2, 0.7)] {
            assert!(f.eval(z).norm() < 1e-15);
        }

        let p = PickProblem::scalar(vec![c(0.0), c(0.5)], vec![c(0.0), c(0.5)]).unwrap();
        let f = scalar_np_solve(&p).unwrap();
        assert_eq!(f.degree(), 1);
        for k in 0..16 {
            let z = C64::from_polar(0.9 * (k as f64 + 1.0) / 16.0, 0.7 * k as f64);
            assert!((f.eval(z) - z).norm() < 1e-8);
        }

        let f = scalar_np_solve(&PickProblem::scalar(vec![c(0.0)], vec![c(0.5)]).unwrap()).unwrap();
        assert_eq!(f.degree(), 0);
        assert!((f.eval(C64::new(0.4, -0.4)) - c(0.5)).norm() < 1e-15);

        let bad = PickProblem::scalar(vec![c(0.0), c(0.1)], vec![c(0.0), c(0.9)]).unwrap();
        match scalar_np_solve(&bad) {
            Err(Error::Infeasible { min_eigenvalue }) => assert!(min_eigenvalue < -0.4),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn generic_solution_has_degree_n_minus_one() {
        let nodes = vec![c(0.0), C64::new(0.3, 0.3), c(-0.5), C64::new(0.1, -0.6)];
        let values: Vec<C64> = nodes.iter().map(|z| 0.5 * z * z + c(0.1)).collect();
        let p = PickProblem::scalar(nodes, values).unwrap();
        let f = scalar_np_solve(&p).unwrap();
        assert_eq!(f.degree(), 3);
        let check = verify_interpolant(&f, &p);
        assert!(check.passed, "{check:?}");
    }

    #[test]
    fn verify_interpolant_examples() {
        let flat = DiscMap::flat(2).unwrap();
        let p = ball(&[0.0, 0.5], &[[0.0, 0.0], [0.5, 0.0]]);
        let check = verify_interpolant(&flat, &p);
        assert_eq!(check.residuals, vec![0.0, 0.0]);
        assert!(check.passed);

        let zero = DiscMap::validate(vec![vec![c(0.0)], vec![c(0.0)]], 2, 0).unwrap();
        let p = ball(&[0.0], &[[0.5, 0.0]]);
        let check = verify_interpolant(&zero, &p);
        assert!((check.residuals[0] - 0.5).abs() < 1e-15);
        assert!(!check.passed);
    }
}
