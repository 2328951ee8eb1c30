//! Thin wrappers over nalgebra for the Hermitian eigenproblems used by the
//! Pick module.

use nalgebra::{Cholesky, DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::geometry::C64;

pub type CMatrix = DMatrix<C64>;

/// Largest entrywise deviation from Hermitian symmetry.
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let sym = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let mut values: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

/// Largest `μ` with `A c = μ G c`, for Hermitian `A` and positive definite `G`.
pub fn max_generalized_eigenvalue(a: &CMatrix, g: &CMatrix) -> Result<f64> {
    let chol = Cholesky::new(g.clone()).ok_or_else(|| {
        Error::Degenerate("Gram matrix is not positive definite".into())
    })?;
    let l = chol.l();
    // M = L^{-1} A L^{-*}
    let x = l
        .solve_lower_triangular(a)
        .ok_or_else(|| Error::Degenerate("singular Cholesky factor".into()))?;
    let m = l
        .solve_lower_triangular(&x.adjoint())
        .ok_or_else(|| Error::Degenerate("singular Cholesky factor".into()))?
        .adjoint();
    hermitian_eigenvalues(&m)
        .last()
        .copied()
        .ok_or_else(|| Error::Degenerate("empty matrix".into()))
}
