//! Wootters concurrence and entanglement of formation of two-qubit states.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::measurement::two_party;
use crate::linalg::{self, CMatrix};
use crate::qstate::{binary_entropy, DensityMatrix, SUPPORT_EIG_TOL};
use crate::{Error, Result};

/// `σ_y ⊗ σ_y` in the computational basis (real).
fn spin_flip() -> CMatrix {
    let mut y = CMatrix::zeros(4, 4);
    y[(0, 3)] = Complex64::new(-1.0, 0.0);
    y[(1, 2)] = Complex64::new(1.0, 0.0);
    y[(2, 1)] = Complex64::new(1.0, 0.0);
    y[(3, 0)] = Complex64::new(-1.0, 0.0);
    y
}

/// Spin-flipped state `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flipped(rho: &DensityMatrix) -> Result<CMatrix> {
    two_party(rho)?;
    let y = spin_flip();
    Ok(&y * rho.matrix().conjugate() * &y)
}

/// Wootters λ's: square roots of the eigenvalues of `√ρ ρ̃ √ρ`, descending.
///
/// Evaluated as the singular values of `Wᵀ (σ_y⊗σ_y) W` with `W = V √Λ` restricted to
/// the support of `ρ`, which has the same nonzero spectrum but avoids taking square
/// roots of eigenvalues that are rounding noise.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    two_party(rho)?;
    let (vals, vecs) = linalg::eigh(rho.matrix());
    let support: Vec<usize> = (0..4).filter(|&k| vals[k] > SUPPORT_EIG_TOL).collect();
    let w = CMatrix::from_fn(4, support.len(), |r, c| {
        vecs[(r, support[c])] * vals[support[c]].sqrt()
    });
    let t: DMatrix<Complex64> = w.transpose() * spin_flip() * &w;
    let mut sv: Vec<f64> = t.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let mut out = [0.0; 4];
    for (o, s) in out.iter_mut().zip(sv) {
        *o = s;
    }
    Ok(out)
}

/// Same λ's straight from the Hermitian sandwich `√ρ ρ̃ √ρ`.
///
/// Independent cross-check of [`wootters_lambdas`]; loses about `√ε` on rank-deficient
/// inputs.
pub fn wootters_lambdas_sandwich(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let tilde = spin_flipped(rho)?;
    let (vals, vecs) = linalg::eigh(rho.matrix());
    let sqrt_diag = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        4,
        vals.iter().map(|&v| Complex64::new(v.max(0.0).sqrt(), 0.0)),
    ));
    let sqrt_rho = &vecs * sqrt_diag * vecs.adjoint();
    let sandwich = &sqrt_rho * tilde * &sqrt_rho;
    let mu = linalg::eigvalsh(&sandwich);
    let mut out = [0.0; 4];
    for (o, m) in out.iter_mut().zip(mu) {
        *o = m.max(0.0).sqrt();
    }
    Ok(out)
}

/// Wootters concurrence `C = max(0, λ₁ - λ₂ - λ₃ - λ₄)`.
pub fn concurrence(rho_ab: &DensityMatrix) -> Result<f64> {
    let l = wootters_lambdas(rho_ab)?;
    Ok((l[0] - l[1] - l[2] - l[3]).clamp(0.0, 1.0))
}

/// `C_i² = 4 det ρ_i`, the squared concurrence between qubit `i` and the rest of a pure state.
pub fn one_to_rest_tangle(rho_i: &DensityMatrix) -> Result<f64> {
    if rho_i.n_parties() != 1 {
        return Err(Error::arg(format!(
            "expected a single-qubit state, got parties {:?}",
            rho_i.parties()
        )));
    }
    let m = rho_i.matrix();
    let det = m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr();
    Ok((4.0 * det).clamp(0.0, 1.0))
}

/// `C_i = 2 √(det ρ_i)`.
pub fn one_to_rest_concurrence(rho_i: &DensityMatrix) -> Result<f64> {
    Ok(one_to_rest_tangle(rho_i)?.sqrt())
}

/// `E(C) = h[(1 + √(1 - C²)) / 2]`.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::arg(format!("concurrence {c} outside [0, 1]")));
    }
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt()))
}

pub fn entanglement_of_formation(rho_ab: &DensityMatrix) -> Result<f64> {
    eof_from_concurrence(concurrence(rho_ab)?)
}
