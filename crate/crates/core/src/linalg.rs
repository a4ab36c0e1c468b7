//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Largest entrywise deviation `|m_ij - conj(m_ji)|`.
pub(crate) fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// `(m + m†) / 2`, removing rounding asymmetry.
pub(crate) fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
///
/// Column `k` of the returned matrix is the eigenvector of `values[k]`.
pub(crate) fn eigh(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(hermitize(m));
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

pub(crate) fn eigvalsh(m: &CMatrix) -> Vec<f64> {
    let mut values: Vec<f64> = hermitize(m)
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Eigenvalues `(larger, smaller)` of the Hermitian 2×2 matrix `[[a, b], [b*, d]]`.
#[inline]
pub(crate) fn eig2(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    (mean + half_gap, mean - half_gap)
}

/// Shannon entropy in bits of a list of weights, `0 log 0 = 0`.
pub(crate) fn shannon_bits(weights: impl IntoIterator<Item = f64>) -> f64 {
    weights
        .into_iter()
        .filter(|&w| w > 0.0)
        .map(|w| -w * w.log2())
        .sum()
}

/// Entropy in bits of an unnormalized 2×2 Hermitian PSD block, together with its trace.
///
/// Blocks with trace below `1e-12` report zero entropy.
#[inline]
pub(crate) fn block_entropy2(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let trace = a + d;
    if trace < 1e-12 {
        return (trace.max(0.0), 0.0);
    }
    let (hi, lo) = eig2(a, d, b);
    let p = (hi / trace).clamp(0.0, 1.0);
    let q = (lo / trace).clamp(0.0, 1.0);
    (trace, shannon_bits([p, q]))
}

pub(crate) fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub(crate) fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_sorted_and_reconstructs() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[
                Complex64::new(2.0, 0.0),
                Complex64::new(0.5, 0.5),
                ZERO,
                Complex64::new(0.5, -0.5),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.3),
                ZERO,
                Complex64::new(0.0, -0.3),
                Complex64::new(-1.0, 0.0),
            ],
        );
        let (vals, vecs) = eigh(&m);
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let diag = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            3,
            vals.iter().map(|&v| Complex64::new(v, 0.0)),
        ));
        let back = &vecs * diag * vecs.adjoint();
        assert!((back - m).norm() < 1e-12);
    }

    #[test]
    fn eig2_matches_general_solver() {
        let b = Complex64::new(0.2, -0.1);
        let (hi, lo) = eig2(0.7, 0.3, b);
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.7, 0.0),
                b,
                b.conj(),
                Complex64::new(0.3, 0.0),
            ],
        );
        let v = eigvalsh(&m);
        assert!((v[0] - hi).abs() < 1e-14 && (v[1] - lo).abs() < 1e-14);
    }

    #[test]
    fn shannon_ignores_zero_weights() {
        assert_eq!(shannon_bits([1.0, 0.0]), 0.0);
        assert!((shannon_bits([0.5, 0.5]) - 1.0).abs() < 1e-15);
    }
}
