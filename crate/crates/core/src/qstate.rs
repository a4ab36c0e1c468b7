//! Labeled multi-qubit states.
//!
//! Basis convention: party 0 is the most significant bit of the
//! computational-basis index, so for parties `(a, b, c)` the amplitude of
//! `|a b c⟩` sits at index `4a + 2b + c`.

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::Serialize;

use crate::linalg::{self, CMatrix, ZERO};
use crate::{Error, Result};

/// Tolerance on the norm of a pure state and on the trace and Hermiticity of a density matrix.
pub const STATE_TOL: f64 = 1e-10;
/// Eigenvalues in `[-CLIP_TOL, 0)` are treated as rounding noise and set to zero.
pub const CLIP_TOL: f64 = 1e-10;
/// A density matrix counts as pure when its largest eigenvalue exceeds `1 - PURITY_TOL`.
pub const PURITY_TOL: f64 = 1e-8;
/// Largest register handled.
pub const MAX_QUBITS: usize = 6;

/// Default party names `a, b, c, ...`.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() || labels.len() > MAX_QUBITS {
        return Err(Error::arg(format!(
            "register must have 1..={MAX_QUBITS} parties, got {}",
            labels.len()
        )));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(Error::arg("party labels must be nonempty"));
        }
        if labels[..i].contains(l) {
            return Err(Error::arg(format!("duplicate party label {l:?}")));
        }
    }
    Ok(())
}

/// Position of each party of `sub` inside `all`.
fn positions(all: &[String], sub: &[&str]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(sub.len());
    for s in sub {
        let p = all
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::arg(format!("unknown party {s:?}; parties are {all:?}")))?;
        if out.contains(&p) {
            return Err(Error::arg(format!("party {s:?} listed twice")));
        }
        out.push(p);
    }
    Ok(out)
}

/// Index of the computational basis state built from bits of `full` at `pos` (first = MSB).
#[inline]
fn gather_bits(full: usize, n: usize, pos: &[usize]) -> usize {
    pos.iter()
        .fold(0, |acc, &p| (acc << 1) | ((full >> (n - 1 - p)) & 1))
}

/// Table `table[k][t]` giving the full index for kept sub-index `k` and traced sub-index `t`.
fn split_table(n: usize, keep: &[usize], traced: &[usize]) -> Vec<Vec<usize>> {
    let mut table = vec![vec![0usize; 1 << traced.len()]; 1 << keep.len()];
    for full in 0..(1usize << n) {
        table[gather_bits(full, n, keep)][gather_bits(full, n, traced)] = full;
    }
    table
}

/// Normalized state vector of a labeled qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    labels: Vec<String>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a state, rejecting wrong lengths and norms off by more than [`STATE_TOL`].
    pub fn new(labels: Vec<String>, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_labels(&labels)?;
        let expected = 1usize << labels.len();
        if amplitudes.len() != expected {
            return Err(Error::state(format!(
                "expected {expected} amplitudes for {} qubits, got {}",
                labels.len(),
                amplitudes.len()
            )));
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::state(format!("state norm is {norm}, expected 1")));
        }
        Ok(Self { labels, amplitudes })
    }

    /// Builds a state from amplitudes of any nonzero norm, rescaling them.
    pub fn normalized(labels: Vec<String>, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if norm <= 1e-300 || !norm.is_finite() {
            return Err(Error::state("cannot normalize a zero or non-finite vector"));
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self::new(labels, amplitudes)
    }

    /// State with default labels `a, b, c, ...`.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = amplitudes.len().trailing_zeros() as usize;
        if amplitudes.len() != 1 << n || n == 0 {
            return Err(Error::state(format!(
                "amplitude count {} is not a power of two >= 2",
                amplitudes.len()
            )));
        }
        Self::new(default_labels(n), amplitudes)
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(labels: Vec<String>, index: usize) -> Result<Self> {
        check_labels(&labels)?;
        let dim = 1usize << labels.len();
        if index >= dim {
            return Err(Error::arg(format!("basis index {index} out of range")));
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Self::new(labels, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels)?;
        if labels.len() != self.labels.len() {
            return Err(Error::arg("relabeling must keep the number of parties"));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `|ψ⟩⟨ψ|` with the same party labels.
    pub fn density(&self) -> DensityMatrix {
        density_of(self)
    }

    /// Reduced state on `keep`, computed directly from the amplitudes.
    pub fn reduced(&self, keep: &[&str]) -> Result<DensityMatrix> {
        let n = self.n_qubits();
        let mut keep_pos = positions(&self.labels, keep)?;
        if keep_pos.is_empty() {
            return Err(Error::arg("cannot reduce onto an empty party set"));
        }
        keep_pos.sort_unstable();
        let traced: Vec<usize> = (0..n).filter(|p| !keep_pos.contains(p)).collect();
        let table = split_table(n, &keep_pos, &traced);
        let rows = 1 << keep_pos.len();
        let cols = 1 << traced.len();
        let psi = CMatrix::from_fn(rows, cols, |k, t| self.amplitudes[table[k][t]]);
        let rho = &psi * psi.adjoint();
        let parties = keep_pos.iter().map(|&p| self.labels[p].clone()).collect();
        Ok(DensityMatrix::from_parts(parties, linalg::hermitize(&rho)))
    }

    /// `|self⟩ ⊗ |other⟩`; labels must be disjoint.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        check_labels(&labels)?;
        let amps = self
            .amplitudes
            .iter()
            .flat_map(|&x| other.amplitudes.iter().map(move |&y| x * y))
            .collect();
        PureState::normalized(labels, amps)
    }

    /// Applies a single-qubit unitary to `party`.
    pub fn apply_local(&self, party: &str, u: &Matrix2<Complex64>) -> Result<PureState> {
        let p = positions(&self.labels, &[party])?[0];
        let shift = self.n_qubits() - 1 - p;
        let mut out = self.amplitudes.clone();
        for idx in 0..self.amplitudes.len() {
            if (idx >> shift) & 1 == 0 {
                let j = idx | (1 << shift);
                let (x0, x1) = (self.amplitudes[idx], self.amplitudes[j]);
                out[idx] = u[(0, 0)] * x0 + u[(0, 1)] * x1;
                out[j] = u[(1, 0)] * x0 + u[(1, 1)] * x1;
            }
        }
        PureState::normalized(self.labels.clone(), out)
    }
}

fn norm(amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `|ψ⟩⟨ψ|`.
pub fn density_of(psi: &PureState) -> DensityMatrix {
    let v = nalgebra::DVector::from_column_slice(&psi.amplitudes);
    DensityMatrix::from_parts(psi.labels.clone(), &v * v.adjoint())
}

/// Hermitian, positive semidefinite, unit-trace operator on a labeled party set.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    parties: Vec<String>,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity within [`STATE_TOL`] / [`CLIP_TOL`].
    pub fn new(parties: Vec<String>, matrix: CMatrix) -> Result<Self> {
        check_labels(&parties)?;
        let dim = 1usize << parties.len();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::state(format!(
                "matrix is {}x{}, expected {dim}x{dim} for {} parties",
                matrix.nrows(),
                matrix.ncols(),
                parties.len()
            )));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::state("matrix has non-finite entries"));
        }
        let defect = linalg::hermiticity_defect(&matrix);
        if defect > STATE_TOL {
            return Err(Error::state(format!(
                "matrix is not Hermitian (deviation {defect:.3e})"
            )));
        }
        let tr = linalg::trace(&matrix);
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::state(format!("trace is {:.12} (expected 1)", tr.re)));
        }
        let matrix = linalg::hermitize(&matrix);
        let min = linalg::eigvalsh(&matrix).last().copied().unwrap_or(0.0);
        if min < -CLIP_TOL {
            return Err(Error::state(format!(
                "matrix is not positive semidefinite (eigenvalue {min:.3e})"
            )));
        }
        Ok(Self { parties, matrix })
    }

    /// Internal constructor for matrices that are valid by construction.
    pub(crate) fn from_parts(parties: Vec<String>, matrix: CMatrix) -> Self {
        debug_assert_eq!(matrix.nrows(), 1 << parties.len());
        Self { parties, matrix }
    }

    pub fn maximally_mixed(parties: Vec<String>) -> Result<Self> {
        check_labels(&parties)?;
        let dim = 1usize << parties.len();
        let m = CMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0);
        Ok(Self::from_parts(parties, m))
    }

    /// Convex combination `Σ w_k ρ_k`; all states must share the same party list.
    pub fn mixture(terms: &[(f64, DensityMatrix)]) -> Result<Self> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::arg("mixture needs at least one state"))?;
        let total: f64 = terms.iter().map(|(w, _)| w).sum();
        if terms.iter().any(|(w, _)| *w < 0.0) || (total - 1.0).abs() > STATE_TOL {
            return Err(Error::arg(
                "mixture weights must be nonnegative and sum to 1",
            ));
        }
        let mut m = CMatrix::zeros(first.dim(), first.dim());
        for (w, rho) in terms {
            if rho.parties != first.parties {
                return Err(Error::arg("mixture components have different parties"));
            }
            m += &rho.matrix * Complex64::new(*w, 0.0);
        }
        Self::new(first.parties.clone(), m)
    }

    pub fn parties(&self) -> &[String] {
        &self.parties
    }

    pub fn n_parties(&self) -> usize {
        self.parties.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn party_index(&self, label: &str) -> Result<usize> {
        Ok(positions(&self.parties, &[label])?[0])
    }

    /// Reduced state on `keep`, parties kept in their original order.
    pub fn partial_trace(&self, keep: &[&str]) -> Result<DensityMatrix> {
        partial_trace(self, keep)
    }

    /// `self ⊗ other`; labels must be disjoint.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let mut parties = self.parties.clone();
        parties.extend(other.parties.iter().cloned());
        check_labels(&parties)?;
        Ok(Self::from_parts(
            parties,
            linalg::kron(&self.matrix, &other.matrix),
        ))
    }

    /// Same operator under new party labels.
    pub fn with_parties(mut self, parties: Vec<String>) -> Result<Self> {
        if parties.len() != self.parties.len() {
            return Err(Error::arg(format!(
                "expected {} labels, got {}",
                self.parties.len(),
                parties.len()
            )));
        }
        check_labels(&parties)?;
        self.parties = parties;
        Ok(self)
    }

    /// Same operator with its tensor factors permuted into `order`.
    pub fn reorder(&self, order: &[&str]) -> Result<DensityMatrix> {
        let pos = positions(&self.parties, order)?;
        if pos.len() != self.parties.len() {
            return Err(Error::arg("reorder must list every party exactly once"));
        }
        let n = self.n_parties();
        // new index -> old index
        let map: Vec<usize> = (0..self.dim())
            .map(|new| {
                (0..n).fold(0, |acc, k| {
                    let bit = (new >> (n - 1 - k)) & 1;
                    acc | (bit << (n - 1 - pos[k]))
                })
            })
            .collect();
        let m = CMatrix::from_fn(self.dim(), self.dim(), |r, c| self.matrix[(map[r], map[c])]);
        Ok(Self::from_parts(
            order.iter().map(|s| s.to_string()).collect(),
            m,
        ))
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        eig_hermitian(&self.matrix)
    }

    pub fn largest_eigenvalue(&self) -> f64 {
        linalg::eigvalsh(&self.matrix)[0]
    }

    /// Largest eigenvalue above `1 - PURITY_TOL`.
    pub fn is_pure(&self) -> bool {
        self.largest_eigenvalue() > 1.0 - PURITY_TOL
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }
}

/// Reduced density matrix on `keep`, which must be a nonempty proper subset of the parties.
pub fn partial_trace(rho: &DensityMatrix, keep: &[&str]) -> Result<DensityMatrix> {
    let n = rho.n_parties();
    let mut keep_pos = positions(&rho.parties, keep)?;
    if keep_pos.is_empty() || keep_pos.len() == n {
        return Err(Error::arg(format!(
            "keep must be a nonempty proper subset of {:?}",
            rho.parties
        )));
    }
    keep_pos.sort_unstable();
    let traced: Vec<usize> = (0..n).filter(|p| !keep_pos.contains(p)).collect();
    let table = split_table(n, &keep_pos, &traced);
    let d = 1 << keep_pos.len();
    let mut out = CMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let s: Complex64 = table[i]
                .iter()
                .zip(&table[j])
                .map(|(&fi, &fj)| rho.matrix[(fi, fj)])
                .sum();
            out[(i, j)] = s;
            out[(j, i)] = s.conj();
        }
    }
    let parties = keep_pos.iter().map(|&p| rho.parties[p].clone()).collect();
    Ok(DensityMatrix::from_parts(parties, out))
}

/// Real spectrum of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Set when eigenvalues in `[-CLIP_TOL, 0)` were replaced by zero.
    pub clipped: bool,
}

impl Spectrum {
    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues of a Hermitian matrix; tiny negative eigenvalues are clipped to zero.
pub fn eig_hermitian(m: &CMatrix) -> Result<Spectrum> {
    if m.nrows() != m.ncols() {
        return Err(Error::arg("matrix is not square"));
    }
    let defect = linalg::hermiticity_defect(m);
    if defect > STATE_TOL {
        return Err(Error::arg(format!(
            "matrix is not Hermitian (deviation {defect:.3e})"
        )));
    }
    let mut clipped = false;
    let eigenvalues = linalg::eigvalsh(m)
        .into_iter()
        .map(|v| {
            if (-CLIP_TOL..0.0).contains(&v) {
                clipped = true;
                0.0
            } else {
                v
            }
        })
        .collect();
    Ok(Spectrum {
        eigenvalues,
        clipped,
    })
}

/// `S(ρ) = -Tr ρ log₂ ρ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spec = rho.spectrum()?;
    if let Some(&min) = spec.eigenvalues.last() {
        if min < 0.0 {
            return Err(Error::state(format!("negative eigenvalue {min:.3e}")));
        }
    }
    Ok(linalg::shannon_bits(spec.eigenvalues))
}

/// `h(x) = -x log₂ x - (1-x) log₂(1-x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&x) {
        return Err(Error::arg(format!(
            "binary entropy argument {x} outside [0, 1]"
        )));
    }
    let x = x.clamp(0.0, 1.0);
    Ok(linalg::shannon_bits([x, 1.0 - x]))
}

/// Support threshold for the second argument of [`relative_entropy`].
pub const SUPPORT_EIG_TOL: f64 = 1e-12;
/// Weight of the first argument outside that support which makes the divergence infinite.
pub const SUPPORT_WEIGHT_TOL: f64 = 1e-9;

/// `S(ρ‖σ) = Tr ρ (log₂ ρ - log₂ σ)`, or `f64::INFINITY` when `supp ρ ⊄ supp σ`.
///
/// `σ` may list the same parties in a different order; it is permuted to match `ρ`.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.n_parties() != sigma.n_parties() {
        return Err(Error::arg(format!(
            "party sets differ: {:?} vs {:?}",
            rho.parties, sigma.parties
        )));
    }
    let sigma = if rho.parties == sigma.parties {
        sigma.clone()
    } else {
        let order: Vec<&str> = rho.parties.iter().map(String::as_str).collect();
        sigma.reorder(&order).map_err(|_| {
            Error::arg(format!(
                "party sets differ: {:?} vs {:?}",
                rho.parties, sigma.parties
            ))
        })?
    };
    let (vals, vecs) = linalg::eigh(&sigma.matrix);
    let mut cross = 0.0;
    for (k, &lambda) in vals.iter().enumerate() {
        let v = vecs.column(k);
        let weight = (v.adjoint() * &rho.matrix * v)[(0, 0)].re;
        if lambda < SUPPORT_EIG_TOL {
            if weight > SUPPORT_WEIGHT_TOL {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        cross += weight * lambda.log2();
    }
    let value = -von_neumann_entropy(rho)? - cross;
    Ok(if value < 0.0 && value > -1e-9 {
        0.0
    } else {
        value
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    pub(crate) fn ghz() -> PureState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut a = vec![ZERO; 8];
        a[0] = c(s);
        a[7] = c(s);
        PureState::from_amplitudes(a).unwrap()
    }

    pub(crate) fn w() -> PureState {
        let s = 1.0 / 3f64.sqrt();
        let mut a = vec![ZERO; 8];
        a[1] = c(s);
        a[2] = c(s);
        a[4] = c(s);
        PureState::from_amplitudes(a).unwrap()
    }

    fn diag(parties: &[&str], d: &[f64]) -> DensityMatrix {
        let m = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            d.len(),
            d.iter().map(|&x| c(x)),
        ));
        DensityMatrix::new(parties.iter().map(|s| s.to_string()).collect(), m).unwrap()
    }

    #[test]
    fn density_of_basis_and_plus() {
        let zero = PureState::basis(vec!["a".into()], 0).unwrap();
        let m = zero.density();
        assert_eq!(m.matrix()[(0, 0)], c(1.0));
        assert_eq!(m.matrix()[(1, 1)], ZERO);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = PureState::from_amplitudes(vec![c(s), c(s)]).unwrap();
        for z in plus.density().matrix().iter() {
            assert_abs_diff_eq!(z.re, 0.5, epsilon = 1e-15);
            assert_abs_diff_eq!(z.im, 0.0);
        }
    }

    #[test]
    fn density_of_ghz_has_four_corners() {
        let m = ghz().density();
        for (i, j) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
            assert_abs_diff_eq!(m.matrix()[(i, j)].re, 0.5, epsilon = 1e-15);
        }
        let off: f64 = m.matrix().iter().map(|z| z.norm()).sum::<f64>() - 2.0;
        assert_abs_diff_eq!(off, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn unnormalized_state_is_rejected() {
        let err = PureState::from_amplitudes(vec![c(1.0), c(1.0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidState(_)));
        assert!(PureState::from_amplitudes(vec![c(1.0); 3]).is_err());
    }

    #[test]
    fn partial_trace_of_ghz_and_w() {
        let ab = ghz().density().partial_trace(&["a", "b"]).unwrap();
        let expected = diag(&["a", "b"], &[0.5, 0.0, 0.0, 0.5]);
        assert!((ab.matrix() - expected.matrix()).norm() < 1e-15);

        // W: a is |1> only in the |100> branch.
        let a = w().density().partial_trace(&["a"]).unwrap();
        assert_abs_diff_eq!(a.matrix()[(0, 0)].re, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.matrix()[(1, 1)].re, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let ra = diag(&["a"], &[0.3, 0.7]);
        let rb = diag(&["b"], &[0.9, 0.1]);
        let back = ra.tensor(&rb).unwrap().partial_trace(&["a"]).unwrap();
        assert!((back.matrix() - ra.matrix()).norm() < 1e-15);
    }

    #[test]
    fn partial_trace_argument_errors() {
        let rho = ghz().density();
        assert!(matches!(
            rho.partial_trace(&[]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            rho.partial_trace(&["z"]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            rho.partial_trace(&["a", "b", "c"]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            rho.partial_trace(&["a", "a"]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn pure_state_reduction_matches_partial_trace() {
        let psi = w();
        let direct = psi.reduced(&["c", "a"]).unwrap();
        let via = psi.density().partial_trace(&["a", "c"]).unwrap();
        assert_eq!(direct.parties(), via.parties());
        assert!((direct.matrix() - via.matrix()).norm() < 1e-15);
    }

    #[test]
    fn spectra_of_simple_matrices() {
        let half = diag(&["a"], &[0.5, 0.5]).spectrum().unwrap();
        assert_eq!(half.eigenvalues, vec![0.5, 0.5]);
        let s = diag(&["a"], &[2.0 / 3.0, 1.0 / 3.0]).spectrum().unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], 1.0 / 3.0, epsilon = 1e-15);

        let bc = w().reduced(&["b", "c"]).unwrap().spectrum().unwrap();
        let expected = [2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0];
        for (x, y) in bc.eigenvalues.iter().zip(expected) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(bc.sum(), 1.0, epsilon = 1e-8);
    }

    #[test]
    fn eig_hermitian_clips_noise_and_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0), ZERO, ZERO, c(-5e-11)]);
        let s = eig_hermitian(&m).unwrap();
        assert!(s.clipped);
        assert_eq!(s.eigenvalues, vec![1.0, 0.0]);

        let bad = CMatrix::from_row_slice(2, 2, &[c(1.0), c(0.5), ZERO, c(0.0)]);
        assert!(matches!(
            eig_hermitian(&bad),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn entropy_examples() {
        assert_abs_diff_eq!(ghz().density().entropy().unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            diag(&["a"], &[0.5, 0.5]).entropy().unwrap(),
            1.0,
            epsilon = 1e-15
        );
        let s = diag(&["a"], &[1.0 / 3.0, 2.0 / 3.0]).entropy().unwrap();
        assert_abs_diff_eq!(s, 0.918_295_834_054_489_6, epsilon = 1e-12);
        assert!((s - 0.91830).abs() < 5e-6);
    }

    #[test]
    fn binary_entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // direct: (1/3) log2 3 + (2/3) log2 (3/2)
        let direct = (1.0 / 3.0) * 3f64.log2() + (2.0 / 3.0) * 1.5f64.log2();
        assert_abs_diff_eq!(binary_entropy(1.0 / 3.0).unwrap(), direct, epsilon = 1e-15);
        assert_abs_diff_eq!(
            binary_entropy(0.2).unwrap(),
            binary_entropy(0.8).unwrap(),
            epsilon = 1e-15
        );
        assert!(matches!(
            binary_entropy(1.1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            binary_entropy(-0.01),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn relative_entropy_examples() {
        let rho = w().density();
        assert_abs_diff_eq!(relative_entropy(&rho, &rho).unwrap(), 0.0, epsilon = 1e-12);

        let g = ghz().density();
        let a = g.partial_trace(&["a"]).unwrap();
        let b = g.partial_trace(&["b"]).unwrap();
        let cc = g.partial_trace(&["c"]).unwrap();
        let pi = a.tensor(&b).unwrap().tensor(&cc).unwrap();
        assert_abs_diff_eq!(relative_entropy(&g, &pi).unwrap(), 3.0, epsilon = 1e-12);

        let zero = PureState::basis(vec!["a".into()], 0).unwrap().density();
        let one = PureState::basis(vec!["a".into()], 1).unwrap().density();
        assert_eq!(relative_entropy(&zero, &one).unwrap(), f64::INFINITY);
        assert!(matches!(
            relative_entropy(&zero, &g),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn relative_entropy_accepts_permuted_parties() {
        let rho = w().density();
        let ac = rho.partial_trace(&["a", "c"]).unwrap();
        let b = rho.partial_trace(&["b"]).unwrap();
        let sigma = ac.tensor(&b).unwrap();
        assert_eq!(sigma.parties(), ["a", "c", "b"]);
        let d = relative_entropy(&rho, &sigma).unwrap();
        // S(ac) + S(b) - S(abc) for the W state = 2 h(1/3)
        assert_abs_diff_eq!(d, 2.0 * binary_entropy(1.0 / 3.0).unwrap(), epsilon = 1e-10);
    }

    #[test]
    fn reorder_round_trips() {
        let rho = w().density();
        let ac_b = rho
            .partial_trace(&["a", "c"])
            .unwrap()
            .tensor(&rho.partial_trace(&["b"]).unwrap())
            .unwrap();
        let back = ac_b
            .reorder(&["a", "b", "c"])
            .unwrap()
            .reorder(&["a", "c", "b"])
            .unwrap();
        assert!((back.matrix() - ac_b.matrix()).norm() < 1e-15);
    }

    #[test]
    fn density_matrix_validation() {
        let p = vec!["a".to_string()];
        let not_unit = CMatrix::from_row_slice(2, 2, &[c(0.6), ZERO, ZERO, c(0.6)]);
        assert!(DensityMatrix::new(p.clone(), not_unit).is_err());
        let negative = CMatrix::from_row_slice(2, 2, &[c(1.1), ZERO, ZERO, c(-0.1)]);
        let msg = DensityMatrix::new(p.clone(), negative)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("positive semidefinite"), "{msg}");
        let wrong_dim = CMatrix::identity(4, 4) * c(0.25);
        assert!(DensityMatrix::new(p, wrong_dim).is_err());
    }

    #[test]
    fn apply_local_preserves_norm() {
        let h = Matrix2::new(c(1.0), c(1.0), c(1.0), c(-1.0)) * c(std::f64::consts::FRAC_1_SQRT_2);
        let psi = ghz().apply_local("b", &h).unwrap();
        let n: f64 = psi.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert_abs_diff_eq!(n, 1.0, epsilon = 1e-14);
        // H on b of GHZ: (|0+0> + |1-1>)/sqrt2 -> amplitude of |010> = 1/2
        assert_abs_diff_eq!(psi.amplitudes()[2].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.amplitudes()[7].re, -0.5, epsilon = 1e-15);
    }
}
