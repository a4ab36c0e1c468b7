//! Seeded random states and unitaries.
//!
//! Every sampler takes an explicit seed so any single sample can be
//! regenerated in isolation. Sub-seeds for batches come from [`split_seed`].

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::qstate::{default_labels, DensityMatrix, PureState, MAX_QUBITS};
use crate::{Error, Result};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Counter-based seed derivation: sub-seed `index` of `master` (SplitMix64 finalizer).
pub fn split_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state drawn from an explicit generator.
pub fn haar_pure_with<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<PureState> {
    if !(1..=MAX_QUBITS).contains(&n_qubits) {
        return Err(Error::arg(format!(
            "n_qubits must be in 1..={MAX_QUBITS}, got {n_qubits}"
        )));
    }
    let amps = (0..1usize << n_qubits)
        .map(|_| complex_gaussian(rng))
        .collect();
    PureState::normalized(default_labels(n_qubits), amps)
}

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes, normalized.
pub fn haar_random_pure(n_qubits: usize, seed: u64) -> Result<PureState> {
    haar_pure_with(n_qubits, &mut rng_from_seed(seed))
}

/// Convex mixture of `1..=max_terms` Haar-random pure states with uniform-simplex weights.
pub fn random_mixture(n_qubits: usize, max_terms: usize, seed: u64) -> Result<DensityMatrix> {
    if max_terms == 0 {
        return Err(Error::arg("mixture needs at least one term"));
    }
    let mut rng = rng_from_seed(seed);
    let k = rng.random_range(1..=max_terms);
    // exponential spacings give a uniform point on the simplex
    let raw: Vec<f64> = (0..k).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    let terms = raw
        .iter()
        .map(|w| Ok((w / total, haar_pure_with(n_qubits, &mut rng)?.density())))
        .collect::<Result<Vec<_>>>()?;
    let last = terms.len() - 1;
    let mut terms = terms;
    // absorb rounding so the weights sum to exactly 1 within STATE_TOL
    let drift: f64 = 1.0 - terms.iter().map(|(w, _)| w).sum::<f64>();
    terms[last].0 += drift;
    DensityMatrix::mixture(&terms)
}

/// Haar-random single-qubit unitary (up to a global phase).
pub fn haar_unitary2<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<Complex64> {
    let (a, b) = (complex_gaussian(rng), complex_gaussian(rng));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / norm, b / norm);
    Matrix2::new(a, -b.conj(), b, a.conj())
}
