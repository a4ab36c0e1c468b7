//! Rank-1 projective qubit measurements and measured conditional entropies.

use std::f64::consts::{PI, TAU};

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::block_entropy2;
use crate::optimize::{nelder_mead, OptimizerConfig};
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Projective measurement `{|m₀⟩⟨m₀|, |m₁⟩⟨m₁|}` with
/// `|m₀⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    /// Basis for arbitrary real angles, folded into `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn computational() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    /// `|m₀⟩`.
    pub fn vector(&self) -> [Complex64; 2] {
        bloch_vector(self.theta, self.phi)
    }

    /// `|m₁⟩`, orthogonal to `|m₀⟩`.
    pub fn orthogonal_vector(&self) -> [Complex64; 2] {
        let [m0, m1] = self.vector();
        [-m1.conj(), m0.conj()]
    }

    pub fn projectors(&self) -> [Matrix2<Complex64>; 2] {
        let outer = |v: [Complex64; 2]| {
            Matrix2::new(
                v[0] * v[0].conj(),
                v[0] * v[1].conj(),
                v[1] * v[0].conj(),
                v[1] * v[1].conj(),
            )
        };
        [outer(self.vector()), outer(self.orthogonal_vector())]
    }
}

#[inline]
fn bloch_vector(theta: f64, phi: f64) -> [Complex64; 2] {
    let (s, c) = (0.5 * theta).sin_cos();
    [Complex64::new(c, 0.0), Complex64::from_polar(s, phi)]
}

/// Precomputed blocks of a two-qubit state for fast measured conditional entropies.
///
/// `blocks[s][t]` is `⟨s|ρ|t⟩` on the measured qubit, a 2×2 operator on the other one.
#[derive(Debug, Clone)]
pub(crate) struct Conditioner {
    blocks: [[[Complex64; 4]; 2]; 2],
    reduced: [Complex64; 4],
}

impl Conditioner {
    pub(crate) fn new(rho: &DensityMatrix, measured_pos: usize) -> Self {
        Self::from_matrix(rho.matrix(), measured_pos)
    }

    /// Same, from a raw (possibly unnormalized) 4×4 PSD matrix.
    pub(crate) fn from_matrix(m: &crate::linalg::CMatrix, measured_pos: usize) -> Self {
        let idx = |measured: usize, other: usize| {
            if measured_pos == 1 {
                2 * other + measured
            } else {
                2 * measured + other
            }
        };
        let mut blocks = [[[Complex64::new(0.0, 0.0); 4]; 2]; 2];
        for (s, row) in blocks.iter_mut().enumerate() {
            for (t, block) in row.iter_mut().enumerate() {
                for u in 0..2 {
                    for v in 0..2 {
                        block[2 * u + v] = m[(idx(s, u), idx(t, v))];
                    }
                }
            }
        }
        let mut reduced = [Complex64::new(0.0, 0.0); 4];
        for k in 0..4 {
            reduced[k] = blocks[0][0][k] + blocks[1][1][k];
        }
        Self { blocks, reduced }
    }

    /// `Σ_i p_i S(ρ_{other|i})` for the basis with angles `(θ, φ)`.
    #[inline]
    pub(crate) fn conditional_entropy(&self, theta: f64, phi: f64) -> f64 {
        let m = bloch_vector(theta, phi);
        let mut first = [Complex64::new(0.0, 0.0); 4];
        for s in 0..2 {
            for t in 0..2 {
                let w = m[t] * m[s].conj();
                for k in 0..4 {
                    first[k] += w * self.blocks[s][t][k];
                }
            }
        }
        let (p0, s0) = block_entropy2(first[0].re, first[3].re, first[1]);
        let rest = [
            self.reduced[0] - first[0],
            self.reduced[1] - first[1],
            self.reduced[3] - first[3],
        ];
        let (p1, s1) = block_entropy2(rest[0].re, rest[2].re, rest[1]);
        p0 * s0 + p1 * s1
    }

    /// Grid scan then simplex refinement; returns the minimizing basis and value.
    ///
    /// Grid ties within `1e-10` keep the lexicographically smallest `(θ, φ)`.
    pub(crate) fn minimize(&self, cfg: &OptimizerConfig) -> (MeasurementBasis, f64) {
        let mut best = (0.0, 0.0);
        let mut best_val = f64::INFINITY;
        for theta in cfg.theta_grid() {
            for phi in cfg.phi_grid() {
                let v = self.conditional_entropy(theta, phi);
                if v < best_val - 1e-10 {
                    best_val = v;
                    best = (theta, phi);
                }
            }
        }
        if cfg.refine_iters > 0 {
            let step = [PI / cfg.theta_steps as f64, TAU / cfg.phi_steps as f64];
            let refined = nelder_mead(
                |x| self.conditional_entropy(x[0], x[1]),
                &[best.0, best.1],
                &step,
                cfg.refine_iters,
                cfg.tol,
            );
            if refined.value < best_val - 1e-10 {
                best_val = refined.value;
                best = (refined.point[0], refined.point[1]);
            }
        }
        (MeasurementBasis::new(best.0, best.1), best_val.max(0.0))
    }
}

pub(crate) fn two_party(rho: &DensityMatrix) -> Result<()> {
    if rho.n_parties() != 2 {
        return Err(Error::arg(format!(
            "expected a two-qubit state, got parties {:?}",
            rho.parties()
        )));
    }
    Ok(())
}

/// Measured conditional entropy `S(other | {E_i^measured}) = Σ_i p_i S(ρ_{other|i})`.
///
/// Outcomes with probability below `1e-12` contribute nothing.
pub fn conditional_entropy_measured(
    rho_ab: &DensityMatrix,
    measured_party: &str,
    basis: &MeasurementBasis,
) -> Result<f64> {
    two_party(rho_ab)?;
    let pos = rho_ab.party_index(measured_party)?;
    Ok(Conditioner::new(rho_ab, pos).conditional_entropy(basis.theta, basis.phi))
}
