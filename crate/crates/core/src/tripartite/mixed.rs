//! Measurement-based quantities for mixed three-qubit states.
//!
//! Only local rank-1 projective measurements are searched, so the classical
//! correlations found here are lower bounds on their POVM-defined values.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{label, rest, three_parties};
use crate::bipartite::{Conditioner, MeasurementBasis, Method};
use crate::linalg::CMatrix;
use crate::optimize::{nelder_mead, OptimizerConfig};
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Grid values at or below this are taken as the global minimum (entropies are nonnegative).
const EXACT_ZERO: f64 = 1e-12;

/// Grid and refinement settings for the four-angle double-measurement search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoubleConfig {
    /// Grid points per angle (θ on `[0, π]` inclusive, φ on `[0, 2π)`).
    pub points_per_angle: usize,
    pub refine_iters: usize,
    pub tol: f64,
}

impl Default for DoubleConfig {
    fn default() -> Self {
        Self {
            points_per_angle: 30,
            refine_iters: 400,
            tol: 1e-10,
        }
    }
}

impl DoubleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.points_per_angle < 2 {
            return Err(Error::arg(
                "double-measurement grid needs at least 2 points per angle",
            ));
        }
        if !(self.tol > 0.0) {
            return Err(Error::arg("optimizer tolerance must be positive"));
        }
        Ok(())
    }

    fn bloch_grid(&self) -> Vec<(f64, f64)> {
        let n = self.points_per_angle;
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            let theta = PI * (a as f64 / (n - 1) as f64);
            for b in 0..n {
                out.push((theta, TAU * b as f64 / n as f64));
            }
        }
        out
    }
}

/// Blocks `⟨s|ρ|s'⟩_i` of a state ordered `(i, j, k)`, each a 4×4 operator on `(j, k)`.
struct DoubleConditioner {
    blocks: [[CMatrix; 2]; 2],
}

impl DoubleConditioner {
    fn new(rho: &DensityMatrix, k: usize) -> Result<Self> {
        let (i, j) = rest(k);
        let m = rho.reorder(&[label(rho, i), label(rho, j), label(rho, k)])?;
        let m = m.matrix();
        let block = |s: usize, t: usize| m.view((4 * s, 4 * t), (4, 4)).into_owned();
        Ok(Self {
            blocks: [[block(0, 0), block(0, 1)], [block(1, 0), block(1, 1)]],
        })
    }

    /// Conditioners for the unnormalized `(j, k)` states after each outcome on `i`.
    fn branches(&self, theta: f64, phi: f64) -> [Conditioner; 2] {
        let b = MeasurementBasis::new(theta, phi);
        [b.vector(), b.orthogonal_vector()].map(|u| {
            let mut m = CMatrix::zeros(4, 4);
            for s in 0..2 {
                for t in 0..2 {
                    m += &self.blocks[s][t] * (u[s].conj() * u[t]);
                }
            }
            Conditioner::from_matrix(&m, 0)
        })
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.branches(x[0], x[1])
            .iter()
            .map(|c| c.conditional_entropy(x[2], x[3]))
            .sum()
    }
}

/// Position of `k` and the two measured parties `(i, j)` in party order.
fn measured_pair(rho: &DensityMatrix, k: &str) -> Result<(usize, usize, usize)> {
    three_parties(rho)?;
    let kp = rho.party_index(k)?;
    let (i, j) = rest(kp);
    Ok((i, j, kp))
}

/// `Σ_{l,m} p_lm S(ρ_{k|lm})` after measuring `bases[0]` on the first other party
/// and `bases[1]` on the second (in party order).
pub fn double_conditional_entropy(
    rho: &DensityMatrix,
    k: &str,
    bases: [&MeasurementBasis; 2],
) -> Result<f64> {
    let (_, _, kp) = measured_pair(rho, k)?;
    let dc = DoubleConditioner::new(rho, kp)?;
    Ok(dc.value(&[bases[0].theta, bases[0].phi, bases[1].theta, bases[1].phi]))
}

/// Minimum of [`double_conditional_entropy`] and the bases attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoubleMinimum {
    pub value: f64,
    /// Unmeasured party.
    pub conditioned: String,
    /// Measured parties with their bases, in party order.
    pub measured: [String; 2],
    pub bases: [MeasurementBasis; 2],
}

/// `S(ρ_{k|ji})` minimized over product projective measurements on the other two parties.
///
/// Grid over the four Bloch angles, then simplex refinement. Grid ties within
/// `1e-10` keep the lexicographically smallest angles.
pub fn min_double_conditional_entropy(
    rho: &DensityMatrix,
    k: &str,
    cfg: &DoubleConfig,
) -> Result<DoubleMinimum> {
    cfg.validate()?;
    let (i, j, kp) = measured_pair(rho, k)?;
    let dc = DoubleConditioner::new(rho, kp)?;
    let finish = |x: [f64; 4], value: f64| DoubleMinimum {
        value: value.max(0.0),
        conditioned: label(rho, kp).to_string(),
        measured: [label(rho, i).to_string(), label(rho, j).to_string()],
        bases: [
            MeasurementBasis::new(x[0], x[1]),
            MeasurementBasis::new(x[2], x[3]),
        ],
    };

    let origin = dc.value(&[0.0; 4]);
    if origin <= EXACT_ZERO {
        return Ok(finish([0.0; 4], origin));
    }

    let grid = cfg.bloch_grid();
    let rows: Vec<(f64, usize)> = grid
        .par_iter()
        .map(|&(ti, pi)| {
            let br = dc.branches(ti, pi);
            let mut best = (f64::INFINITY, 0);
            for (n, &(tj, pj)) in grid.iter().enumerate() {
                let v = br[0].conditional_entropy(tj, pj) + br[1].conditional_entropy(tj, pj);
                if v < best.0 - 1e-10 {
                    best = (v, n);
                }
            }
            best
        })
        .collect();
    let (mut best_val, mut best) = (f64::INFINITY, [0.0; 4]);
    for (m, &(v, n)) in rows.iter().enumerate() {
        if v < best_val - 1e-10 {
            best_val = v;
            best = [grid[m].0, grid[m].1, grid[n].0, grid[n].1];
        }
    }

    if cfg.refine_iters > 0 && best_val > EXACT_ZERO {
        let n = cfg.points_per_angle as f64;
        let step = [PI / (n - 1.0), TAU / n, PI / (n - 1.0), TAU / n];
        let r = nelder_mead(|x| dc.value(x), &best, &step, cfg.refine_iters, cfg.tol);
        if r.value < best_val - 1e-10 {
            best_val = r.value;
            best.copy_from_slice(&r.point);
        }
    }
    Ok(finish(best, best_val))
}

/// Total classical correlation found by the measurement optimizers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixedClassical {
    pub value: f64,
    /// Realizing measurement order `(i, j, k)`: `i` measured first, then `j`.
    pub order: [String; 3],
    pub method: Method,
}

/// `J = max_{(i,j,k)} [S_j - S(ρ_{j|i}) + S_k - S(ρ_{k|ji})]` over the six orders.
///
/// First order wins on ties (permutations in lexicographic party order).
pub fn total_classical_mixed(
    rho: &DensityMatrix,
    cfg: &OptimizerConfig,
    dcfg: &DoubleConfig,
) -> Result<MixedClassical> {
    three_parties(rho)?;
    cfg.validate()?;
    let singles = (0..3)
        .map(|p| rho.partial_trace(&[label(rho, p)])?.entropy())
        .collect::<Result<Vec<_>>>()?;
    // cond[i][j] = min S(ρ_{j|i}), measuring i on the pair (i, j).
    let mut cond = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let pair = rho.partial_trace(&[label(rho, i.min(j)), label(rho, i.max(j))])?;
                let pos = usize::from(i > j);
                cond[i][j] = Conditioner::new(&pair, pos).minimize(cfg).1;
            }
        }
    }
    let double = (0..3)
        .map(|k| Ok(min_double_conditional_entropy(rho, label(rho, k), dcfg)?.value))
        .collect::<Result<Vec<_>>>()?;

    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut best = (f64::NEG_INFINITY, ORDERS[0]);
    for o in ORDERS {
        let [i, j, k] = o;
        let v = singles[j] - cond[i][j] + singles[k] - double[k];
        if v > best.0 + 1e-12 {
            best = (v, o);
        }
    }
    Ok(MixedClassical {
        value: best.0.max(0.0),
        order: best.1.map(|p| label(rho, p).to_string()),
        method: Method::Optimizer,
    })
}
