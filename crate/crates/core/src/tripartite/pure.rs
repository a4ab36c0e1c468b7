//! Closed forms for pure three-qubit states.

use serde::{Deserialize, Serialize};

use super::{label, pair_slot, rest, three_parties, PartyOrdering};
use crate::bipartite::{concurrence, entanglement_of_formation, one_to_rest_tangle};
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Residual tangles in `[-TANGLE_CLIP, 0)` are reported as zero.
pub const TANGLE_CLIP: f64 = 1e-9;

/// Entropies, entanglements of formation and concurrences of a pure three-qubit state.
///
/// Single-party arrays are indexed by party, pair arrays by `(0,1), (0,2), (1,2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PureTripartite {
    pub labels: [String; 3],
    pub ordering: PartyOrdering,
    pub entropy: [f64; 3],
    pub pair_eof: [f64; 3],
    /// Squared pairwise concurrences `C_ij²`.
    pub pair_tangle: [f64; 3],
    /// `C_i² = 4 det ρ_i`, one qubit against the other two.
    pub one_tangle: [f64; 3],
}

impl PureTripartite {
    /// Fails with `Unsupported` on mixed input.
    pub fn new(rho: &DensityMatrix) -> Result<Self> {
        three_parties(rho)?;
        if !rho.is_pure() {
            return Err(Error::unsupported(
                "pure-state closed forms require a pure three-qubit state",
            ));
        }
        let labels = [0, 1, 2].map(|i| label(rho, i).to_string());
        let mut entropy = [0.0; 3];
        let mut one_tangle = [0.0; 3];
        for i in 0..3 {
            let r = rho.partial_trace(&[label(rho, i)])?;
            entropy[i] = r.entropy()?;
            one_tangle[i] = one_to_rest_tangle(&r)?;
        }
        let mut pair_eof = [0.0; 3];
        let mut pair_tangle = [0.0; 3];
        for (slot, &(i, j)) in super::PAIRS.iter().enumerate() {
            let r = rho.partial_trace(&[label(rho, i), label(rho, j)])?;
            let c = concurrence(&r)?;
            pair_tangle[slot] = c * c;
            pair_eof[slot] = entanglement_of_formation(&r)?;
        }
        // For a pure state I(i,j) = S_i + S_j - S_k.
        let mi = super::PAIRS.map(|(i, j)| {
            let k = 3 - i - j;
            entropy[i] + entropy[j] - entropy[k]
        });
        let ordering = PartyOrdering::from_mutual_infos(&labels, mi);
        Ok(Self {
            labels,
            ordering,
            entropy,
            pair_eof,
            pair_tangle,
            one_tangle,
        })
    }

    pub fn eof(&self, i: usize, j: usize) -> f64 {
        self.pair_eof[pair_slot(i, j)]
    }

    /// Entropy of the party in role `k` (0 = a, 1 = b, 2 = c).
    pub fn role_entropy(&self, k: usize) -> f64 {
        self.entropy[self.ordering.role(k)]
    }

    /// Entanglement of formation between the parties in roles `k` and `l`.
    pub fn role_eof(&self, k: usize, l: usize) -> f64 {
        self.eof(self.ordering.role(k), self.ordering.role(l))
    }

    /// `J_{i:j} = S_i - E_ik` (measurement on `j`), original indices.
    pub fn classical_directional(&self, i: usize, j: usize) -> f64 {
        let k = 3 - i - j;
        (self.entropy[i] - self.eof(i, k)).max(0.0)
    }

    /// `δ_{i:j} = S_j - S_k + E_ik` (measurement on `j`), original indices.
    pub fn discord_directional(&self, i: usize, j: usize) -> f64 {
        let k = 3 - i - j;
        (self.entropy[j] - self.entropy[k] + self.eof(i, k)).max(0.0)
    }

    /// Symmetrized pairwise classical correlations `max[J_{i:j}, J_{j:i}]` per pair.
    pub fn pairwise_classical(&self) -> [f64; 3] {
        super::PAIRS.map(|(i, j)| {
            self.classical_directional(i, j)
                .max(self.classical_directional(j, i))
        })
    }

    /// Symmetrized pairwise discords `min[δ_{i:j}, δ_{j:i}]` per pair.
    pub fn pairwise_discord(&self) -> [f64; 3] {
        super::PAIRS.map(|(i, j)| {
            self.discord_directional(i, j)
                .min(self.discord_directional(j, i))
        })
    }

    /// `T = S_a + S_b + S_c`.
    pub fn total_information(&self) -> f64 {
        self.entropy.iter().sum()
    }

    /// `J = S_b + S_c - E_bc`.
    pub fn total_classical(&self) -> f64 {
        self.role_entropy(1) + self.role_entropy(2) - self.role_eof(1, 2)
    }

    /// `D = S_a + E_bc`.
    pub fn total_discord(&self) -> f64 {
        self.role_entropy(0) + self.role_eof(1, 2)
    }

    /// `J⁽²⁾ = S_b - E_bc`, the classical correlation of the dominant pair,
    /// which is the largest pairwise classical correlation.
    pub fn bipartite_classical(&self) -> f64 {
        self.role_entropy(1) - self.role_eof(1, 2)
    }

    /// `D⁽²⁾ = S_a - S_c + E_bc`, the discord of the dominant pair `(a, b)`.
    ///
    /// Keeps `D - D⁽²⁾ = S_c = J - J⁽²⁾`. It is usually, but not always, the
    /// largest of the three pairwise discords, and generally not the smallest.
    pub fn bipartite_discord(&self) -> f64 {
        self.role_entropy(0) - self.role_entropy(2) + self.role_eof(1, 2)
    }

    /// `J⁽³⁾ = D⁽³⁾ = S_c`.
    pub fn genuine(&self) -> f64 {
        self.role_entropy(2)
    }

    /// Unclipped `C_i² - C_ij² - C_ik²` for each focus party `i`.
    pub fn residual_tangles(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| {
            let (j, k) = rest(i);
            self.one_tangle[i]
                - self.pair_tangle[pair_slot(i, j)]
                - self.pair_tangle[pair_slot(i, k)]
        })
    }

    /// Residual tangle with party 0 in focus, clipped at zero.
    pub fn three_tangle(&self) -> Result<f64> {
        let tau = self.residual_tangles()[0];
        if tau < -TANGLE_CLIP {
            return Err(Error::Internal(format!(
                "three-tangle evaluated to {tau:.3e} < 0"
            )));
        }
        Ok(tau.max(0.0))
    }
}

/// `J = S_b + S_c - E_bc` in canonical order.
pub fn total_classical_pure(rho: &DensityMatrix) -> Result<f64> {
    Ok(PureTripartite::new(rho)?.total_classical())
}

/// `D = S_a + E_bc` in canonical order.
pub fn total_discord_pure(rho: &DensityMatrix) -> Result<f64> {
    Ok(PureTripartite::new(rho)?.total_discord())
}

/// `(J⁽²⁾, D⁽²⁾)`, see [`PureTripartite::bipartite_discord`] for the discord convention.
pub fn bipartite_parts_pure(rho: &DensityMatrix) -> Result<(f64, f64)> {
    let p = PureTripartite::new(rho)?;
    Ok((p.bipartite_classical(), p.bipartite_discord()))
}

/// `J⁽³⁾ = S_c`, the smallest single-qubit entropy.
pub fn genuine_classical(rho: &DensityMatrix) -> Result<f64> {
    Ok(PureTripartite::new(rho)?.genuine())
}

/// `D⁽³⁾ = S_c`, equal to [`genuine_classical`] on pure states.
pub fn genuine_discord(rho: &DensityMatrix) -> Result<f64> {
    Ok(PureTripartite::new(rho)?.genuine())
}

/// `τ = C_a² - C_ab² - C_ac²` with the first party in focus.
pub fn three_tangle(rho: &DensityMatrix) -> Result<f64> {
    PureTripartite::new(rho)?.three_tangle()
}

/// Unclipped residual tangle for each focus party; equal up to rounding.
pub fn residual_tangles(rho: &DensityMatrix) -> Result<[f64; 3]> {
    Ok(PureTripartite::new(rho)?.residual_tangles())
}
