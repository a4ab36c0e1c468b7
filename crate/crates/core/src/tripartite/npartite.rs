//! Genuine correlations of pure `n`-qubit states, `3 ≤ n ≤ 6`.

use serde::{Deserialize, Serialize};

use crate::qstate::{DensityMatrix, MAX_QUBITS};
use crate::{Error, Result};

/// A cut `A | Ā` with the entropies of both sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bipartition {
    /// Parties in `A`; always contains the first party.
    pub side: Vec<String>,
    pub complement: Vec<String>,
    pub entropy: f64,
    pub complement_entropy: f64,
}

impl Bipartition {
    /// `I(ρ_{A,Ā})` for a pure global state.
    pub fn mutual_information(&self) -> f64 {
        self.entropy + self.complement_entropy
    }
}

fn pure_n(rho: &DensityMatrix) -> Result<()> {
    let n = rho.n_parties();
    if !(3..=MAX_QUBITS).contains(&n) {
        return Err(Error::unsupported(format!(
            "n-partite quantifiers need 3..={MAX_QUBITS} parties, got {n}"
        )));
    }
    if !rho.is_pure() {
        return Err(Error::unsupported(
            "n-partite quantifiers require a pure state",
        ));
    }
    Ok(())
}

/// All `2^{n-1} - 1` bipartitions, ordered by the bitmask of `A` (first party = lowest bit).
pub fn bipartition_entropies(rho: &DensityMatrix) -> Result<Vec<Bipartition>> {
    pure_n(rho)?;
    let n = rho.n_parties();
    let parties = rho.parties();
    let full = (1usize << n) - 1;
    (1..full)
        .step_by(2)
        .map(|mask| {
            let pick = |m: usize| -> Vec<&str> {
                (0..n)
                    .filter(|&p| m >> p & 1 == 1)
                    .map(|p| parties[p].as_str())
                    .collect()
            };
            let (a, b) = (pick(mask), pick(full ^ mask));
            Ok(Bipartition {
                entropy: rho.partial_trace(&a)?.entropy()?,
                complement_entropy: rho.partial_trace(&b)?.entropy()?,
                side: a.iter().map(|s| s.to_string()).collect(),
                complement: b.iter().map(|s| s.to_string()).collect(),
            })
        })
        .collect()
}

/// `T⁽ⁿ⁾`: the smallest mutual information across any bipartition.
pub fn genuine_total_n(rho: &DensityMatrix) -> Result<f64> {
    Ok(bipartition_entropies(rho)?
        .iter()
        .map(Bipartition::mutual_information)
        .fold(f64::INFINITY, f64::min))
}

/// `D⁽ⁿ⁾ = J⁽ⁿ⁾ = T⁽ⁿ⁾ / 2`.
pub fn genuine_qc_n(rho: &DensityMatrix) -> Result<f64> {
    Ok(genuine_total_n(rho)? / 2.0)
}
