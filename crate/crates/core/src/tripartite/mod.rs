//! Total, bipartite and genuine tripartite correlations of three-qubit states.
//!
//! Pair-indexed arrays use the pair order `(0,1), (0,2), (1,2)` of the
//! state's own party list; cut-indexed arrays are indexed by the party split
//! off from the other two.
//!
//! Pure states go through closed forms in the canonical ordering (parties
//! relabeled so that `I(a,b) ≥ I(a,c) ≥ I(b,c)`). Mixed states go through the
//! projective-measurement optimizer and are flagged as such.

mod families;
mod mixed;
mod npartite;
mod pure;
mod report;
mod sweep;

use serde::{Deserialize, Serialize};

pub use families::{
    acin_state, family_ghz_tilde, family_w_tilde, ghz, ghz_n, named_state, w, AcinForm,
};
pub use mixed::{
    double_conditional_entropy, min_double_conditional_entropy, total_classical_mixed,
    DoubleConfig, DoubleMinimum, MixedClassical,
};
pub use npartite::{bipartition_entropies, genuine_qc_n, genuine_total_n, Bipartition};
pub use pure::{
    bipartite_parts_pure, genuine_classical, genuine_discord, residual_tangles, three_tangle,
    total_classical_pure, total_discord_pure, PureTripartite, TANGLE_CLIP,
};
pub(crate) use report::analyze_pure;
pub use report::{analyze, AnalysisConfig, CorrelationReport, REPORT_TOL};
pub use sweep::{
    discord_crossover, fixed6, p_grid, sweep_families, sweep_family, Family, Sweep, SweepRow,
    SWEEP_HEADER,
};

use crate::bipartite::mutual_information;
use crate::qstate::{relative_entropy, DensityMatrix};
use crate::{Error, Result};

/// Pairs in pair-indexed arrays.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Slack allowed when checking the canonical ordering on near-ties.
pub const ORDERING_SLACK: f64 = 1e-10;

pub(crate) fn pair_slot(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("not a distinct pair of three parties"),
    }
}

pub(crate) fn three_parties(rho: &DensityMatrix) -> Result<()> {
    if rho.n_parties() != 3 {
        return Err(Error::arg(format!(
            "expected a three-party state, got parties {:?}",
            rho.parties()
        )));
    }
    Ok(())
}

fn label(rho: &DensityMatrix, i: usize) -> &str {
    rho.parties()[i].as_str()
}

/// `T = S(ρ_a) + S(ρ_b) + S(ρ_c) - S(ρ)`.
pub fn total_information(rho: &DensityMatrix) -> Result<f64> {
    three_parties(rho)?;
    let singles: f64 = (0..3)
        .map(|i| rho.partial_trace(&[label(rho, i)])?.entropy())
        .sum::<Result<f64>>()?;
    Ok(singles - rho.entropy()?)
}

/// `[I(ρ_01), I(ρ_02), I(ρ_12)]`.
pub fn pairwise_mutual_informations(rho: &DensityMatrix) -> Result<[f64; 3]> {
    three_parties(rho)?;
    let mut out = [0.0; 3];
    for (slot, &(i, j)) in PAIRS.iter().enumerate() {
        out[slot] = mutual_information(&rho.partial_trace(&[label(rho, i), label(rho, j)])?)?;
    }
    Ok(out)
}

/// `out[k] = I(ρ_{ij,k}) = S(ρ_ij) + S(ρ_k) - S(ρ)`.
pub fn cut_mutual_informations(rho: &DensityMatrix) -> Result<[f64; 3]> {
    three_parties(rho)?;
    let s = rho.entropy()?;
    let mut out = [0.0; 3];
    for (k, o) in out.iter_mut().enumerate() {
        let (i, j) = rest(k);
        let s_ij = rho
            .partial_trace(&[label(rho, i), label(rho, j)])?
            .entropy()?;
        let s_k = rho.partial_trace(&[label(rho, k)])?.entropy()?;
        *o = s_ij + s_k - s;
    }
    Ok(out)
}

/// The two parties other than `k`, ascending.
pub(crate) fn rest(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Relabeling of the parties that puts pairwise mutual informations in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartyOrdering {
    /// `permutation[k]` is the original index of the party playing role `k` (a, b, c).
    pub permutation: [usize; 3],
    /// Original labels in role order.
    pub labels: [String; 3],
    /// `[I(a,b), I(a,c), I(b,c)]` after relabeling, descending.
    pub sorted_mutual_infos: [f64; 3],
}

impl PartyOrdering {
    /// Orders by pairwise mutual informations `[I_01, I_02, I_12]`.
    ///
    /// The first permutation in lexicographic order satisfying the ordering
    /// within [`ORDERING_SLACK`] wins, which breaks ties towards the original labels.
    pub fn from_mutual_infos(labels: &[String], mi: [f64; 3]) -> Self {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let at = |p: &[usize; 3]| {
            [
                mi[pair_slot(p[0], p[1])],
                mi[pair_slot(p[0], p[2])],
                mi[pair_slot(p[1], p[2])],
            ]
        };
        let permutation = *PERMS
            .iter()
            .find(|p| {
                let v = at(p);
                v[0] >= v[1] - ORDERING_SLACK && v[1] >= v[2] - ORDERING_SLACK
            })
            .expect("the sorted permutation always qualifies");
        Self {
            permutation,
            labels: permutation.map(|k| labels[k].clone()),
            sorted_mutual_infos: at(&permutation),
        }
    }

    /// Original index of role `a`, `b` or `c` (0, 1, 2).
    pub fn role(&self, k: usize) -> usize {
        self.permutation[k]
    }
}

/// Canonical ordering of a three-party state.
pub fn canonical_ordering(rho: &DensityMatrix) -> Result<PartyOrdering> {
    Ok(PartyOrdering::from_mutual_infos(
        rho.parties(),
        pairwise_mutual_informations(rho)?,
    ))
}

/// `T⁽³⁾ = T - max_{pairs} I`.
pub fn genuine_total(rho: &DensityMatrix) -> Result<f64> {
    let mi = pairwise_mutual_informations(rho)?;
    let t2 = mi.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(total_information(rho)? - t2)
}

/// `min_k S(ρ ‖ ρ_ij ⊗ ρ_k)`: distance to the closest state without tripartite correlations.
pub fn genuine_total_via_relative_entropy(rho: &DensityMatrix) -> Result<f64> {
    three_parties(rho)?;
    let mut best = f64::INFINITY;
    for k in 0..3 {
        let (i, j) = rest(k);
        let sigma = rho
            .partial_trace(&[label(rho, i), label(rho, j)])?
            .tensor(&rho.partial_trace(&[label(rho, k)])?)?;
        best = best.min(relative_entropy(rho, &sigma)?);
    }
    Ok(best)
}
