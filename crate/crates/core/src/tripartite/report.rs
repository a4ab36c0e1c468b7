//! Full correlation report for a three-qubit state.

use serde::{Deserialize, Serialize};

use super::mixed::{total_classical_mixed, DoubleConfig};
use super::pure::PureTripartite;
use super::{
    canonical_ordering, cut_mutual_informations, label, pairwise_mutual_informations,
    three_parties, total_information, PartyOrdering, PAIRS,
};
use crate::bipartite::{clip_discord, symmetrized_classical, symmetrized_discord, Method};
use crate::optimize::OptimizerConfig;
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Tolerance of the identities checked by [`CorrelationReport::check_invariants`].
pub const REPORT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub optimizer: OptimizerConfig,
    pub double: DoubleConfig,
    /// Refuse mixed input instead of falling back to the optimizer.
    pub pure_only: bool,
}

/// Total, bipartite and genuine correlations, in bits.
///
/// `J2` and `D2` are the classical correlation and discord of the dominant
/// pair (largest mutual information). `J2` is also the largest pairwise
/// classical correlation; `D2` need not be an extreme pairwise discord.
/// `pairwise_classical` and `pairwise_discord` carry all three pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub labels: [String; 3],
    #[serde(rename = "T")]
    pub total: f64,
    #[serde(rename = "J")]
    pub classical: f64,
    #[serde(rename = "D")]
    pub discord: f64,
    #[serde(rename = "T2")]
    pub total_bipartite: f64,
    #[serde(rename = "T3")]
    pub total_genuine: f64,
    #[serde(rename = "J2")]
    pub classical_bipartite: f64,
    #[serde(rename = "J3")]
    pub classical_genuine: f64,
    #[serde(rename = "D2")]
    pub discord_bipartite: f64,
    #[serde(rename = "D3")]
    pub discord_genuine: f64,
    /// Residual three-tangle; pure states only.
    pub tangle: Option<f64>,
    pub single_entropies: [f64; 3],
    /// `[I_01, I_02, I_12]`.
    pub pairwise_mutual: [f64; 3],
    /// `cut_mutual[k] = I(ρ_{ij,k})`.
    pub cut_mutual: [f64; 3],
    pub pairwise_classical: [f64; 3],
    pub pairwise_discord: [f64; 3],
    pub ordering: PartyOrdering,
    pub pure: bool,
    pub method: Method,
}

fn max3(v: [f64; 3]) -> f64 {
    v.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

/// Runs the closed forms on pure input and the optimizers otherwise, then
/// checks the report's identities.
pub fn analyze(rho: &DensityMatrix, cfg: &AnalysisConfig) -> Result<CorrelationReport> {
    three_parties(rho)?;
    let report = if rho.is_pure() {
        analyze_pure(rho)?
    } else if cfg.pure_only {
        return Err(Error::unsupported(
            "state is mixed and the closed-form path was requested",
        ));
    } else {
        analyze_mixed(rho, cfg)?
    };
    report.check_invariants()?;
    Ok(report)
}

fn common(rho: &DensityMatrix) -> Result<([String; 3], [f64; 3], [f64; 3], [f64; 3], f64)> {
    let labels = [0, 1, 2].map(|i| label(rho, i).to_string());
    let singles = [0, 1, 2].map(|i| {
        rho.partial_trace(&[label(rho, i)])
            .and_then(|r| r.entropy())
    });
    let [s0, s1, s2] = singles;
    Ok((
        labels,
        [s0?, s1?, s2?],
        pairwise_mutual_informations(rho)?,
        cut_mutual_informations(rho)?,
        total_information(rho)?,
    ))
}

pub(crate) fn analyze_pure(rho: &DensityMatrix) -> Result<CorrelationReport> {
    let p = PureTripartite::new(rho)?;
    let (labels, single_entropies, pairwise_mutual, cut_mutual, total) = common(rho)?;
    let total_bipartite = max3(pairwise_mutual);
    let (classical, discord) = (p.total_classical(), p.total_discord());
    let (j2, d2) = (p.bipartite_classical(), p.bipartite_discord());
    Ok(CorrelationReport {
        labels,
        total,
        classical,
        discord,
        total_bipartite,
        total_genuine: total - total_bipartite,
        classical_bipartite: j2,
        classical_genuine: classical - j2,
        discord_bipartite: d2,
        discord_genuine: discord - d2,
        tangle: Some(p.three_tangle()?),
        single_entropies,
        pairwise_mutual,
        cut_mutual,
        pairwise_classical: p.pairwise_classical(),
        pairwise_discord: p.pairwise_discord(),
        ordering: p.ordering.clone(),
        pure: true,
        method: Method::ClosedForm,
    })
}

fn analyze_mixed(rho: &DensityMatrix, cfg: &AnalysisConfig) -> Result<CorrelationReport> {
    let (labels, single_entropies, pairwise_mutual, cut_mutual, total) = common(rho)?;
    let mut pairwise_classical = [0.0; 3];
    let mut pairwise_discord = [0.0; 3];
    for (slot, &(i, j)) in PAIRS.iter().enumerate() {
        let pair = rho.partial_trace(&[label(rho, i), label(rho, j)])?;
        pairwise_classical[slot] = symmetrized_classical(&pair, &cfg.optimizer)?.value;
        pairwise_discord[slot] = symmetrized_discord(&pair, &cfg.optimizer)?.value;
    }
    let classical = total_classical_mixed(rho, &cfg.optimizer, &cfg.double)?.value;
    let discord = clip_discord(total - classical)?;
    let total_bipartite = max3(pairwise_mutual);
    let j2 = max3(pairwise_classical);
    let ordering = canonical_ordering(rho)?;
    let d2 = pairwise_discord[super::pair_slot(ordering.role(0), ordering.role(1))];
    Ok(CorrelationReport {
        labels,
        total,
        classical,
        discord,
        total_bipartite,
        total_genuine: total - total_bipartite,
        classical_bipartite: j2,
        classical_genuine: classical - j2,
        discord_bipartite: d2,
        discord_genuine: discord - d2,
        tangle: None,
        single_entropies,
        pairwise_mutual,
        cut_mutual,
        pairwise_classical,
        pairwise_discord,
        ordering,
        pure: false,
        method: Method::Optimizer,
    })
}

impl CorrelationReport {
    /// Named scalar fields in serialization order.
    pub fn fields(&self) -> [(&'static str, f64); 9] {
        [
            ("T", self.total),
            ("J", self.classical),
            ("D", self.discord),
            ("T2", self.total_bipartite),
            ("T3", self.total_genuine),
            ("J2", self.classical_bipartite),
            ("J3", self.classical_genuine),
            ("D2", self.discord_bipartite),
            ("D3", self.discord_genuine),
        ]
    }

    /// Decomposition identities, plus `T = J + D` and `J3 = D3 = S_c = T3/2`
    /// on the closed-form path. Nonnegativity is only enforced on the closed-form
    /// path; optimizer lower bounds may leave genuine parts slightly negative.
    pub fn check_invariants(&self) -> Result<()> {
        let mut bad = Vec::new();
        let mut eq = |name: &str, a: f64, b: f64| {
            if !((a - b).abs() <= REPORT_TOL) {
                bad.push(format!("{name}: {a} vs {b}"));
            }
        };
        eq(
            "T3 = T - T2",
            self.total_genuine,
            self.total - self.total_bipartite,
        );
        eq(
            "J3 = J - J2",
            self.classical_genuine,
            self.classical - self.classical_bipartite,
        );
        eq(
            "D3 = D - D2",
            self.discord_genuine,
            self.discord - self.discord_bipartite,
        );
        if self.method == Method::ClosedForm {
            let s_c = self.single_entropies[self.ordering.role(2)];
            eq("T = J + D", self.total, self.classical + self.discord);
            eq("J3 = S_c", self.classical_genuine, s_c);
            eq("D3 = S_c", self.discord_genuine, s_c);
            eq("T3 = 2 S_c", self.total_genuine, 2.0 * s_c);
            for (name, v) in self.fields() {
                if !(v >= -REPORT_TOL) {
                    bad.push(format!("{name} = {v} < 0"));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "correlation report violates {}",
                bad.join("; ")
            )))
        }
    }
}
