//! Two-qubit correlation measures.
//!
//! Directional quantities follow the usual convention: `J_{a:b}` and `δ_{a:b}`
//! are obtained by measuring party `b`. [`classical_correlation_directional`]
//! and [`discord_directional`] take the *measured* party explicitly.
//!
//! The optimizer searches rank-1 projective measurements only. For reductions
//! of pure three-qubit states the Koashi–Winter closed forms
//! ([`koashi_winter_classical`], [`koashi_winter_discord`]) give the exact
//! values and serve as the reference.

mod concurrence;
mod measurement;

use serde::{Deserialize, Serialize};

pub use concurrence::{
    concurrence, entanglement_of_formation, eof_from_concurrence, one_to_rest_concurrence,
    one_to_rest_tangle, spin_flipped, wootters_lambdas, wootters_lambdas_sandwich,
};
pub(crate) use measurement::Conditioner;
pub use measurement::{conditional_entropy_measured, MeasurementBasis};

use measurement::two_party;

use crate::optimize::OptimizerConfig;
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Discord values in `[-DISCORD_CLIP, 0)` are reported as zero.
pub const DISCORD_CLIP: f64 = 1e-6;

/// How a correlation value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Optimizer,
}

/// Value of a directional measure and the measurement realizing it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionalResult {
    pub value: f64,
    /// Party the measurement acts on.
    pub measured: String,
    pub optimal_basis: MeasurementBasis,
    pub method: Method,
}

/// `I(ρ_ab) = S(ρ_a) + S(ρ_b) - S(ρ_ab)`.
pub fn mutual_information(rho_ab: &DensityMatrix) -> Result<f64> {
    two_party(rho_ab)?;
    let p = rho_ab.parties();
    let sa = rho_ab.partial_trace(&[&p[0]])?.entropy()?;
    let sb = rho_ab.partial_trace(&[&p[1]])?.entropy()?;
    Ok(sa + sb - rho_ab.entropy()?)
}

fn other_party<'a>(rho_ab: &'a DensityMatrix, measured: &str) -> Result<(usize, &'a str)> {
    let pos = rho_ab.party_index(measured)?;
    Ok((pos, rho_ab.parties()[1 - pos].as_str()))
}

/// `J_{x:m} = max_{E^m} [S(ρ_x) - S(x|{E^m})]` over projective measurements on `measured`.
///
/// Grid scan over `(θ, φ)` followed by simplex refinement, see [`OptimizerConfig`].
pub fn classical_correlation_directional(
    rho_ab: &DensityMatrix,
    measured: &str,
    cfg: &OptimizerConfig,
) -> Result<DirectionalResult> {
    two_party(rho_ab)?;
    cfg.validate()?;
    let (pos, other) = other_party(rho_ab, measured)?;
    let s_other = rho_ab.partial_trace(&[other])?.entropy()?;
    let (basis, cond) = Conditioner::new(rho_ab, pos).minimize(cfg);
    Ok(DirectionalResult {
        value: (s_other - cond).max(0.0),
        measured: measured.to_string(),
        optimal_basis: basis,
        method: Method::Optimizer,
    })
}

/// `δ_{x:m} = I(ρ_xm) - J_{x:m}`, with the same optimal basis.
pub fn discord_directional(
    rho_ab: &DensityMatrix,
    measured: &str,
    cfg: &OptimizerConfig,
) -> Result<DirectionalResult> {
    let j = classical_correlation_directional(rho_ab, measured, cfg)?;
    let value = clip_discord(mutual_information(rho_ab)? - j.value)?;
    Ok(DirectionalResult { value, ..j })
}

pub(crate) fn clip_discord(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -DISCORD_CLIP {
        Ok(0.0)
    } else {
        Err(Error::Internal(format!(
            "discord evaluated to {value:.3e} < 0"
        )))
    }
}

/// Symmetrized measure together with both directions.
///
/// `directions[0]` measures the second party, `directions[1]` the first; `value`
/// is the max (classical) or min (discord) of the two.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Symmetrized {
    pub value: f64,
    /// Measured party of the direction realizing `value` (first on ties).
    pub realized_by: String,
    pub directions: [DirectionalResult; 2],
}

fn symmetrize(
    rho_ab: &DensityMatrix,
    f: impl Fn(&str) -> Result<DirectionalResult>,
    take_max: bool,
) -> Result<Symmetrized> {
    two_party(rho_ab)?;
    let p = rho_ab.parties();
    let first = f(&p[1])?;
    let second = f(&p[0])?;
    let second_wins = if take_max {
        second.value > first.value
    } else {
        second.value < first.value
    };
    let (value, realized_by) = if second_wins {
        (second.value, second.measured.clone())
    } else {
        (first.value, first.measured.clone())
    };
    Ok(Symmetrized {
        value,
        realized_by,
        directions: [first, second],
    })
}

/// `J(ρ_ab) = max[J_{a:b}, J_{b:a}]`.
pub fn symmetrized_classical(rho_ab: &DensityMatrix, cfg: &OptimizerConfig) -> Result<Symmetrized> {
    symmetrize(
        rho_ab,
        |m| classical_correlation_directional(rho_ab, m, cfg),
        true,
    )
}

/// `D(ρ_ab) = min[δ_{a:b}, δ_{b:a}]`.
pub fn symmetrized_discord(rho_ab: &DensityMatrix, cfg: &OptimizerConfig) -> Result<Symmetrized> {
    symmetrize(rho_ab, |m| discord_directional(rho_ab, m, cfg), false)
}

/// Parties `(i, j, k)` of a pure three-qubit state, `k` being the one not named.
fn pure_triple<'a>(rho: &'a DensityMatrix, i: &str, j: &str) -> Result<&'a str> {
    if rho.n_parties() != 3 {
        return Err(Error::arg(format!(
            "expected a three-qubit state, got parties {:?}",
            rho.parties()
        )));
    }
    let (pi, pj) = (rho.party_index(i)?, rho.party_index(j)?);
    if pi == pj {
        return Err(Error::arg("the two parties must differ"));
    }
    if !rho.is_pure() {
        return Err(Error::unsupported(
            "Koashi–Winter closed forms require a pure three-qubit state",
        ));
    }
    Ok(rho.parties()[3 - pi - pj].as_str())
}

/// `J_{i:j} = S(ρ_i) - E(ρ_ik)` for a pure three-qubit state (measurement on `j`).
pub fn koashi_winter_classical(rho: &DensityMatrix, i: &str, j: &str) -> Result<f64> {
    let k = pure_triple(rho, i, j)?;
    let s_i = rho.partial_trace(&[i])?.entropy()?;
    let e_ik = entanglement_of_formation(&rho.partial_trace(&[i, k])?)?;
    Ok((s_i - e_ik).max(0.0))
}

/// `δ_{i:j} = S(ρ_j) - S(ρ_k) + E(ρ_ik)` for a pure three-qubit state (measurement on `j`).
pub fn koashi_winter_discord(rho: &DensityMatrix, i: &str, j: &str) -> Result<f64> {
    let k = pure_triple(rho, i, j)?;
    let s_j = rho.partial_trace(&[j])?.entropy()?;
    let s_k = rho.partial_trace(&[k])?.entropy()?;
    let e_ik = entanglement_of_formation(&rho.partial_trace(&[i, k])?)?;
    Ok((s_j - s_k + e_ik).max(0.0))
}
