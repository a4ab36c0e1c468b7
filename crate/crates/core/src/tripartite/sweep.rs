//! Parameter sweeps over the GHZ and W families.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{family_ghz_tilde, family_w_tilde};
use super::pure::PureTripartite;
use super::report::{analyze, AnalysisConfig, CorrelationReport};
use crate::qstate::PureState;
use crate::{Error, Result};

/// Column order of sweep CSV output.
pub const SWEEP_HEADER: [&str; 12] = [
    "p", "family", "T", "J", "D", "T2", "T3", "J2", "J3", "D2", "D3", "tangle",
];

/// Crossover bracket width.
const CROSSOVER_TOL: f64 = 1e-4;
/// Discord differences at or below this count as "not exceeding".
const EXCEED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `√p |GHZ⟩ + √(1-p) |100⟩`.
    GhzTilde,
    /// `√p |W⟩ + √(1-p) |000⟩`.
    WTilde,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::GhzTilde, Family::WTilde];

    pub fn state(self, p: f64) -> Result<PureState> {
        match self {
            Family::GhzTilde => family_ghz_tilde(p),
            Family::WTilde => family_w_tilde(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::GhzTilde => "ghz_tilde",
            Family::WTilde => "w_tilde",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ghz_tilde" | "ghz" => Ok(Family::GhzTilde),
            "w_tilde" | "w" => Ok(Family::WTilde),
            _ => Err(Error::arg(format!(
                "unknown family {s:?}; expected ghz_tilde or w_tilde"
            ))),
        }
    }
}

/// Six-decimal rendering that never prints `-0.000000`.
pub fn fixed6(v: f64) -> String {
    if v.abs() < 5e-7 {
        "0.000000".to_string()
    } else {
        format!("{v:.6}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: f64,
    pub family: Family,
    pub report: CorrelationReport,
}

impl SweepRow {
    /// CSV fields in [`SWEEP_HEADER`] order, numbers with 6 decimals.
    pub fn record(&self) -> Vec<String> {
        let mut out = vec![fixed6(self.p), self.family.to_string()];
        out.extend(self.report.fields().iter().map(|(_, v)| fixed6(*v)));
        out.push(self.report.tangle.map(fixed6).unwrap_or_default());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    /// Ordered by `p`, then by family.
    pub rows: Vec<SweepRow>,
    /// Discord crossover, present when both families were swept and one was found.
    pub crossover: Option<f64>,
}

/// `p_min, p_min + step, …` up to `p_max` (inclusive within rounding).
pub fn p_grid(p_min: f64, p_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(0.0..=1.0).contains(&p_min) || !(0.0..=1.0).contains(&p_max) || p_min > p_max {
        return Err(Error::arg(format!(
            "need 0 ≤ p_min ≤ p_max ≤ 1, got {p_min}..{p_max}"
        )));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::arg("step must be positive"));
    }
    let n = ((p_max - p_min) / step + 1e-9).floor() as usize;
    Ok((0..=n)
        .map(|i| (p_min + i as f64 * step).min(p_max))
        .collect())
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if let Some(p) = grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::arg(format!("grid value {p} outside [0, 1]")));
    }
    Ok(())
}

/// Closed-form reports of one family along the grid.
pub fn sweep_family(family: Family, grid: &[f64]) -> Result<Vec<SweepRow>> {
    check_grid(grid)?;
    let cfg = AnalysisConfig {
        pure_only: true,
        ..Default::default()
    };
    grid.par_iter()
        .map(|&p| {
            Ok(SweepRow {
                p,
                family,
                report: analyze(&family.state(p)?.density(), &cfg)?,
            })
        })
        .collect()
}

/// Both families along the grid, with the discord crossover.
pub fn sweep_families(grid: &[f64]) -> Result<Sweep> {
    let ghz = sweep_family(Family::GhzTilde, grid)?;
    let w = sweep_family(Family::WTilde, grid)?;
    let rows = ghz.into_iter().zip(w).flat_map(|(a, b)| [a, b]).collect();
    Ok(Sweep {
        rows,
        crossover: discord_crossover(grid)?,
    })
}

fn discord_gap(p: f64) -> Result<f64> {
    let d = |f: Family| -> Result<f64> {
        Ok(PureTripartite::new(&f.state(p)?.density())?.total_discord())
    };
    Ok(d(Family::WTilde)? - d(Family::GhzTilde)?)
}

/// First grid point where the W-family discord starts exceeding the GHZ-family one,
/// refined by bisection on the bracketing interval.
pub fn discord_crossover(grid: &[f64]) -> Result<Option<f64>> {
    check_grid(grid)?;
    let gaps = grid
        .iter()
        .map(|&p| discord_gap(p))
        .collect::<Result<Vec<_>>>()?;
    let Some(i) = (1..grid.len()).find(|&i| gaps[i] > EXCEED_TOL && gaps[i - 1] <= EXCEED_TOL)
    else {
        return Ok(None);
    };
    let (mut lo, mut hi) = (grid[i - 1], grid[i]);
    while hi - lo > CROSSOVER_TOL {
        let mid = 0.5 * (lo + hi);
        if discord_gap(mid)? > EXCEED_TOL {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}
