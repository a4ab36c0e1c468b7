//! Named three-qubit states: GHZ, W, their one-parameter families and the Acín form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::qstate::{default_labels, PureState, MAX_QUBITS};
use crate::{Error, Result};

const ACIN_NORM_TOL: f64 = 1e-10;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn state3(amps: [Complex64; 8]) -> PureState {
    PureState::new(default_labels(3), amps.to_vec()).expect("family states are normalized")
}

/// `(|000⟩ + |111⟩)/√2`.
pub fn ghz() -> PureState {
    ghz_n(3).expect("three qubits are in range")
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n` qubits.
pub fn ghz_n(n: usize) -> Result<PureState> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::arg(format!(
            "GHZ size must be in 2..={MAX_QUBITS}, got {n}"
        )));
    }
    let mut a = vec![re(0.0); 1 << n];
    a[0] = re(std::f64::consts::FRAC_1_SQRT_2);
    a[(1 << n) - 1] = re(std::f64::consts::FRAC_1_SQRT_2);
    PureState::new(default_labels(n), a)
}

/// `(|001⟩ + |010⟩ + |100⟩)/√3`.
pub fn w() -> PureState {
    let s = re(1.0 / 3f64.sqrt());
    let z = re(0.0);
    state3([z, s, s, z, s, z, z, z])
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::arg(format!(
            "family parameter p must lie in [0, 1], got {p}"
        )));
    }
    Ok(())
}

/// `√p |GHZ⟩ + √(1-p) |100⟩`.
pub fn family_ghz_tilde(p: f64) -> Result<PureState> {
    check_p(p)?;
    let g = (0.5 * p).sqrt();
    let z = re(0.0);
    Ok(state3([re(g), z, z, z, re((1.0 - p).sqrt()), z, z, re(g)]))
}

/// `√p |W⟩ + √(1-p) |000⟩`.
pub fn family_w_tilde(p: f64) -> Result<PureState> {
    check_p(p)?;
    let s = re((p / 3.0).sqrt());
    let z = re(0.0);
    Ok(state3([re((1.0 - p).sqrt()), s, s, z, s, z, z, z]))
}

/// `λ₀|000⟩ + λ₁e^{iθ}|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AcinForm {
    lambda: [f64; 5],
    theta: f64,
}

impl AcinForm {
    /// Requires nonnegative coefficients with `Σλ² = 1`; `θ` is wrapped into `[0, 2π)`.
    pub fn new(lambda: [f64; 5], theta: f64) -> Result<Self> {
        if lambda.iter().any(|l| !l.is_finite() || *l < 0.0) || !theta.is_finite() {
            return Err(Error::arg(
                "Acín coefficients must be finite and nonnegative",
            ));
        }
        let norm: f64 = lambda.iter().map(|l| l * l).sum();
        if (norm - 1.0).abs() > ACIN_NORM_TOL {
            return Err(Error::arg(format!(
                "Acín coefficients must satisfy Σλ² = 1, got {norm}"
            )));
        }
        Ok(Self {
            lambda,
            theta: theta.rem_euclid(std::f64::consts::TAU),
        })
    }

    /// Same, rescaling the coefficients to unit norm first.
    pub fn normalized(lambda: [f64; 5], theta: f64) -> Result<Self> {
        let norm: f64 = lambda.iter().map(|l| l * l).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::arg("Acín coefficients must not all vanish"));
        }
        Self::new(lambda.map(|l| l / norm), theta)
    }

    pub fn lambda(&self) -> [f64; 5] {
        self.lambda
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

pub fn acin_state(f: &AcinForm) -> PureState {
    let [l0, l1, l2, l3, l4] = f.lambda;
    let z = re(0.0);
    state3([
        re(l0),
        z,
        z,
        z,
        Complex64::from_polar(l1, f.theta),
        re(l2),
        re(l3),
        re(l4),
    ])
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::arg(format!("not a number: {s:?}")))
}

/// Looks up a named state.
///
/// Accepted names: `ghz`, `w`, `product` (`|000⟩`), `ghz_tilde:p=<p>`,
/// `w_tilde:p=<p>` and `acin:<λ₀>,<λ₁>,<λ₂>,<λ₃>,<λ₄>,<θ>`. Acín coefficients
/// are rescaled to unit norm.
pub fn named_state(name: &str) -> Result<PureState> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a.trim())),
        None => (name.trim(), None),
    };
    let param = |a: Option<&str>| -> Result<f64> {
        let a =
            a.ok_or_else(|| Error::arg(format!("{head} needs a parameter, e.g. {head}:p=0.8")))?;
        parse_num(a.strip_prefix("p=").unwrap_or(a))
    };
    match (head, args) {
        ("ghz", None) => Ok(ghz()),
        ("w", None) => Ok(w()),
        ("product", None) => PureState::basis(default_labels(3), 0),
        ("ghz_tilde", a) => family_ghz_tilde(param(a)?),
        ("w_tilde", a) => family_w_tilde(param(a)?),
        ("acin", Some(a)) => {
            let v = a.split(',').map(parse_num).collect::<Result<Vec<_>>>()?;
            if v.len() != 6 {
                return Err(Error::arg(format!(
                    "acin expects 6 numbers λ₀,…,λ₄,θ, got {}",
                    v.len()
                )));
            }
            let f = AcinForm::normalized([v[0], v[1], v[2], v[3], v[4]], v[5])?;
            Ok(acin_state(&f))
        }
        _ => Err(Error::arg(format!(
            "unknown state {name:?}; expected ghz, w, product, ghz_tilde:p=…, w_tilde:p=… or acin:λ₀,…,λ₄,θ"
        ))),
    }
}
