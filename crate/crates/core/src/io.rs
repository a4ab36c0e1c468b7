//! JSON file formats for pure states and density matrices.
//!
//! State file: `{"n": 3, "labels": ["a","b","c"], "amplitudes": [[re, im], ...]}`
//! with `2^n` amplitude pairs in the register's basis order.
//!
//! Matrix file: `{"parties": ["a","b"], "matrix": [[[re, im], ...], ...]}`,
//! row-major.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::CMatrix;
use crate::qstate::{default_labels, DensityMatrix, PureState};
use crate::{Error, Result};

/// Largest norm deviation accepted when reading a state file.
pub const FILE_NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub parties: Vec<String>,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

/// Byte offset of a serde_json error, from its 1-based line/column.
fn byte_offset(text: &str, err: &serde_json::Error) -> usize {
    let (line, col) = (err.line(), err.column());
    if line == 0 {
        return 0;
    }
    let start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (start + col.saturating_sub(1)).min(text.len())
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, &e),
        message: e.to_string(),
    })
}

impl StateFile {
    pub fn into_state(self) -> Result<PureState> {
        let labels = self.labels.unwrap_or_else(|| default_labels(self.n));
        if labels.len() != self.n {
            return Err(Error::state(format!(
                "n = {} but {} labels given",
                self.n,
                labels.len()
            )));
        }
        let expected = 1usize.checked_shl(self.n as u32).unwrap_or(0);
        if self.amplitudes.len() != expected {
            return Err(Error::state(format!(
                "expected {expected} amplitudes for n = {}, got {}",
                self.n,
                self.amplitudes.len()
            )));
        }
        let amps: Vec<Complex64> = self
            .amplitudes
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > FILE_NORM_TOL {
            return Err(Error::state(format!(
                "state norm is {norm}, deviates from 1 by more than {FILE_NORM_TOL:e}"
            )));
        }
        PureState::normalized(labels, amps)
    }

    pub fn from_state(psi: &PureState) -> Self {
        StateFile {
            n: psi.n_qubits(),
            labels: Some(psi.labels().to_vec()),
            amplitudes: psi.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl MatrixFile {
    pub fn into_density(self) -> Result<DensityMatrix> {
        let dim = self.matrix.len();
        if self.matrix.iter().any(|row| row.len() != dim) {
            return Err(Error::state("matrix rows have inconsistent lengths"));
        }
        let m = CMatrix::from_fn(dim, dim, |r, c| {
            let [re, im] = self.matrix[r][c];
            Complex64::new(re, im)
        });
        DensityMatrix::new(self.parties, m)
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        MatrixFile {
            parties: rho.parties().to_vec(),
            matrix: (0..m.nrows())
                .map(|r| {
                    (0..m.ncols())
                        .map(|c| [m[(r, c)].re, m[(r, c)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn parse_state_json(text: &str) -> Result<PureState> {
    parse::<StateFile>(text)?.into_state()
}

pub fn parse_matrix_json(text: &str) -> Result<DensityMatrix> {
    parse::<MatrixFile>(text)?.into_density()
}

pub fn state_to_json(psi: &PureState) -> String {
    serde_json::to_string_pretty(&StateFile::from_state(psi)).expect("state serializes")
}

pub fn matrix_to_json(rho: &DensityMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_density(rho)).expect("matrix serializes")
}

/// Either input format, distinguished by its keys.
#[derive(Debug, Clone)]
pub enum StateInput {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl StateInput {
    pub fn density(&self) -> DensityMatrix {
        match self {
            StateInput::Pure(psi) => psi.density(),
            StateInput::Mixed(rho) => rho.clone(),
        }
    }
}

/// Parses a state file or a matrix file.
pub fn parse_any_json(text: &str) -> Result<StateInput> {
    let value: serde_json::Value = parse(text)?;
    if value.get("matrix").is_some() {
        parse_matrix_json(text).map(StateInput::Mixed)
    } else {
        parse_state_json(text).map(StateInput::Pure)
    }
}
