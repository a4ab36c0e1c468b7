//! Correlation measures for few-qubit quantum states.
//!
//! The crate computes mutual information, classical correlations and quantum
//! discord of two-qubit states, and the total, bipartite and genuine
//! tripartite splits of those quantities for three-qubit states:
//!
//! - [`qstate`]: labeled pure states and density matrices, partial traces,
//!   spectra, von Neumann and relative entropies, Haar sampling.
//! - [`bipartite`]: concurrence, entanglement of formation, measured
//!   conditional entropies and the projective-measurement optimizer, plus the
//!   Koashi–Winter closed forms for reductions of pure tripartite states.
//! - [`tripartite`]: total information, the genuine quantifiers, pure-state
//!   closed forms, three-tangle, named state families and parameter sweeps.
//! - [`verify`]: Monte-Carlo falsification of the inequalities and identities
//!   relating those quantities.
//!
//! All entropies are in bits.

pub mod bipartite;
pub mod error;
pub mod io;
mod linalg;
pub mod optimize;
pub mod qstate;
pub mod random;
pub mod tripartite;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::CMatrix;
pub use num_complex::Complex64;
pub use qstate::{DensityMatrix, PureState, Spectrum};
