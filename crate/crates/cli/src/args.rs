use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use qcorr::optimize::OptimizerConfig;

#[derive(Debug, Parser)]
#[command(
    name = "qcorr",
    version,
    about = "Total, bipartite and genuine correlations of few-qubit states"
)]
pub struct Cli {
    /// Output format (default: table for analyze and sweep summaries, json otherwise).
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Master seed for Monte-Carlo sampling.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Number of Monte-Carlo samples.
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Measurement grid as THETAxPHI intervals.
    #[arg(long, global = true, default_value = "60x120")]
    pub grid: Grid,

    /// Simplex refinement iterations after the grid scan.
    #[arg(long, global = true, default_value_t = 200)]
    pub refine_iters: usize,

    /// Simplex convergence tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn optimizer(&self) -> OptimizerConfig {
        OptimizerConfig {
            theta_steps: self.grid.theta,
            phi_steps: self.grid.phi,
            refine_iters: self.refine_iters,
            tol: self.tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub theta: usize,
    pub phi: usize,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (g, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected THETAxPHI, e.g. 60x120, got {s:?}"))?;
        let parse = |v: &str| match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("grid sizes must be positive integers, got {v:?}")),
        };
        Ok(Grid {
            theta: parse(g)?,
            phi: parse(h)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "ghz_tilde", alias = "ghz")]
    GhzTilde,
    #[value(name = "w_tilde", alias = "w")]
    WTilde,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Correlation report of a three-qubit state.
    Analyze {
        /// State or matrix JSON file, or a named state: ghz, w, product,
        /// ghz_tilde:p=<p>, w_tilde:p=<p>, acin:<l0>,<l1>,<l2>,<l3>,<l4>,<theta>.
        input: String,
        /// Require a pure state and use the closed forms only.
        #[arg(long)]
        pure_only: bool,
        /// Write the three two-qubit reductions as matrix files into this directory.
        #[arg(long, value_name = "DIR")]
        dump_reductions: Option<PathBuf>,
    },
    /// Correlations along the GHZ and W families; prints the discord crossover for `both`.
    Sweep {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(default_value_t = 0.0)]
        p_min: f64,
        #[arg(default_value_t = 1.0)]
        p_max: f64,
        #[arg(default_value_t = 0.01)]
        step: f64,
        /// CSV destination; without it the CSV goes to stdout and the summary to stderr.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo check of the correlation identities and inequalities on Haar-random pure states.
    Verify {
        /// Qubits per sample (3..=6).
        #[arg(long, default_value_t = 3)]
        qubits: usize,
        /// Also compare the measurement optimizer with the closed forms.
        #[arg(long)]
        oracle: bool,
    },
    /// Classical correlation and discord of a two-qubit density matrix.
    Discord2q {
        matrix_file: PathBuf,
        /// Party to measure (default: the second party).
        #[arg(long)]
        measured: Option<String>,
    },
}
