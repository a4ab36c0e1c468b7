use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use qcorr::bipartite::{
    classical_correlation_directional, discord_directional, mutual_information,
    symmetrized_classical, symmetrized_discord, DirectionalResult, Symmetrized,
};
use qcorr::io::{matrix_to_json, parse_any_json, parse_matrix_json};
use qcorr::optimize::OptimizerConfig;
use qcorr::tripartite::{
    analyze, fixed6, named_state, p_grid, sweep_families, sweep_family, AnalysisConfig,
    CorrelationReport, Family, SweepRow, PAIRS, SWEEP_HEADER,
};
use qcorr::verify::{oracle_crosscheck, run_suite, ViolationReport};
use qcorr::{DensityMatrix, Error, Result};

use crate::args::{Cli, Command, FamilyArg, Format};
use crate::exit;

/// Everything a command prints, emitted in one go at the end.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: exit::OK,
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => exit::IO,
        Error::Internal(_) => exit::INTERNAL,
        Error::InvalidState(_)
        | Error::InvalidArgument(_)
        | Error::Unsupported(_)
        | Error::Parse { .. } => exit::VALIDATION,
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cfg = cli.optimizer();
    cfg.validate()?;
    match &cli.command {
        Command::Analyze {
            input,
            pure_only,
            dump_reductions,
        } => analyze_cmd(cli, &cfg, input, *pure_only, dump_reductions.as_deref()),
        Command::Sweep {
            family,
            p_min,
            p_max,
            step,
            out,
        } => sweep_cmd(cli, *family, *p_min, *p_max, *step, out.as_deref()),
        Command::Verify { qubits, oracle } => verify_cmd(cli, &cfg, *qubits, *oracle),
        Command::Discord2q {
            matrix_file,
            measured,
        } => discord2q_cmd(cli, &cfg, matrix_file, measured.as_deref()),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

/// Writes through a sibling temporary file so readers never see a partial file.
fn write_atomically(path: &Path, contents: &[u8]) -> Result<()> {
    let name = path.file_name().ok_or_else(|| {
        Error::Io(std::io::Error::other(format!(
            "not a file path: {}",
            path.display()
        )))
    })?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

fn load_input(input: &str) -> Result<DensityMatrix> {
    let path = Path::new(input);
    if path.is_file() {
        return Ok(parse_any_json(&fs::read_to_string(path)?)?.density());
    }
    let looks_like_path = input.contains(['/', '\\']) || input.ends_with(".json");
    if looks_like_path {
        return Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("{input}: no such file"),
        )));
    }
    Ok(named_state(input)?.density())
}

fn analyze_cmd(
    cli: &Cli,
    cfg: &OptimizerConfig,
    input: &str,
    pure_only: bool,
    dump: Option<&Path>,
) -> Result<Output> {
    let rho = load_input(input)?;
    let acfg = AnalysisConfig {
        optimizer: *cfg,
        pure_only,
        ..Default::default()
    };
    let report = analyze(&rho, &acfg)?;
    if let Some(dir) = dump {
        fs::create_dir_all(dir)?;
        let p = rho.parties();
        for (i, j) in PAIRS {
            let pair = rho.partial_trace(&[&p[i], &p[j]])?;
            let mut text = matrix_to_json(&pair);
            text.push('\n');
            write_atomically(
                &dir.join(format!("rho_{}{}.json", p[i], p[j])),
                text.as_bytes(),
            )?;
        }
    }
    let stdout = match cli.format.unwrap_or(Format::Table) {
        Format::Json => json(&report),
        Format::Csv => report_csv(&report),
        Format::Table => report_table(input, &report),
    };
    Ok(Output::ok(stdout))
}

fn fmt_tangle(t: Option<f64>) -> String {
    t.map(fixed6).unwrap_or_default()
}

fn report_csv(r: &CorrelationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = r.fields().iter().map(|(n, _)| *n).collect();
    header.push("tangle");
    let mut row: Vec<String> = r.fields().iter().map(|(_, v)| fixed6(*v)).collect();
    row.push(fmt_tangle(r.tangle));
    w.write_record(&header)
        .and_then(|_| w.write_record(&row))
        .expect("in-memory CSV");
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
}

fn triple(v: [f64; 3]) -> String {
    v.map(fixed6).join("  ")
}

fn report_table(input: &str, r: &CorrelationReport) -> String {
    let l = &r.labels;
    let pairs = PAIRS.map(|(i, j)| format!("{}{}", l[i], l[j])).join("  ");
    let mut s = String::new();
    let _ = writeln!(s, "state        {input}");
    let _ = writeln!(
        s,
        "method       {}",
        if r.pure {
            "closed-form (pure)"
        } else {
            "optimizer (mixed, lower bounds)"
        }
    );
    let _ = writeln!(s, "ordering     {}", r.ordering.labels.join(" > "));
    for (name, v) in r.fields() {
        let _ = writeln!(s, "{name:<12} {}", fixed6(v));
    }
    let _ = writeln!(
        s,
        "{:<12} {}",
        "tangle",
        r.tangle.map(fixed6).unwrap_or("n/a".into())
    );
    let _ = writeln!(s, "S_i          {}", triple(r.single_entropies));
    let _ = writeln!(s, "pairs        {pairs}");
    let _ = writeln!(s, "I_ij         {}", triple(r.pairwise_mutual));
    let _ = writeln!(s, "J_ij         {}", triple(r.pairwise_classical));
    let _ = writeln!(s, "D_ij         {}", triple(r.pairwise_discord));
    let _ = writeln!(s, "I(ij,k)      {}", triple(r.cut_mutual));
    s
}

#[derive(Serialize)]
struct SweepSummary {
    families: Vec<Family>,
    points: usize,
    rows: usize,
    crossover: Option<f64>,
}

fn sweep_cmd(
    cli: &Cli,
    family: FamilyArg,
    p_min: f64,
    p_max: f64,
    step: f64,
    out: Option<&Path>,
) -> Result<Output> {
    let grid = p_grid(p_min, p_max, step)?;
    let (rows, crossover, families): (Vec<SweepRow>, _, _) = match family {
        FamilyArg::Both => {
            let s = sweep_families(&grid)?;
            (s.rows, s.crossover, Family::ALL.to_vec())
        }
        FamilyArg::GhzTilde => (
            sweep_family(Family::GhzTilde, &grid)?,
            None,
            vec![Family::GhzTilde],
        ),
        FamilyArg::WTilde => (
            sweep_family(Family::WTilde, &grid)?,
            None,
            vec![Family::WTilde],
        ),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER).expect("in-memory CSV");
    for r in &rows {
        w.write_record(r.record()).expect("in-memory CSV");
    }
    let csv_bytes = w.into_inner().expect("in-memory CSV");

    let summary = SweepSummary {
        families,
        points: grid.len(),
        rows: rows.len(),
        crossover,
    };
    let summary_text = match cli.format {
        Some(Format::Json) => json(&summary),
        _ => {
            let mut s = String::new();
            let names: Vec<&str> = summary.families.iter().map(|f| f.name()).collect();
            let _ = writeln!(s, "families     {}", names.join(", "));
            let _ = writeln!(s, "points       {}", summary.points);
            let _ = writeln!(s, "rows         {}", summary.rows);
            if family == FamilyArg::Both {
                match crossover {
                    Some(p) => {
                        let _ = writeln!(s, "crossover    p* = {p:.6}");
                    }
                    None => {
                        let _ = writeln!(s, "crossover    none on this grid");
                    }
                }
            }
            s
        }
    };
    Ok(match out {
        Some(path) => {
            write_atomically(path, &csv_bytes)?;
            Output::ok(summary_text)
        }
        None => Output {
            stdout: String::from_utf8(csv_bytes).expect("CSV is UTF-8"),
            stderr: summary_text,
            code: exit::OK,
        },
    })
}

fn verify_table(r: &ViolationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "seed {}  samples {}  qubits {}",
        r.seed, r.n_samples, r.n_qubits
    );
    let _ = writeln!(
        s,
        "{:<40} {:>9} {:>9} {:>10} {:>13}",
        "check", "checked", "violated", "tolerance", "worst"
    );
    for c in &r.checks {
        let worst = c
            .worst_margin
            .map(|m| format!("{m:.3e}"))
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(
            s,
            "{:<40} {:>9} {:>9} {:>10.0e} {:>13}",
            c.name, c.count_checked, c.count_violated, c.tolerance, worst
        );
    }
    for t in &r.exploratory {
        let _ = writeln!(
            s,
            "exploratory {}: {}/{} consistent",
            t.name, t.count_consistent, t.count_checked
        );
    }
    let _ = writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" });
    s
}

fn verify_cmd(cli: &Cli, cfg: &OptimizerConfig, qubits: usize, oracle: bool) -> Result<Output> {
    if oracle && qubits != 3 {
        return Err(Error::InvalidArgument(
            "--oracle compares against three-qubit closed forms; use --qubits 3".into(),
        ));
    }
    let mut report = run_suite(cli.samples, cli.seed, qubits)?;
    if oracle {
        report = report.merge(oracle_crosscheck(cli.samples, cli.seed, cfg)?);
    }
    let stdout = match cli.format {
        Some(Format::Table) => verify_table(&report),
        _ => json(&report),
    };
    let violated: u64 = report.checks.iter().map(|c| c.count_violated).sum();
    Ok(Output {
        stdout,
        stderr: format!(
            "{} checks, {violated} violations, {:.2}s\n",
            report.checks.len(),
            report.elapsed.as_secs_f64()
        ),
        code: if report.passed() {
            exit::OK
        } else {
            exit::VIOLATIONS
        },
    })
}

#[derive(Serialize)]
struct Discord2q {
    parties: Vec<String>,
    mutual_information: f64,
    classical_correlation: DirectionalResult,
    discord: DirectionalResult,
    symmetrized_classical: Symmetrized,
    symmetrized_discord: Symmetrized,
}

fn discord2q_cmd(
    cli: &Cli,
    cfg: &OptimizerConfig,
    file: &Path,
    measured: Option<&str>,
) -> Result<Output> {
    let rho = parse_matrix_json(&fs::read_to_string(file)?)?;
    if rho.n_parties() != 2 {
        return Err(Error::InvalidArgument(format!(
            "discord2q needs a two-qubit matrix, got parties {:?}",
            rho.parties()
        )));
    }
    let measured = measured.unwrap_or(&rho.parties()[1]).to_string();
    rho.party_index(&measured)?;
    let out = Discord2q {
        parties: rho.parties().to_vec(),
        mutual_information: mutual_information(&rho)?,
        classical_correlation: classical_correlation_directional(&rho, &measured, cfg)?,
        discord: discord_directional(&rho, &measured, cfg)?,
        symmetrized_classical: symmetrized_classical(&rho, cfg)?,
        symmetrized_discord: symmetrized_discord(&rho, cfg)?,
    };
    let stdout = match cli.format {
        Some(Format::Table) => {
            let mut s = String::new();
            let _ = writeln!(s, "parties      {}", out.parties.join(" "));
            let _ = writeln!(s, "measured     {measured}");
            let _ = writeln!(s, "I            {}", fixed6(out.mutual_information));
            let _ = writeln!(
                s,
                "J            {}",
                fixed6(out.classical_correlation.value)
            );
            let _ = writeln!(s, "discord      {}", fixed6(out.discord.value));
            let b = out.discord.optimal_basis;
            let _ = writeln!(
                s,
                "basis        theta {}  phi {}",
                fixed6(b.theta),
                fixed6(b.phi)
            );
            let _ = writeln!(
                s,
                "J sym        {}",
                fixed6(out.symmetrized_classical.value)
            );
            let _ = writeln!(s, "discord sym  {}", fixed6(out.symmetrized_discord.value));
            s
        }
        _ => json(&out),
    };
    Ok(Output::ok(stdout))
}
