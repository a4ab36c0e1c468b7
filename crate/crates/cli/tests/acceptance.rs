//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p qcorr-cli --test acceptance`. The process exits
//! non-zero only on an unexpected failure; a criterion that fails because the
//! stated inequality itself does not hold is reported as FAIL together with the
//! independent evidence, and does not abort the run.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qcorr::bipartite::symmetrized_discord;
use qcorr::bipartite::MeasurementBasis;
use qcorr::optimize::OptimizerConfig;
use qcorr::random::{haar_random_pure, rng_from_seed};
use qcorr::tripartite::{
    acin_state, canonical_ordering, double_conditional_entropy, genuine_qc_n, genuine_total,
    genuine_total_n, ghz, ghz_n, min_double_conditional_entropy, p_grid, sweep_families,
    three_tangle, AcinForm, DoubleConfig, Family,
};
use qcorr::DensityMatrix;
use rand::Rng;
use serde_json::Value;

enum Verdict {
    Pass(String),
    /// The implementation is correct but the stated property does not hold.
    KnownFail(String),
    Fail(String),
}

fn qcorr(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qcorr"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, elapsed)
}

fn field(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or(f64::NAN)
}

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn binary_entropy(x: f64) -> f64 {
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

fn ghz_extremal() -> Verdict {
    let (code, r, t) = qcorr(&["--format", "json", "analyze", "ghz"]);
    let d3 = field(&r, "D3");
    verdict(
        code == 0 && (d3 - 1.0).abs() < 1e-9 && t < Duration::from_secs(1),
        format!("GHZ D3 = {d3:.12} (target 1 ± 1e-9), {t:.2?}"),
    )
}

fn w_extremal() -> Verdict {
    let (code, r, t) = qcorr(&["--format", "json", "analyze", "w"]);
    let d3 = field(&r, "D3");
    let h = binary_entropy(1.0 / 3.0);
    verdict(
        code == 0
            && (d3 - 0.918).abs() < 1e-3
            && (d3 - h).abs() < 1e-9
            && t < Duration::from_secs(1),
        format!("W D3 = {d3:.9}, h(1/3) = {h:.9}, {t:.2?}"),
    )
}

fn crossover() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qcorr"))
        .args(["--format", "json", "sweep", "both", "0", "1", "0.01"])
        .output()
        .expect("binary runs");
    let t = start.elapsed();
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap_or(Value::Null);
    let p = field(&summary, "crossover");
    verdict(
        out.status.success() && (0.70..=0.80).contains(&p) && t < Duration::from_secs(30),
        format!("discord crossover p* = {p:.6}, {t:.2?}"),
    )
}

fn family_ordering() -> Verdict {
    let grid = p_grid(0.0, 1.0, 0.01).unwrap();
    let sweep = sweep_families(&grid).unwrap();
    let mut bad = Vec::new();
    for pair in sweep.rows.chunks(2) {
        let (g, w) = (&pair[0], &pair[1]);
        assert_eq!((g.family, w.family), (Family::GhzTilde, Family::WTilde));
        let (gr, wr) = (&g.report, &w.report);
        if wr.discord < wr.classical - 1e-9
            || gr.classical < gr.discord - 1e-9
            || gr.total < wr.total - 1e-9
            || gr.discord_genuine < wr.discord_genuine - 1e-9
        {
            bad.push(g.p);
        }
    }
    verdict(
        bad.is_empty(),
        format!("{} grid points, ordering broken at {bad:?}", grid.len()),
    )
}

/// Recomputes pairwise discords with the measurement optimizer and returns the
/// margin `max(D_ac, D_bc) - D_ab` for the dominant pair `(a, b)`.
fn optimizer_discord_margin(seed: u64) -> f64 {
    let rho = haar_random_pure(3, seed).unwrap().density();
    let order = canonical_ordering(&rho).unwrap();
    let [a, b, c] = order.labels.clone();
    let cfg = OptimizerConfig::default();
    let d = |x: &str, y: &str| -> f64 {
        let (x, y) = if rho.party_index(x).unwrap() < rho.party_index(y).unwrap() {
            (x, y)
        } else {
            (y, x)
        };
        symmetrized_discord(&rho.partial_trace(&[x, y]).unwrap(), &cfg)
            .unwrap()
            .value
    };
    d(&a, &c).max(d(&b, &c)) - d(&a, &b)
}

fn identity_suite() -> Verdict {
    let (code, r, t) = qcorr(&[
        "--format",
        "json",
        "--samples",
        "1000",
        "verify",
        "--qubits",
        "3",
    ]);
    let checks = r["checks"].as_array().cloned().unwrap_or_default();
    let wanted = [
        "genuine_total_relative_entropy",
        "entropy_eof_chain",
        "classical_ladder",
        "dominant_discord_max",
        "ckw_identity",
        "monogamy",
        "decomposition_total",
        "decomposition_differences",
        "genuine_equalities",
    ];
    let mut lines = Vec::new();
    let mut others_clean = checks.len() > 0;
    let mut discord_violations = 0;
    for name in wanted {
        let Some(c) = checks.iter().find(|c| c["name"] == name) else {
            return Verdict::Fail(format!("check {name} missing from verify output"));
        };
        let v = c["count_violated"].as_u64().unwrap_or(u64::MAX);
        lines.push(format!("{name}={v}"));
        if name == "dominant_discord_max" {
            discord_violations = v;
        } else if v != 0 {
            others_clean = false;
        }
    }
    let timing_ok = t < Duration::from_secs(120);
    let summary = format!("{}; {t:.2?}", lines.join(" "));
    if !others_clean || !timing_ok || code == 1 || code == 2 || code == 3 {
        return Verdict::Fail(summary);
    }
    if discord_violations == 0 {
        return Verdict::Pass(summary);
    }
    // each discord-max violation must be reproduced by the measurement optimizer
    let failures = r["failures"].as_array().cloned().unwrap_or_default();
    let mut confirmed = Vec::new();
    for f in failures
        .iter()
        .filter(|f| f["check"] == "dominant_discord_max")
    {
        let seed = f["seed"].as_u64().unwrap();
        let margin = optimizer_discord_margin(seed);
        if margin <= 1e-8 {
            return Verdict::Fail(format!(
                "{summary}; seed {seed} not reproduced by the optimizer (margin {margin:.3e})"
            ));
        }
        confirmed.push(format!("{margin:.2e}"));
    }
    if confirmed.len() as u64 != discord_violations {
        return Verdict::Fail(format!("{summary}; failure list incomplete"));
    }
    Verdict::KnownFail(format!(
        "{summary}; D(ρ_ab) ≥ max[D(ρ_ac), D(ρ_bc)] is false on these samples, \
         confirmed by the measurement optimizer with margins [{}]",
        confirmed.join(", ")
    ))
}

fn oracle_equivalence() -> Verdict {
    let (_, r, t) = qcorr(&["--format", "json", "--samples", "200", "verify", "--oracle"]);
    let checks = r["checks"].as_array().cloned().unwrap_or_default();
    let mut lines = Vec::new();
    let mut ok = t < Duration::from_secs(600);
    for name in ["oracle_classical", "oracle_discord"] {
        match checks.iter().find(|c| c["name"] == name) {
            Some(c) => {
                let v = c["count_violated"].as_u64().unwrap_or(u64::MAX);
                let n = c["count_checked"].as_u64().unwrap_or(0);
                ok &= v == 0 && n > 0;
                let worst = c["worst_margin"]
                    .as_f64()
                    .map_or("every difference < 1e-4".to_string(), |m| {
                        format!("worst {m:.2e}")
                    });
                lines.push(format!("{name}: {v} violations in {n} samples, {worst}"));
            }
            None => {
                ok = false;
                lines.push(format!("{name} missing"));
            }
        }
    }
    verdict(ok, format!("{}; {t:.2?}", lines.join(", ")))
}

fn three_tangle_checks() -> Verdict {
    let tau_ghz = three_tangle(&ghz().density()).unwrap();
    let mut rng = rng_from_seed(2024);
    let mut worst_w = 0.0_f64;
    for _ in 0..100 {
        let l: [f64; 5] = std::array::from_fn(|i| if i == 4 { 0.0 } else { rng.random::<f64>() });
        let form = AcinForm::normalized(l, rng.random::<f64>() * std::f64::consts::TAU).unwrap();
        worst_w = worst_w.max(three_tangle(&acin_state(&form).density()).unwrap().abs());
    }
    let mut worst_perm = 0.0_f64;
    let perms = [
        ["a", "c", "b"],
        ["b", "a", "c"],
        ["b", "c", "a"],
        ["c", "a", "b"],
        ["c", "b", "a"],
    ];
    for seed in 0..100 {
        let rho: DensityMatrix = haar_random_pure(3, 7000 + seed).unwrap().density();
        let base = three_tangle(&rho).unwrap();
        for p in &perms {
            let moved = three_tangle(&rho.reorder(p).unwrap()).unwrap();
            worst_perm = worst_perm.max((moved - base).abs());
        }
    }
    verdict(
        (tau_ghz - 1.0).abs() < 1e-9 && worst_w < 1e-8 && worst_perm < 1e-8,
        format!("τ(GHZ) = {tau_ghz:.12}, max τ on λ₄=0 = {worst_w:.2e}, max permutation change = {worst_perm:.2e}"),
    )
}

fn random_basis(rng: &mut impl Rng) -> MeasurementBasis {
    MeasurementBasis::new(
        rng.random::<f64>() * std::f64::consts::PI,
        rng.random::<f64>() * std::f64::consts::TAU,
    )
}

fn double_measurement() -> Verdict {
    let cfg = DoubleConfig::default();
    let mut rng = rng_from_seed(99);
    let mut worst_min = 0.0_f64;
    let mut worst_random = 0.0_f64;
    for seed in 0..100 {
        let rho = haar_random_pure(3, 9000 + seed).unwrap().density();
        for k in ["a", "b", "c"] {
            worst_min = worst_min.max(min_double_conditional_entropy(&rho, k, &cfg).unwrap().value);
        }
        // any pair of local projective measurements leaves the third party pure
        let (b1, b2) = (random_basis(&mut rng), random_basis(&mut rng));
        worst_random = worst_random.max(double_conditional_entropy(&rho, "c", [&b1, &b2]).unwrap());
    }
    verdict(
        worst_min < 1e-6 && worst_random < 1e-6,
        format!("max minimum = {worst_min:.2e}, max at random local bases = {worst_random:.2e}"),
    )
}

fn n_partite() -> Verdict {
    let rho4 = ghz_n(4).unwrap().density();
    let t = genuine_total_n(&rho4).unwrap();
    let q = genuine_qc_n(&rho4).unwrap();
    let mut worst = 0.0_f64;
    for seed in 0..1000 {
        let rho = haar_random_pure(3, 11_000 + seed).unwrap().density();
        worst = worst.max((genuine_total_n(&rho).unwrap() - genuine_total(&rho).unwrap()).abs());
    }
    verdict(
        (t - 2.0).abs() < 1e-9 && (q - 1.0).abs() < 1e-9 && worst < 1e-9,
        format!("4-qubit GHZ: genuine total = {t:.12}, genuine quantum = {q:.12}; 3-qubit agreement within {worst:.2e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("GHZ extremal value", ghz_extremal),
        ("W extremal value", w_extremal),
        ("discord crossover", crossover),
        ("family ordering", family_ordering),
        ("identity and inequality suite", identity_suite),
        ("oracle equivalence", oracle_equivalence),
        ("three-tangle", three_tangle_checks),
        ("pure-state double measurement", double_measurement),
        ("n-partite extension", n_partite),
    ];
    let (mut pass, mut known, mut fail) = (0, 0, 0);
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Verdict::Pass(d) => {
                pass += 1;
                println!("criterion {} [{name}]: PASS  {d}", i + 1);
            }
            Verdict::KnownFail(d) => {
                known += 1;
                println!("criterion {} [{name}]: FAIL  {d}", i + 1);
            }
            Verdict::Fail(d) => {
                fail += 1;
                println!("criterion {} [{name}]: FAIL  {d}", i + 1);
            }
        }
    }
    println!("acceptance: {pass} passed, {} failed ({known} with independently confirmed counterexamples)", known + fail);
    if fail > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
