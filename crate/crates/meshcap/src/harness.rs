//! Experiment harness: a flat `key = value` config format, a seeded
//! size-by-replication sweep runner with a worker pool, per-size statistics,
//! CSV/text report emission, and the `meshcap` CLI entry point.
//!
//! Reproducibility contract: replication r of any size uses seed
//! `base_seed + r`, and the pairing/rate draws use fixed sub-streams of that
//! seed, so two configs differing only in the scheduling scheme see identical
//! traffic and the execution order of workers never changes any output byte.

use crate::engine::{
    run_conventional, EnginePolicy, Scheme, SimReport, SinrMode,
};
use crate::grid::Grid;
use crate::partition::{plan_partition, run_two_phase, PartitionStrategy};
use crate::phy::{self, PhyParams, SlotSchedule};
use crate::scaling::{box_stats, ci95, fit_loglog, BoundScheme, BoxStats, Ci95, KahanSum, ScalingFit};
use crate::traffic::{
    build_sessions, rates_heavy_tailed, rates_homogeneous, rates_one_dissimilar, sample_pairing,
    RateVector,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("config line has no `=`: `{0}`")]
    BadLine(String),
    #[error("missing required config key `{0}`")]
    MissingKey(&'static str),
    #[error("bad value for `{key}`: `{value}` ({why})")]
    BadValue { key: String, value: String, why: String },
    #[error("inconsistent scheme parameters: {0}")]
    SchemeMismatch(String),
    #[error("MESHCAP_THREADS must be a non-negative integer, got `{0}`")]
    BadThreads(String),
    #[error("cannot read config {path}: {source}")]
    ConfigRead { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("simulation failed at L={size}, seed {seed}: {message}")]
    Sim { size: usize, seed: u64, message: String },
    #[error("{0}")]
    BadCliArg(String),
}

impl HarnessError {
    /// Exit code contract: 1 for input/validation problems, 2 for runtime
    /// failures (output I/O, simulation blow-ups).
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Io { .. } | HarnessError::Sim { .. } => 2,
            _ => 1,
        }
    }
}

/// Which rate vector each replication draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrafficPattern {
    Homogeneous,
    OneDissimilar,
    HeavyTailed,
}

/// A parsed, validated experiment description. Built by `parse_config`;
/// `emit_config` renders the canonical text form (round-trips exactly).
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Grid side lengths; each size L simulates an L x L grid.
    pub sizes: Vec<usize>,
    pub pattern: TrafficPattern,
    pub scheduling: Scheme,
    pub g_exponent: Option<f64>,
    pub alpha: Option<f64>,
    pub base_packets: u64,
    pub replications: usize,
    pub base_seed: u64,
    pub phy: PhyParams,
    pub spacing: f64,
    pub sinr_mode: SinrMode,
    /// Two-phase split override; `None` picks OptimalHeavyTail for
    /// heavy-tailed traffic and SingleOutlier otherwise.
    pub partition: Option<PartitionStrategy>,
    pub max_slots: u64,
    pub output_dir: PathBuf,
}

pub const CONFIG_KEYS: &[&str] = &[
    "sizes", "scheme", "g_exponent", "alpha", "base_packets", "replications", "base_seed",
    "power", "noise", "beta", "gamma", "spacing", "sinr_mode", "partition", "max_slots",
    "output_dir",
];

fn bad(key: &str, value: &str, why: impl Into<String>) -> HarnessError {
    HarnessError::BadValue { key: key.into(), value: value.into(), why: why.into() }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, HarnessError> {
    let v: f64 = value.parse().map_err(|_| bad(key, value, "not a number"))?;
    if !v.is_finite() {
        return Err(bad(key, value, "must be finite"));
    }
    Ok(v)
}

fn parse_u64(key: &str, value: &str) -> Result<u64, HarnessError> {
    value.parse().map_err(|_| bad(key, value, "not a non-negative integer"))
}

/// Parses the line-oriented `key = value` config dialect. `#` starts a
/// comment anywhere on a line; blank lines are skipped; a key given twice
/// keeps its last value.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, HarnessError> {
    let mut kv: Vec<(String, String)> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) =
            line.split_once('=').ok_or_else(|| HarnessError::BadLine(line.to_string()))?;
        let key = key.trim().to_string();
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(HarnessError::UnknownKey(key));
        }
        kv.push((key, value.trim().to_string()));
    }
    let get = |key: &str| kv.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str());

    let sizes_raw = get("sizes").ok_or(HarnessError::MissingKey("sizes"))?;
    let mut sizes = Vec::new();
    for tok in sizes_raw.split(',') {
        let tok = tok.trim();
        let l: usize = tok.parse().map_err(|_| bad("sizes", tok, "not an integer"))?;
        if l < 2 {
            return Err(bad("sizes", tok, "grid side must be at least 2"));
        }
        if sizes.contains(&l) {
            return Err(bad("sizes", tok, "duplicate size"));
        }
        sizes.push(l);
    }
    if sizes.is_empty() {
        return Err(bad("sizes", sizes_raw, "need at least one size"));
    }

    let scheme_raw = get("scheme").ok_or(HarnessError::MissingKey("scheme"))?;
    let (pat, sched) = scheme_raw
        .split_once('/')
        .ok_or_else(|| bad("scheme", scheme_raw, "expected <pattern>/<scheduling>"))?;
    let pattern = match pat.trim() {
        "homogeneous" => TrafficPattern::Homogeneous,
        "one-dissimilar" => TrafficPattern::OneDissimilar,
        "heavy-tailed" => TrafficPattern::HeavyTailed,
        other => return Err(bad("scheme", other, "pattern must be homogeneous | one-dissimilar | heavy-tailed")),
    };
    let scheduling = match sched.trim() {
        "conventional" => Scheme::Conventional,
        "two-phase" => Scheme::TwoPhase,
        other => return Err(bad("scheme", other, "scheduling must be conventional | two-phase")),
    };

    let g_exponent = get("g_exponent").map(|v| parse_f64("g_exponent", v)).transpose()?;
    let alpha = get("alpha").map(|v| parse_f64("alpha", v)).transpose()?;
    match pattern {
        TrafficPattern::Homogeneous => {
            if g_exponent.is_some() || alpha.is_some() {
                return Err(HarnessError::SchemeMismatch(
                    "homogeneous traffic takes neither g_exponent nor alpha".into(),
                ));
            }
        }
        TrafficPattern::OneDissimilar => {
            if alpha.is_some() {
                return Err(HarnessError::SchemeMismatch(
                    "alpha applies to heavy-tailed traffic only".into(),
                ));
            }
            let g = g_exponent.ok_or(HarnessError::SchemeMismatch(
                "one-dissimilar traffic requires g_exponent".into(),
            ))?;
            if !(g > 0.0 && g < 1.0) {
                return Err(bad("g_exponent", &g.to_string(), "must lie in (0, 1)"));
            }
        }
        TrafficPattern::HeavyTailed => {
            if g_exponent.is_some() {
                return Err(HarnessError::SchemeMismatch(
                    "g_exponent applies to one-dissimilar traffic only".into(),
                ));
            }
            let a = alpha.ok_or(HarnessError::SchemeMismatch(
                "heavy-tailed traffic requires alpha".into(),
            ))?;
            if !(a > 1.0) {
                return Err(bad("alpha", &a.to_string(), "tail index must exceed 1"));
            }
        }
    }

    let base_packets = get("base_packets").map(|v| parse_u64("base_packets", v)).transpose()?.unwrap_or(100);
    if base_packets == 0 {
        return Err(bad("base_packets", "0", "must be positive"));
    }
    let replications = get("replications")
        .map(|v| parse_u64("replications", v).map(|x| x as usize))
        .transpose()?
        .unwrap_or(200);
    if replications == 0 {
        return Err(bad("replications", "0", "must be at least 1"));
    }
    let base_seed = get("base_seed").map(|v| parse_u64("base_seed", v)).transpose()?.unwrap_or(0);

    let mut phy = PhyParams::default();
    if let Some(v) = get("power") {
        phy.power = parse_f64("power", v)?;
    }
    if let Some(v) = get("noise") {
        phy.noise = parse_f64("noise", v)?;
    }
    if let Some(v) = get("beta") {
        phy.beta = parse_f64("beta", v)?;
    }
    if let Some(v) = get("gamma") {
        phy.gamma = parse_f64("gamma", v)?;
    }
    if phy.validate().is_err() {
        return Err(bad("power/noise/beta/gamma", "", "physical parameters must be positive"));
    }
    let spacing = get("spacing").map(|v| parse_f64("spacing", v)).transpose()?.unwrap_or(1.0);
    if !(spacing > 0.0) {
        return Err(bad("spacing", &spacing.to_string(), "must be positive"));
    }

    let sinr_mode = match get("sinr_mode") {
        None => SinrMode::AssumedSuccess,
        Some("assumed") => SinrMode::AssumedSuccess,
        Some("verified") => SinrMode::Verified,
        Some(other) => return Err(bad("sinr_mode", other, "must be assumed | verified")),
    };

    let partition = match get("partition") {
        None => None,
        Some(v) => {
            if scheduling != Scheme::TwoPhase {
                return Err(HarnessError::SchemeMismatch(
                    "partition strategy requires two-phase scheduling".into(),
                ));
            }
            Some(match v {
                "single-outlier" => PartitionStrategy::SingleOutlier,
                "optimal" => {
                    let a = alpha.ok_or(HarnessError::SchemeMismatch(
                        "partition = optimal needs heavy-tailed traffic (alpha)".into(),
                    ))?;
                    PartitionStrategy::OptimalHeavyTail { alpha: a }
                }
                "sweep" => PartitionStrategy::SweepEmpirical,
                other => {
                    let m = other
                        .strip_prefix("fixed:")
                        .ok_or_else(|| bad("partition", other, "must be single-outlier | optimal | sweep | fixed:<m>"))?;
                    PartitionStrategy::FixedM(
                        m.parse().map_err(|_| bad("partition", other, "fixed:<m> needs an integer"))?,
                    )
                }
            })
        }
    };

    let max_slots = get("max_slots").map(|v| parse_u64("max_slots", v)).transpose()?.unwrap_or(1_000_000_000);
    if max_slots == 0 {
        return Err(bad("max_slots", "0", "must be positive"));
    }
    let output_dir = PathBuf::from(get("output_dir").unwrap_or("."));

    Ok(ExperimentConfig {
        sizes,
        pattern,
        scheduling,
        g_exponent,
        alpha,
        base_packets,
        replications,
        base_seed,
        phy,
        spacing,
        sinr_mode,
        partition,
        max_slots,
        output_dir,
    })
}

fn pattern_name(p: TrafficPattern) -> &'static str {
    match p {
        TrafficPattern::Homogeneous => "homogeneous",
        TrafficPattern::OneDissimilar => "one-dissimilar",
        TrafficPattern::HeavyTailed => "heavy-tailed",
    }
}

fn scheduling_name(s: Scheme) -> &'static str {
    match s {
        Scheme::Conventional => "conventional",
        Scheme::TwoPhase => "two-phase",
    }
}

/// Canonical text form: `parse_config(emit_config(c)) == c`.
pub fn emit_config(c: &ExperimentConfig) -> String {
    let mut out = String::new();
    let sizes: Vec<String> = c.sizes.iter().map(|l| l.to_string()).collect();
    let _ = writeln!(out, "sizes = {}", sizes.join(","));
    let _ = writeln!(out, "scheme = {}/{}", pattern_name(c.pattern), scheduling_name(c.scheduling));
    if let Some(g) = c.g_exponent {
        let _ = writeln!(out, "g_exponent = {g}");
    }
    if let Some(a) = c.alpha {
        let _ = writeln!(out, "alpha = {a}");
    }
    let _ = writeln!(out, "base_packets = {}", c.base_packets);
    let _ = writeln!(out, "replications = {}", c.replications);
    let _ = writeln!(out, "base_seed = {}", c.base_seed);
    let _ = writeln!(out, "power = {}", c.phy.power);
    let _ = writeln!(out, "noise = {}", c.phy.noise);
    let _ = writeln!(out, "beta = {}", c.phy.beta);
    let _ = writeln!(out, "gamma = {}", c.phy.gamma);
    let _ = writeln!(out, "spacing = {}", c.spacing);
    let _ = writeln!(out, "sinr_mode = {}", match c.sinr_mode {
        SinrMode::AssumedSuccess => "assumed",
        SinrMode::Verified => "verified",
    });
    if let Some(p) = &c.partition {
        let v = match p {
            PartitionStrategy::SingleOutlier => "single-outlier".to_string(),
            PartitionStrategy::OptimalHeavyTail { .. } => "optimal".to_string(),
            PartitionStrategy::SweepEmpirical => "sweep".to_string(),
            PartitionStrategy::FixedM(m) => format!("fixed:{m}"),
        };
        let _ = writeln!(out, "partition = {v}");
    }
    let _ = writeln!(out, "max_slots = {}", c.max_slots);
    let _ = writeln!(out, "output_dir = {}", c.output_dir.display());
    out
}

/// splitmix64; decorrelates the per-replication seed into independent
/// sub-streams (pairing draw vs rate draw).
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn sub_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// One (size, replication) observation.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRow {
    pub size_l: usize,
    pub n: usize,
    pub replication: usize,
    pub seed: u64,
    pub scheme: Scheme,
    pub throughput: f64,
    pub slots: u64,
    pub packets: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizeSummary {
    pub size_l: usize,
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation of the per-replication throughputs
    /// (NaN with a single replication).
    pub stddev: f64,
    pub box_stats: BoxStats,
    /// None with a single replication.
    pub ci: Option<Ci95>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    /// Size-major, replication-minor; always |sizes| * replications rows.
    pub samples: Vec<SampleRow>,
    pub per_size: Vec<SizeSummary>,
    /// Log-log fit of per-size mean throughput against n; None with fewer
    /// than three distinct sizes.
    pub fit: Option<ScalingFit>,
    /// Log-log fit of the per-size throughput standard deviation against n
    /// (informational).
    pub stddev_fit: Option<ScalingFit>,
    /// The matching closed-form lower-bound exponent.
    pub theory_exponent: f64,
}

fn theory_exponent(c: &ExperimentConfig) -> f64 {
    let scheme = match (c.pattern, c.scheduling) {
        (TrafficPattern::Homogeneous, _) => BoundScheme::Homogeneous,
        (TrafficPattern::OneDissimilar, Scheme::Conventional) => {
            BoundScheme::OneDissimilarConventional { g_exponent: c.g_exponent.unwrap() }
        }
        (TrafficPattern::OneDissimilar, Scheme::TwoPhase) => {
            BoundScheme::OneDissimilarPartitioned { g_exponent: c.g_exponent.unwrap() }
        }
        (TrafficPattern::HeavyTailed, Scheme::Conventional) => {
            BoundScheme::HeavyTailedConventional { alpha: c.alpha.unwrap() }
        }
        (TrafficPattern::HeavyTailed, Scheme::TwoPhase) => {
            BoundScheme::HeavyTailedPartitioned { alpha: c.alpha.unwrap() }
        }
    };
    scheme.exponent()
}

fn thread_count_from_env() -> Result<usize, HarnessError> {
    match std::env::var("MESHCAP_THREADS") {
        Err(_) => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| HarnessError::BadThreads(v)),
    }
}

fn rates_for(c: &ExperimentConfig, n: usize, seed: u64) -> Result<RateVector, String> {
    match c.pattern {
        TrafficPattern::Homogeneous => Ok(rates_homogeneous(n)),
        TrafficPattern::OneDissimilar => {
            rates_one_dissimilar(n, c.g_exponent.unwrap()).map_err(|e| e.to_string())
        }
        TrafficPattern::HeavyTailed => {
            rates_heavy_tailed(n, c.alpha.unwrap(), sub_seed(seed, 2)).map_err(|e| e.to_string())
        }
    }
}

fn run_one(c: &ExperimentConfig, size_l: usize, replication: usize) -> Result<SampleRow, HarnessError> {
    let seed = c.base_seed.wrapping_add(replication as u64);
    let fail = |message: String| HarnessError::Sim { size: size_l, seed, message };

    let grid = Grid::square(size_l, c.spacing).map_err(|e| fail(e.to_string()))?;
    let schedule = SlotSchedule::for_grid(&grid);
    let n = grid.n();
    let rates = rates_for(c, n, seed).map_err(fail)?;
    let pairing = sample_pairing(n, sub_seed(seed, 1)).map_err(|e| fail(e.to_string()))?;
    let sessions = build_sessions(&grid, &pairing, &rates, c.base_packets);
    let policy = EnginePolicy { sinr_mode: c.sinr_mode, max_slots: c.max_slots, ..Default::default() };

    let report: SimReport = match c.scheduling {
        Scheme::Conventional => run_conventional(&grid, &schedule, &sessions, &policy, &c.phy)
            .map_err(|e| fail(e.to_string()))?,
        Scheme::TwoPhase => {
            let strategy = c.partition.unwrap_or(match c.pattern {
                TrafficPattern::HeavyTailed => {
                    PartitionStrategy::OptimalHeavyTail { alpha: c.alpha.unwrap() }
                }
                _ => PartitionStrategy::SingleOutlier,
            });
            let plan = plan_partition(&rates, &strategy).map_err(|e| fail(e.to_string()))?;
            run_two_phase(&grid, &schedule, &sessions, &rates, &plan, &policy, &c.phy)
                .map_err(|e| fail(e.to_string()))?
        }
    };

    Ok(SampleRow {
        size_l,
        n,
        replication,
        seed,
        scheme: c.scheduling,
        throughput: report.throughput,
        slots: report.total_slots,
        packets: report.total_packets,
    })
}

/// Runs the full sweep: every size times every replication, fanned out to a
/// worker pool sized by MESHCAP_THREADS (0 or unset = automatic). Output is
/// independent of worker scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    use rayon::prelude::*;

    let threads = thread_count_from_env()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| HarnessError::BadThreads(e.to_string()))?;

    let reps = config.replications;
    let tasks: Vec<(usize, usize)> = config
        .sizes
        .iter()
        .flat_map(|&l| (0..reps).map(move |r| (l, r)))
        .collect();
    let samples: Vec<SampleRow> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(l, r)| run_one(config, l, r))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut per_size = Vec::with_capacity(config.sizes.len());
    for (i, &l) in config.sizes.iter().enumerate() {
        let chunk = &samples[i * reps..(i + 1) * reps];
        let ts: Vec<f64> = chunk.iter().map(|s| s.throughput).collect();
        let mut acc = KahanSum::new();
        for &t in &ts {
            acc.add(t);
        }
        let mean = acc.value() / reps as f64;
        let mut dev = KahanSum::new();
        for &t in &ts {
            dev.add((t - mean) * (t - mean));
        }
        let stddev = (dev.value() / (reps as f64 - 1.0)).sqrt();
        let bs = box_stats(&ts).expect("replications >= 1 guarantees samples");
        let ci = ci95(&ts).ok();
        per_size.push(SizeSummary { size_l: l, n: l * l, mean, stddev, box_stats: bs, ci });
    }

    let mean_points: Vec<(f64, f64)> = per_size.iter().map(|s| (s.n as f64, s.mean)).collect();
    let fit = fit_loglog(&mean_points).ok();
    let dev_points: Vec<(f64, f64)> = per_size.iter().map(|s| (s.n as f64, s.stddev)).collect();
    let stddev_fit = fit_loglog(&dev_points).ok();

    Ok(ExperimentReport {
        config: config.clone(),
        samples,
        per_size,
        fit,
        stddev_fit,
        theory_exponent: theory_exponent(config),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), HarnessError> {
    std::fs::write(path, contents).map_err(|source| HarnessError::Io { path: path.into(), source })
}

/// Writes `samples.csv` (one row per size x replication) and `summary.csv`
/// (one row per size, ascending n) into `dir`. Reruns produce identical
/// bytes.
pub fn emit_csv(report: &ExperimentReport, dir: &Path) -> Result<(), HarnessError> {
    std::fs::create_dir_all(dir).map_err(|source| HarnessError::Io { path: dir.into(), source })?;

    let mut samples = String::from("size,n,replication,seed,scheme,throughput,slots,packets\n");
    for s in &report.samples {
        let _ = writeln!(
            samples,
            "{},{},{},{},{},{},{},{}",
            s.size_l,
            s.n,
            s.replication,
            s.seed,
            scheduling_name(s.scheme),
            s.throughput,
            s.slots,
            s.packets
        );
    }
    write_file(&dir.join("samples.csv"), &samples)?;

    let mut rows: Vec<&SizeSummary> = report.per_size.iter().collect();
    rows.sort_by_key(|s| s.n);
    let mut summary = String::from("n,mean,median,q25,q75,p9,p91,ci95_half,stderr\n");
    for s in rows {
        let b = &s.box_stats;
        let k = report.config.replications as f64;
        let _ = writeln!(
            summary,
            "{},{},{},{},{},{},{},{},{}",
            s.n,
            s.mean,
            b.median,
            b.q25,
            b.q75,
            b.p9,
            b.p91,
            s.ci.map(|c| c.half_width).unwrap_or(f64::NAN),
            s.stddev / k.sqrt()
        );
    }
    write_file(&dir.join("summary.csv"), &summary)
}

/// Human-readable report: per-size table, fitted slope with standard error,
/// the theoretical exponent, and their absolute difference.
pub fn emit_summary(report: &ExperimentReport) -> String {
    let c = &report.config;
    let mut out = String::new();
    let param = match c.pattern {
        TrafficPattern::Homogeneous => String::new(),
        TrafficPattern::OneDissimilar => format!(" (g_exponent = {:.4})", c.g_exponent.unwrap()),
        TrafficPattern::HeavyTailed => format!(" (alpha = {})", c.alpha.unwrap()),
    };
    let _ = writeln!(out, "scheme: {}/{}{}", pattern_name(c.pattern), scheduling_name(c.scheduling), param);
    let _ = writeln!(
        out,
        "sizes: {} grids, n = {} .. {}; {} replications; base seed {}",
        c.sizes.len(),
        report.per_size.iter().map(|s| s.n).min().unwrap_or(0),
        report.per_size.iter().map(|s| s.n).max().unwrap_or(0),
        c.replications,
        c.base_seed
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "n", "mean", "median", "q25", "q75", "ci95_half"
    );
    let mut rows: Vec<&SizeSummary> = report.per_size.iter().collect();
    rows.sort_by_key(|s| s.n);
    for s in rows {
        let _ = writeln!(
            out,
            "{:>8} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            s.n,
            s.mean,
            s.box_stats.median,
            s.box_stats.q25,
            s.box_stats.q75,
            s.ci.map(|x| x.half_width).unwrap_or(f64::NAN)
        );
    }
    let _ = writeln!(out);
    match &report.fit {
        Some(f) => {
            let _ = writeln!(
                out,
                "fitted slope: {:.4} +/- {:.4} (r^2 = {:.4})",
                f.slope, f.slope_stderr, f.r_squared
            );
            let _ = writeln!(out, "theory exponent: {:.4}", report.theory_exponent);
            let _ = writeln!(
                out,
                "exponent difference: {:.4}",
                (f.slope - report.theory_exponent).abs()
            );
        }
        None => {
            let _ = writeln!(out, "fitted slope: n/a (need at least 3 distinct sizes)");
            let _ = writeln!(out, "theory exponent: {:.4}", report.theory_exponent);
        }
    }
    match &report.stddev_fit {
        Some(f) => {
            let _ = writeln!(out, "stddev slope: {:.4} (informational)", f.slope);
        }
        None => {
            let _ = writeln!(out, "stddev slope: n/a");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// CLI

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "meshcap",
    about = "Packet-level mesh fabric simulator and throughput scaling analysis",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the experiment described by a config file; writes samples.csv and
    /// summary.csv into the configured output_dir and prints the summary.
    Simulate { config: PathBuf },
    /// Print the closed-form lower-bound exponent and bound values for a
    /// scheme (homogeneous | one-dissimilar-conventional |
    /// one-dissimilar-partitioned | heavy-conventional | heavy-partitioned).
    Scaling {
        scheme: String,
        #[arg(long)]
        g_exponent: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Monte Carlo checks of the order-statistics machinery against the
    /// quadrature/closed-form oracles; exits 1 if any check fails.
    VerifyOrderstats {
        alpha: f64,
        #[arg(default_value_t = 10_000)]
        n: usize,
        #[arg(default_value_t = 500)]
        reps: usize,
    },
    /// Print the slot schedule's per-label class sizes and the largest
    /// certifiable SINR threshold for an L x L grid.
    VerifyMac {
        l: usize,
        #[arg(default_value_t = 4.0)]
        gamma: f64,
    },
}

fn cmd_simulate(path: &Path) -> Result<(), HarnessError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| HarnessError::ConfigRead { path: path.into(), source })?;
    let config = parse_config(&text)?;
    let report = run_experiment(&config)?;
    emit_csv(&report, &config.output_dir)?;
    print!("{}", emit_summary(&report));
    println!(
        "wrote {} and {}",
        config.output_dir.join("samples.csv").display(),
        config.output_dir.join("summary.csv").display()
    );
    Ok(())
}

fn cmd_scaling(scheme: &str, g_exponent: Option<f64>, alpha: Option<f64>) -> Result<(), HarnessError> {
    let need_g = || {
        g_exponent.ok_or_else(|| {
            HarnessError::BadCliArg(format!("scheme `{scheme}` requires --g-exponent"))
        })
    };
    let need_a = || {
        alpha.ok_or_else(|| HarnessError::BadCliArg(format!("scheme `{scheme}` requires --alpha")))
    };
    let bound = match scheme {
        "homogeneous" => BoundScheme::Homogeneous,
        "one-dissimilar-conventional" => BoundScheme::OneDissimilarConventional { g_exponent: need_g()? },
        "one-dissimilar-partitioned" => BoundScheme::OneDissimilarPartitioned { g_exponent: need_g()? },
        "heavy-conventional" => BoundScheme::HeavyTailedConventional { alpha: need_a()? },
        "heavy-partitioned" => BoundScheme::HeavyTailedPartitioned { alpha: need_a()? },
        other => {
            return Err(HarnessError::BadCliArg(format!(
                "unknown scheme `{other}` (homogeneous | one-dissimilar-conventional | \
                 one-dissimilar-partitioned | heavy-conventional | heavy-partitioned)"
            )))
        }
    };
    match bound {
        BoundScheme::OneDissimilarConventional { g_exponent }
        | BoundScheme::OneDissimilarPartitioned { g_exponent } => {
            if !(g_exponent > 0.0 && g_exponent < 1.0) {
                return Err(HarnessError::BadCliArg("--g-exponent must lie in (0, 1)".into()));
            }
        }
        BoundScheme::HeavyTailedConventional { alpha } | BoundScheme::HeavyTailedPartitioned { alpha } => {
            if !(alpha > 1.0) {
                return Err(HarnessError::BadCliArg("--alpha must exceed 1".into()));
            }
        }
        BoundScheme::Homogeneous => {}
    }
    println!("scheme: {scheme}");
    println!("exponent: {:.4}", bound.exponent());
    println!("lower bound values (T >= c * n^exponent, c omitted):");
    for l in [3usize, 6, 9, 12, 15, 18] {
        let n = (l * l) as f64;
        println!("  n = {:>4}: {:.4}", l * l, crate::scaling::bound(&bound, n));
    }
    Ok(())
}

fn cmd_verify_orderstats(alpha: f64, n: usize, reps: usize) -> Result<(), HarnessError> {
    use crate::scaling::{mc_central_order, mc_inv_max, mc_mean_concentration, quadrature_inv_max};
    if !(alpha > 1.0) {
        return Err(HarnessError::BadCliArg("alpha must exceed 1".into()));
    }
    if n < 10 || reps < 10 {
        return Err(HarnessError::BadCliArg("need n >= 10 and reps >= 10".into()));
    }
    const SEED: u64 = 0xCAFE_F00D;
    println!("alpha = {alpha}, n = {n}, reps = {reps}, seed = {SEED}");
    let mut all_pass = true;
    let mut check = |name: &str, got: f64, want: f64, tol: f64| {
        let ok = (got - want).abs() <= tol;
        all_pass &= ok;
        println!(
            "{name}: measured {got:.4}, expected {want:.4}, |diff| {:.4} (tol {tol}) {}",
            (got - want).abs(),
            if ok { "PASS" } else { "FAIL" }
        );
    };

    let mc = mc_inv_max(n, alpha, reps, SEED);
    let quad = quadrature_inv_max(alpha);
    check("extreme order statistic E[n^(1/a)/max]", mc, quad, 0.05);

    let m = ((n as f64).sqrt().round() as usize).clamp(1, n - 1);
    let central = mc_central_order(n, m, alpha, reps, SEED + 1)
        .map_err(|e| HarnessError::BadCliArg(e.to_string()))?;
    check(
        &format!("central order statistic at m = {m}, normalized mean"),
        central.normalized_mean,
        1.0,
        0.05,
    );

    if alpha > 2.0 {
        let (grand, _var) = mc_mean_concentration(n, alpha, reps.max(2), SEED + 2);
        let want = alpha / (alpha - 1.0);
        check("mean concentration around alpha/(alpha-1)", grand, want, 0.02 * want);
    } else {
        println!("mean concentration: skipped (sample variance diverges for alpha <= 2)");
    }

    println!("result: {}", if all_pass { "PASS" } else { "FAIL" });
    if all_pass {
        Ok(())
    } else {
        Err(HarnessError::BadCliArg("order-statistics verification failed".into()))
    }
}

fn cmd_verify_mac(l: usize, gamma: f64) -> Result<(), HarnessError> {
    if l < 2 {
        return Err(HarnessError::BadCliArg("grid side must be at least 2".into()));
    }
    if !(gamma > 2.0) {
        return Err(HarnessError::BadCliArg(
            "gamma must exceed 2 for a certifiable SINR threshold (interference sum diverges otherwise)".into(),
        ));
    }
    let grid = Grid::square(l, 1.0)
        .map_err(|e| HarnessError::BadCliArg(e.to_string()))?;
    let schedule = SlotSchedule::for_grid(&grid);
    let params = PhyParams { gamma, ..PhyParams::default() };
    println!("grid: {l} x {l} (n = {})", grid.n());
    let sizes: Vec<usize> = (1..=9).map(|lab| schedule.nodes_with_label(lab).len()).collect();
    println!("active-set sizes by label 1..9: {sizes:?}");
    println!(
        "feasible beta (min worst-case SINR over one frame, gamma = {gamma}): {:.6}",
        phy::feasible_beta(&grid, &schedule, &params)
    );
    Ok(())
}

/// CLI entry point. Returns the process exit code: 0 success, 1 validation
/// failure (including failed verifications), 2 runtime failure.
pub fn cli_main<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let argv: Vec<String> = argv.into_iter().collect();
    if argv.len() <= 1 {
        use clap::CommandFactory;
        let mut cmd = Cli::command();
        let _ = cmd.print_help();
        println!();
        return 1;
    }
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.cmd {
        Cmd::Simulate { config } => cmd_simulate(&config),
        Cmd::Scaling { scheme, g_exponent, alpha } => cmd_scaling(&scheme, g_exponent, alpha),
        Cmd::VerifyOrderstats { alpha, n, reps } => cmd_verify_orderstats(alpha, n, reps),
        Cmd::VerifyMac { l, gamma } => cmd_verify_mac(l, gamma),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    // Tests that read or write MESHCAP_THREADS (any run_experiment call does)
    // serialize on this lock so the bogus-value test cannot poison them.
    static ENV_LOCK: Mutex<()> = Mutex::new(());

    fn minimal() -> &'static str {
        "sizes = 3,6,9\nscheme = homogeneous/conventional\n"
    }

    #[test]
    fn parse_applies_documented_defaults() {
        let c = parse_config(minimal()).unwrap();
        assert_eq!(c.sizes, vec![3, 6, 9]);
        assert_eq!(c.pattern, TrafficPattern::Homogeneous);
        assert_eq!(c.scheduling, Scheme::Conventional);
        assert_eq!(c.g_exponent, None);
        assert_eq!(c.alpha, None);
        assert_eq!(c.base_packets, 100);
        assert_eq!(c.replications, 200);
        assert_eq!(c.base_seed, 0);
        assert_eq!(c.phy, PhyParams::default());
        assert_eq!(c.spacing, 1.0);
        assert_eq!(c.sinr_mode, SinrMode::AssumedSuccess);
        assert_eq!(c.partition, None);
        assert_eq!(c.max_slots, 1_000_000_000);
        assert_eq!(c.output_dir, PathBuf::from("."));
    }

    #[test]
    fn parse_tolerates_comments_blanks_and_duplicate_keys() {
        let text = "# leading comment\n\n  sizes = 3,6 # trailing\nscheme=homogeneous/conventional\nbase_seed = 1\nbase_seed = 7\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.sizes, vec![3, 6]);
        assert_eq!(c.base_seed, 7);
    }

    #[test]
    fn parse_rejects_each_misuse_distinctly() {
        let e = |t: &str| parse_config(t).unwrap_err();
        assert!(matches!(e("bogus = 1\nsizes=3\nscheme=homogeneous/conventional"), HarnessError::UnknownKey(k) if k == "bogus"));
        assert!(matches!(e("sizes 3"), HarnessError::BadLine(_)));
        assert!(matches!(e("scheme=homogeneous/conventional"), HarnessError::MissingKey("sizes")));
        assert!(matches!(e("sizes=3"), HarnessError::MissingKey("scheme")));
        assert!(matches!(e("sizes=3\nscheme=homogeneous"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=uniform/conventional"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/serial"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=1,3\nscheme=homogeneous/conventional"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3,3\nscheme=homogeneous/conventional"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/conventional\nalpha=5"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=one-dissimilar/two-phase"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=one-dissimilar/two-phase\ng_exponent=1.5"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=heavy-tailed/conventional"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=heavy-tailed/conventional\nalpha=1"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=heavy-tailed/conventional\nalpha=5\ng_exponent=0.5"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/conventional\nreplications=0"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/conventional\nbase_packets=zero"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/conventional\npartition=single-outlier"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=one-dissimilar/two-phase\ng_exponent=0.5\npartition=optimal"), HarnessError::SchemeMismatch(_)));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/two-phase\npartition=fixed:x"), HarnessError::BadValue { .. }));
        assert!(matches!(e("sizes=3\nscheme=homogeneous/conventional\nsinr_mode=maybe"), HarnessError::BadValue { .. }));
    }

    #[test]
    fn config_round_trips_through_the_canonical_emitter() {
        let text = "sizes = 6,3,12\nscheme = heavy-tailed/two-phase\nalpha = 2.5\nreplications = 7\nbase_seed = 42\nbase_packets = 25\npower = 500000\nnoise = 2\nbeta = 0.37\ngamma = 3.5\nspacing = 0.5\nsinr_mode = verified\npartition = fixed:12\nmax_slots = 77777\noutput_dir = out/run1\n";
        let c = parse_config(text).unwrap();
        let c2 = parse_config(&emit_config(&c)).unwrap();
        assert_eq!(c, c2);
        // The optimal strategy leans on the traffic alpha and survives the
        // round trip too.
        let t3 = "sizes = 3,6\nscheme = heavy-tailed/two-phase\nalpha = 5\npartition = optimal\n";
        let c3 = parse_config(t3).unwrap();
        assert_eq!(c3.partition, Some(PartitionStrategy::OptimalHeavyTail { alpha: 5.0 }));
        assert_eq!(parse_config(&emit_config(&c3)).unwrap(), c3);
        // Homogeneous default config round-trips as well.
        let c4 = parse_config(minimal()).unwrap();
        assert_eq!(parse_config(&emit_config(&c4)).unwrap(), c4);
    }

    #[test]
    fn sub_seeds_are_decorrelated_streams() {
        assert_ne!(sub_seed(0, 1), sub_seed(0, 2));
        assert_ne!(sub_seed(0, 1), sub_seed(1, 1));
        assert_eq!(sub_seed(123, 1), sub_seed(123, 1));
        // Consecutive seeds must not collide across streams (the pairing
        // stream of seed s vs the rates stream of seed s+1, etc.).
        for s in 0..1000u64 {
            assert_ne!(sub_seed(s, 1), sub_seed(s + 1, 1));
            assert_ne!(sub_seed(s, 2), sub_seed(s + 1, 1));
            assert_ne!(sub_seed(s, 1), sub_seed(s + 1, 2));
        }
    }

    fn small_config(extra: &str) -> ExperimentConfig {
        let text = format!(
            "sizes = 3,6\nscheme = homogeneous/conventional\nreplications = 3\nbase_packets = 20\n{extra}"
        );
        parse_config(&text).unwrap()
    }

    #[test]
    fn experiment_shape_and_seeding() {
        let _guard = ENV_LOCK.lock().unwrap();
        let cfg = small_config("base_seed = 10\n");
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.samples.len(), 6);
        for (i, s) in report.samples.iter().enumerate() {
            assert_eq!(s.size_l, if i < 3 { 3 } else { 6 });
            assert_eq!(s.n, s.size_l * s.size_l);
            assert_eq!(s.replication, i % 3);
            assert_eq!(s.seed, 10 + (i % 3) as u64);
            assert_eq!(s.scheme, Scheme::Conventional);
            assert!(s.throughput > 0.0);
            assert_eq!(s.throughput, s.packets as f64 / s.slots as f64);
            // Homogeneous 20-packet workloads across the grid.
            assert_eq!(s.packets, 20 * s.n as u64);
        }
        assert_eq!(report.per_size.len(), 2);
        for (i, ps) in report.per_size.iter().enumerate() {
            let chunk: Vec<f64> =
                report.samples[i * 3..(i + 1) * 3].iter().map(|s| s.throughput).collect();
            let mean = chunk.iter().sum::<f64>() / 3.0;
            assert!((ps.mean - mean).abs() < 1e-12);
            assert!(ps.stddev >= 0.0);
            assert!(ps.ci.is_some());
        }
        // Two sizes cannot support a log-log fit.
        assert!(report.fit.is_none());
        assert_eq!(report.theory_exponent, 0.5);
    }

    #[test]
    fn experiment_is_deterministic_and_csvs_are_byte_identical() {
        let _guard = ENV_LOCK.lock().unwrap();
        let cfg = small_config("");
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a, b);

        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        emit_csv(&a, dir_a.path()).unwrap();
        emit_csv(&b, dir_b.path()).unwrap();
        for f in ["samples.csv", "summary.csv"] {
            let x = std::fs::read(dir_a.path().join(f)).unwrap();
            let y = std::fs::read(dir_b.path().join(f)).unwrap();
            assert_eq!(x, y, "{f} differs between reruns");
        }
    }

    #[test]
    fn csv_schemas_and_ordering() {
        let _guard = ENV_LOCK.lock().unwrap();
        // Sizes listed descending: samples keep config order, summary sorts.
        let text = "sizes = 6,3\nscheme = homogeneous/conventional\nreplications = 2\nbase_packets = 10\n";
        let report = run_experiment(&parse_config(text).unwrap()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        emit_csv(&report, dir.path()).unwrap();

        let samples = std::fs::read_to_string(dir.path().join("samples.csv")).unwrap();
        let lines: Vec<&str> = samples.lines().collect();
        assert_eq!(lines[0], "size,n,replication,seed,scheme,throughput,slots,packets");
        assert_eq!(lines.len(), 1 + 4);
        assert!(samples.ends_with('\n'));
        assert!(lines[1].starts_with("6,36,0,0,conventional,"));
        assert!(lines[3].starts_with("3,9,0,0,conventional,"));

        let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        let lines: Vec<&str> = summary.lines().collect();
        assert_eq!(lines[0], "n,mean,median,q25,q75,p9,p91,ci95_half,stderr");
        assert_eq!(lines.len(), 1 + 2);
        assert!(summary.ends_with('\n'));
        assert!(lines[1].starts_with("9,"));
        assert!(lines[2].starts_with("36,"));
    }

    #[test]
    fn summary_difference_line_is_exactly_the_printed_gap() {
        let _guard = ENV_LOCK.lock().unwrap();
        let text = "sizes = 3,6,9\nscheme = one-dissimilar/two-phase\ng_exponent = 0.6667\nreplications = 2\nbase_packets = 10\n";
        let report = run_experiment(&parse_config(text).unwrap()).unwrap();
        let summary = emit_summary(&report);
        let fit = report.fit.as_ref().expect("three sizes fit");
        assert!(summary.contains(&format!(
            "fitted slope: {:.4} +/- {:.4} (r^2 = {:.4})",
            fit.slope, fit.slope_stderr, fit.r_squared
        )));
        assert!(summary.contains(&format!("theory exponent: {:.4}", report.theory_exponent)));
        assert!(summary.contains(&format!(
            "exponent difference: {:.4}",
            (fit.slope - report.theory_exponent).abs()
        )));
        assert!(summary.contains("stddev slope:"));
    }

    #[test]
    fn heavy_two_phase_defaults_to_the_optimal_split() {
        let _guard = ENV_LOCK.lock().unwrap();
        let text = "sizes = 6\nscheme = heavy-tailed/two-phase\nalpha = 3\nreplications = 2\nbase_packets = 10\n";
        let report = run_experiment(&parse_config(text).unwrap()).unwrap();
        assert_eq!(report.samples.len(), 2);
        for s in &report.samples {
            assert_eq!(s.scheme, Scheme::TwoPhase);
            assert!(s.throughput > 0.0);
        }
        // alpha = 3: theory exponent (9 + 6 - 4) / (18 + 6) = 11/24.
        assert!((report.theory_exponent - 11.0 / 24.0).abs() < 1e-12);
    }

    #[test]
    fn thread_env_is_validated_and_respected() {
        let _guard = ENV_LOCK.lock().unwrap();
        std::env::set_var("MESHCAP_THREADS", "notanumber");
        let err = run_experiment(&small_config("")).unwrap_err();
        assert!(matches!(err, HarnessError::BadThreads(_)));
        std::env::set_var("MESHCAP_THREADS", "2");
        let a = run_experiment(&small_config("")).unwrap();
        std::env::remove_var("MESHCAP_THREADS");
        let b = run_experiment(&small_config("")).unwrap();
        // Worker count never changes results.
        assert_eq!(a, b);
    }

    #[test]
    fn cli_exit_codes() {
        let _guard = ENV_LOCK.lock().unwrap();
        let run = |args: &[&str]| {
            let mut argv = vec!["meshcap".to_string()];
            argv.extend(args.iter().map(|s| s.to_string()));
            cli_main(argv)
        };
        assert_eq!(cli_main(Vec::<String>::new()), 1);
        assert_eq!(run(&[]), 1);
        assert_eq!(run(&["scaling", "heavy-partitioned", "--alpha", "5"]), 0);
        assert_eq!(run(&["scaling", "heavy-partitioned"]), 1);
        assert_eq!(run(&["scaling", "nonsense"]), 1);
        assert_eq!(run(&["scaling", "one-dissimilar-partitioned", "--g-exponent", "0.667"]), 0);
        assert_eq!(run(&["simulate", "definitely_missing.conf"]), 1);
        assert_eq!(run(&["verify-mac", "6"]), 0);
        assert_eq!(run(&["verify-mac", "6", "2.0"]), 1);
        assert_eq!(run(&["verify-mac", "1"]), 1);
        assert_eq!(run(&["no-such-subcommand"]), 1);

        // A full simulate run against a real config.
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("results");
        let conf_path = dir.path().join("exp.conf");
        std::fs::write(
            &conf_path,
            format!(
                "sizes = 3,6\nscheme = homogeneous/conventional\nreplications = 2\nbase_packets = 10\noutput_dir = {}\n",
                out.display()
            ),
        )
        .unwrap();
        assert_eq!(run(&["simulate", conf_path.to_str().unwrap()]), 0);
        assert!(out.join("samples.csv").is_file());
        assert!(out.join("summary.csv").is_file());
    }

    #[test]
    fn cli_orderstats_verification_passes_at_modest_sizes() {
        assert_eq!(
            cli_main(
                ["meshcap", "verify-orderstats", "3", "2000", "100"].map(String::from).to_vec()
            ),
            0
        );
        // Validation failures.
        assert_eq!(
            cli_main(["meshcap", "verify-orderstats", "0.5"].map(String::from).to_vec()),
            1
        );
    }
}
