//! The five command-line verbs as library functions.
//!
//! Every command writes its files only after all simulations finished and
//! returns the text it shows on stdout.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use forksim_core::engine::ReplicationResult;
use forksim_core::metrics::{aggregate, MetricMeans};
use forksim_core::scenario::Scenario;
use forksim_core::stats::{anova_rcbd, format_p, linear_regression, protected_dmrt, AnovaTable, DmrtGrouping, RegressionFit, StatsError};

use crate::error::CliError;
use crate::io::{self, kmh, SummaryRow};
use crate::runner::run_parallel;
use crate::scenario_file::{parse_scenario_bytes, serialize_scenario};

pub const ALPHA: f64 = 0.05;

/// Command-line overrides applied on top of a scenario file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub replications: Option<u32>,
}

/// Reads, parses and validates a scenario file with `overrides` applied.
pub fn load_scenario(path: &Path, overrides: Overrides) -> Result<Scenario, CliError> {
    let bytes = io::read_text(path)?;
    let (mut s, _) = parse_scenario_bytes(&bytes).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    if let Some(seed) = overrides.seed {
        s.seed = seed;
    }
    if let Some(reps) = overrides.replications {
        s.replications = reps;
    }
    s.validate()
        .map_err(|e| CliError::input(format!("{}: invalid scenario: {e}", path.display())))?;
    Ok(s)
}

fn title(s: &Scenario) -> String {
    format!(
        "{} at volume x{}, {} replications, seed {}",
        s.variant, s.volume_multiplier, s.replications, s.seed
    )
}

fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn means_of(label: &str, results: &[ReplicationResult]) -> Result<Vec<MetricMeans>, CliError> {
    results
        .iter()
        .map(|r| {
            r.aggregate.means.ok_or_else(|| {
                CliError::fault(format!(
                    "{label}: replication {} completed no vehicle in the measurement window",
                    r.rep_index
                ))
            })
        })
        .collect()
}

/// `run`: per-replication record CSVs, `summary.csv`, `summary.txt`, the
/// effective `scenario.txt` and `manifest.txt`.
pub fn cmd_run(scenario_path: &Path, out: &Path, overrides: Overrides) -> Result<String, CliError> {
    let s = load_scenario(scenario_path, overrides)?;
    let results = run_parallel(&s)?;

    io::ensure_dir(out)?;
    for r in &results {
        io::write_records(&out.join(io::records_file_name(r.rep_index)), &r.records)?;
    }
    let rows: Vec<SummaryRow> = results.iter().map(SummaryRow::from).collect();
    io::write_summary_csv(&out.join("summary.csv"), &rows)?;
    let text = io::render_summary(&title(&s), &rows);
    io::write_text(&out.join("summary.txt"), &text)?;
    let scenario_text = serialize_scenario(&s);
    io::write_text(&out.join("scenario.txt"), &scenario_text)?;
    io::write_text(
        &out.join("manifest.txt"),
        &io::render_manifest(&scenario_text, s.seed, s.replications, now_unix()),
    )?;
    Ok(text)
}

/// `report`: rebuilds the summary of a finished run from its record files.
pub fn cmd_report(run_dir: &Path) -> Result<String, CliError> {
    let scenario_bytes = io::read_text(&run_dir.join("scenario.txt"))?;
    let (s, _) = parse_scenario_bytes(&scenario_bytes)?;
    let keys = io::read_summary_keys(&run_dir.join("summary.csv"))?;
    let mut rows = Vec::with_capacity(keys.len());
    for (rep, seed, censored) in keys {
        let records = io::read_records(&run_dir.join(io::records_file_name(rep)))?;
        let aggregate = aggregate(&records, censored)?;
        rows.push(SummaryRow { rep, seed, aggregate });
    }
    let text = io::render_summary(&title(&s), &rows);
    io::write_text(&run_dir.join("summary.txt"), &text)?;
    Ok(text)
}

/// ANOVA and letter grouping of one metric across treatments.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricComparison {
    pub table: AnovaTable,
    pub means: Vec<f64>,
    pub grouping: DmrtGrouping,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareOutcome {
    pub labels: Vec<String>,
    pub delta: MetricComparison,
    pub sigma: MetricComparison,
    pub text: String,
}

/// RCBD analysis of `data[rep][treatment]` with protected DMRT.
pub fn compare_metric(data: &[Vec<f64>]) -> Result<MetricComparison, StatsError> {
    let table = anova_rcbd(data)?;
    let k = data[0].len();
    let means: Vec<f64> = (0..k)
        .map(|j| data.iter().map(|row| row[j]).sum::<f64>() / data.len() as f64)
        .collect();
    let grouping = protected_dmrt(&table, &means, data.len(), ALPHA)?;
    Ok(MetricComparison { table, means, grouping })
}

fn labels_for(paths: &[PathBuf]) -> Vec<String> {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    paths
        .iter()
        .map(|p| {
            let stem = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string());
            let n = seen.entry(stem.clone()).or_insert(0);
            *n += 1;
            if *n == 1 {
                stem
            } else {
                format!("{stem}#{n}")
            }
        })
        .collect()
}

fn render_comparison(out: &mut String, metric: &str, unit: &str, labels: &[String], c: &MetricComparison) {
    out.push_str(&format!("ANOVA of mean {metric} ({unit})\n"));
    out.push_str(&c.table.to_text("Scenario"));
    out.push_str(&format!("\nDuncan grouping of mean {metric} (alpha {ALPHA})\n"));
    for &i in &c.grouping.order {
        out.push_str(&format!("  {:<20} {:>10.3} {unit:<4} {}\n", labels[i], c.means[i], c.grouping.letters[i]));
    }
    out.push('\n');
}

fn write_comparison(out: &Path, metric: &str, unit: &str, labels: &[String], c: &MetricComparison, data: &[Vec<f64>]) -> Result<(), CliError> {
    io::write_text(&out.join(format!("anova_{metric}.csv")), &c.table.to_csv("scenario"))?;
    let mut dmrt = format!("scenario,{metric}_mean_{unit},group\n");
    for (i, label) in labels.iter().enumerate() {
        dmrt.push_str(&format!("{label},{},{}\n", c.means[i], c.grouping.letters[i]));
    }
    io::write_text(&out.join(format!("dmrt_{metric}.csv")), &dmrt)?;
    let mut cells = format!("rep,{}\n", labels.join(","));
    for (rep, row) in data.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(f64::to_string).collect();
        cells.push_str(&format!("{rep},{}\n", vals.join(",")));
    }
    io::write_text(&out.join(format!("means_{metric}_{unit}.csv")), &cells)?;
    Ok(())
}

/// `compare`: runs every scenario and tests mean delay and mean speed for
/// differences between them, replications acting as blocks.
pub fn cmd_compare(paths: &[PathBuf], out: &Path, overrides: Overrides) -> Result<CompareOutcome, CliError> {
    if paths.len() < 2 {
        return Err(CliError::input("compare needs at least two scenarios"));
    }
    let scenarios: Vec<Scenario> = paths
        .iter()
        .map(|p| load_scenario(p, overrides))
        .collect::<Result<_, _>>()?;
    let reps = scenarios[0].replications;
    if let Some((p, s)) = paths.iter().zip(&scenarios).find(|(_, s)| s.replications != reps) {
        return Err(CliError::input(format!(
            "replication counts differ: {} has {reps}, {} has {}",
            paths[0].display(),
            p.display(),
            s.replications
        )));
    }
    if reps < 2 {
        return Err(CliError::input("compare needs at least two replications per scenario"));
    }
    let labels = labels_for(paths);

    let mut per_scenario = Vec::with_capacity(scenarios.len());
    for (label, s) in labels.iter().zip(&scenarios) {
        per_scenario.push(means_of(label, &run_parallel(s)?)?);
    }
    let matrix = |f: fn(&MetricMeans) -> f64| -> Vec<Vec<f64>> {
        (0..reps as usize)
            .map(|r| per_scenario.iter().map(|m| f(&m[r])).collect())
            .collect()
    };
    let delta_data = matrix(|m| m.delta);
    let sigma_data = matrix(|m| m.sigma);
    let delta = compare_metric(&delta_data)?;
    let sigma = compare_metric(&sigma_data)?;

    let mut text = String::new();
    render_comparison(&mut text, "delay", "s", &labels, &delta);
    render_comparison(&mut text, "speed", "m/s", &labels, &sigma);

    io::ensure_dir(out)?;
    write_comparison(out, "delta", "s", &labels, &delta, &delta_data)?;
    write_comparison(out, "sigma", "mps", &labels, &sigma, &sigma_data)?;
    io::write_text(&out.join("compare.txt"), &text)?;
    Ok(CompareOutcome {
        labels,
        delta,
        sigma,
        text,
    })
}

/// Mean of the replication means at one volume level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub multiplier: f64,
    /// `(multiplier - 1) * 100`.
    pub increase_pct: f64,
    pub tau: f64,
    pub delta: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    pub points: Vec<SweepPoint>,
    pub delta_fit: RegressionFit,
    pub sigma_fit: RegressionFit,
    pub text: String,
}

/// `sweep`: runs the scenario at every volume multiplier and regresses mean
/// delay and mean speed on the percent increase in volume.
pub fn cmd_sweep(scenario_path: &Path, multipliers: &[f64], out: &Path, overrides: Overrides) -> Result<SweepOutcome, CliError> {
    if multipliers.len() < 2 {
        return Err(CliError::input("sweep needs at least two volume multipliers"));
    }
    let base = load_scenario(scenario_path, overrides)?;
    let scenarios: Vec<Scenario> = multipliers
        .iter()
        .map(|&m| {
            let s = Scenario {
                volume_multiplier: m,
                ..base.clone()
            };
            s.validate().map(|_| s).map_err(|e| CliError::input(format!("multiplier {m}: {e}")))
        })
        .collect::<Result<_, _>>()?;

    let mut points = Vec::with_capacity(scenarios.len());
    for s in &scenarios {
        let results = run_parallel(s)?;
        let means: Vec<MetricMeans> = results.iter().filter_map(|r| r.aggregate.means).collect();
        if means.is_empty() {
            return Err(CliError::fault(format!(
                "multiplier {}: no vehicle completed the measurement zone",
                s.volume_multiplier
            )));
        }
        let k = means.len() as f64;
        points.push(SweepPoint {
            multiplier: s.volume_multiplier,
            increase_pct: (s.volume_multiplier - 1.0) * 100.0,
            tau: means.iter().map(|m| m.tau).sum::<f64>() / k,
            delta: means.iter().map(|m| m.delta).sum::<f64>() / k,
            sigma: means.iter().map(|m| m.sigma).sum::<f64>() / k,
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.increase_pct).collect();
    let fit = |ys: Vec<f64>, what: &str| {
        linear_regression(&xs, &ys).map_err(|e| CliError::fault(format!("{what} regression: {e}")))
    };
    let delta_fit = fit(points.iter().map(|p| p.delta).collect(), "delay")?;
    let sigma_fit = fit(points.iter().map(|p| p.sigma).collect(), "speed")?;

    let mut text = format!("{}\n\n", title(&base));
    text.push_str(&format!(
        "{:>10} {:>12} {:>10} {:>10} {:>10} {:>10}\n",
        "volume x", "increase %", "tau (s)", "delta (s)", "sigma m/s", "sigma km/h"
    ));
    for p in &points {
        text.push_str(&format!(
            "{:>10} {:>12.1} {:>10.2} {:>10.2} {:>10.3} {:>10.2}\n",
            p.multiplier,
            p.increase_pct,
            p.tau,
            p.delta,
            p.sigma,
            kmh(p.sigma)
        ));
    }
    text.push_str(&format!("\ndelay (s) vs volume increase (%): {delta_fit}\n"));
    text.push_str(&format!("speed (m/s) vs volume increase (%): {sigma_fit}\n"));

    io::ensure_dir(out)?;
    let pairs = |f: fn(&SweepPoint) -> f64| points.iter().map(|p| (p.increase_pct, f(p))).collect::<Vec<_>>();
    io::write_xy(&out.join("sweep_delta.csv"), ["increase_pct", "delta_mean_s"], &pairs(|p| p.delta))?;
    io::write_xy(&out.join("sweep_sigma.csv"), ["increase_pct", "sigma_mean_mps"], &pairs(|p| p.sigma))?;
    let mut fits = String::from("metric,slope,intercept,r_squared\n");
    for (name, f) in [("delta_s", &delta_fit), ("sigma_mps", &sigma_fit)] {
        fits.push_str(&format!("{name},{},{},{}\n", f.slope, f.intercept, f.r_squared));
    }
    io::write_text(&out.join("sweep_fit.csv"), &fits)?;
    io::write_text(&out.join("sweep.txt"), &text)?;
    Ok(SweepOutcome {
        points,
        delta_fit,
        sigma_fit,
        text,
    })
}

/// Observed travel times, optionally tagged with the block they belong to.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservedSamples {
    pub tau: Vec<f64>,
    pub block: Option<Vec<i64>>,
}

/// Reads an observed-τ CSV: a header with a `tau_s`, `tau` or `zone_s`
/// column and optionally a `rep` or `block` column.
pub fn read_observed(path: &Path) -> Result<ObservedSamples, CliError> {
    let bad = |msg: String| CliError::input(format!("{}: {msg}", path.display()));
    let mut rdr = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let header = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    let find = |names: &[&str]| names.iter().find_map(|n| header.iter().position(|h| h.trim() == *n));
    let tau_col = find(&["tau_s", "tau", "zone_s"]).ok_or_else(|| bad("no `tau_s`, `tau` or `zone_s` column".into()))?;
    let block_col = find(&["rep", "block"]);
    let mut tau = Vec::new();
    let mut block = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let cell = |c: usize| row.get(c).map(str::trim).unwrap_or("");
        let t: f64 = cell(tau_col)
            .parse()
            .ok()
            .filter(|t: &f64| t.is_finite() && *t >= 0.0)
            .ok_or_else(|| bad(format!("row {}: travel time must be a finite number >= 0", i + 1)))?;
        tau.push(t);
        if let Some(c) = block_col {
            block.push(cell(c).parse().map_err(|_| bad(format!("row {}: block must be an integer", i + 1)))?);
        }
    }
    if tau.is_empty() {
        return Err(bad("no observations".into()));
    }
    Ok(ObservedSamples {
        tau,
        block: block_col.map(|_| block),
    })
}

/// Block means of the observations: by their block column when present
/// (blocks in ascending order), else dealt round-robin into `blocks` groups.
pub fn observed_block_means(obs: &ObservedSamples, blocks: usize) -> Result<Vec<f64>, CliError> {
    let mut groups: BTreeMap<i64, (f64, usize)> = BTreeMap::new();
    match &obs.block {
        Some(tags) => {
            for (t, b) in obs.tau.iter().zip(tags) {
                let g = groups.entry(*b).or_default();
                g.0 += t;
                g.1 += 1;
            }
            if groups.len() != blocks {
                return Err(CliError::input(format!(
                    "observed data has {} blocks but the scenario has {blocks} replications",
                    groups.len()
                )));
            }
        }
        None => {
            if obs.tau.len() < blocks {
                return Err(CliError::input(format!(
                    "need at least {blocks} observations to fill {blocks} blocks, got {}",
                    obs.tau.len()
                )));
            }
            for (i, t) in obs.tau.iter().enumerate() {
                let g = groups.entry((i % blocks) as i64).or_default();
                g.0 += t;
                g.1 += 1;
            }
        }
    }
    Ok(groups.values().map(|(s, n)| s / *n as f64).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidateOutcome {
    pub table: AnovaTable,
    pub accepted: bool,
    pub text: String,
}

/// `validate`: observed against simulated mean travel time, one block per
/// replication.
pub fn cmd_validate(scenario_path: &Path, observed_path: &Path, out: &Path, overrides: Overrides) -> Result<ValidateOutcome, CliError> {
    let s = load_scenario(scenario_path, overrides)?;
    let obs = read_observed(observed_path)?;
    let blocks = s.replications as usize;
    if blocks < 2 {
        return Err(CliError::input("validate needs at least two replications"));
    }
    let observed = observed_block_means(&obs, blocks)?;
    let simulated = means_of("simulation", &run_parallel(&s)?)?;
    let data: Vec<Vec<f64>> = observed.iter().zip(&simulated).map(|(o, m)| vec![*o, m.tau]).collect();
    let table = anova_rcbd(&data)?;
    let p = table.treatment().test.map_or(1.0, |t| t.p());
    let accepted = p >= ALPHA;

    let mut text = String::from("ANOVA of mean travel time, observed vs simulated (s)\n");
    text.push_str(&table.to_text("tau_o vs tau_s"));
    text.push_str(&format!(
        "\nH0 (no difference between observed and simulated travel time) {} at alpha {ALPHA}: alpha_F = {}\n",
        if accepted { "accepted" } else { "rejected" },
        format_p(p)
    ));
    io::ensure_dir(out)?;
    io::write_text(&out.join("validate_anova.csv"), &table.to_csv("tau_o vs tau_s"))?;
    io::write_text(&out.join("validate.txt"), &text)?;
    Ok(ValidateOutcome { table, accepted, text })
}
