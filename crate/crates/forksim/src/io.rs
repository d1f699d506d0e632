//! CSV and text outputs of a run.
//!
//! All CSV files are UTF-8 with LF line ends, a header row and `.` as the
//! decimal separator. Floats are written in shortest round-trip form.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use forksim_core::engine::ReplicationResult;
use forksim_core::metrics::{Aggregate, TrajectoryRecord};
use forksim_core::network::RouteId;
use forksim_core::types::VehicleKind;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const RECORD_HEADER: [&str; 8] = ["id", "class", "route", "entry_s", "exit_s", "stopped_s", "dist_m", "zone_s"];

pub const SUMMARY_HEADER: [&str; 8] = [
    "rep",
    "seed",
    "completed",
    "censored",
    "tau_mean_s",
    "delta_mean_s",
    "sigma_mean_mps",
    "sigma_mean_kmh",
];

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Fs {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("{path}, row {row}: {msg}")]
    Malformed { path: String, row: usize, msg: String },
}

fn fs_err(path: &Path) -> impl FnOnce(std::io::Error) -> IoError + '_ {
    move |source| IoError::Fs {
        path: path.display().to_string(),
        source,
    }
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> IoError + '_ {
    move |source| IoError::Csv {
        path: path.display().to_string(),
        source,
    }
}

pub fn kmh(mps: f64) -> f64 {
    mps * 3.6
}

/// Per-replication record file name inside a run directory.
pub fn records_file_name(rep_index: u32) -> String {
    format!("rep_{rep_index:03}.csv")
}

pub fn write_records(path: &Path, records: &[TrajectoryRecord]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(RECORD_HEADER).map_err(csv_err(path))?;
    for r in records {
        w.write_record([
            r.id.to_string(),
            r.class.name().to_string(),
            r.route.get().to_string(),
            r.entry_time.to_string(),
            r.exit_time.to_string(),
            r.stopped_time.to_string(),
            r.distance_in_zone.to_string(),
            r.time_in_zone.to_string(),
        ])
        .map_err(csv_err(path))?;
    }
    w.flush().map_err(fs_err(path))
}

pub fn read_records(path: &Path) -> Result<Vec<TrajectoryRecord>, IoError> {
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let header = rdr.headers().map_err(csv_err(path))?.clone();
    if header.iter().ne(RECORD_HEADER) {
        return Err(malformed(path, 0, "unexpected header"));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(csv_err(path))?;
        let n = i + 1;
        let num = |col: usize| -> Result<f64, IoError> {
            row[col]
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| malformed(path, n, &format!("bad {}", RECORD_HEADER[col])))
        };
        let class: VehicleKind = row[1].parse().map_err(|_| malformed(path, n, "bad class"))?;
        let route = row[2]
            .parse::<u8>()
            .ok()
            .and_then(|r| RouteId::new(r).ok())
            .ok_or_else(|| malformed(path, n, "bad route"))?;
        out.push(TrajectoryRecord {
            id: row[0].parse().map_err(|_| malformed(path, n, "bad id"))?,
            class,
            route,
            entry_time: num(3)?,
            exit_time: num(4)?,
            stopped_time: num(5)?,
            distance_in_zone: num(6)?,
            time_in_zone: num(7)?,
        });
    }
    Ok(out)
}

fn malformed(path: &Path, row: usize, msg: &str) -> IoError {
    IoError::Malformed {
        path: path.display().to_string(),
        row,
        msg: msg.to_string(),
    }
}

/// One row of `summary.csv`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryRow {
    pub rep: u32,
    pub seed: u64,
    pub aggregate: Aggregate,
}

impl From<&ReplicationResult> for SummaryRow {
    fn from(r: &ReplicationResult) -> Self {
        SummaryRow {
            rep: r.rep_index,
            seed: r.seed,
            aggregate: r.aggregate,
        }
    }
}

pub fn write_summary_csv(path: &Path, rows: &[SummaryRow]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(SUMMARY_HEADER).map_err(csv_err(path))?;
    for r in rows {
        let a = &r.aggregate;
        let (tau, delta, sigma, sigma_kmh) = match a.means {
            Some(m) => (m.tau.to_string(), m.delta.to_string(), m.sigma.to_string(), kmh(m.sigma).to_string()),
            None => Default::default(),
        };
        w.write_record([
            r.rep.to_string(),
            r.seed.to_string(),
            a.completed.to_string(),
            a.censored.to_string(),
            tau,
            delta,
            sigma,
            sigma_kmh,
        ])
        .map_err(csv_err(path))?;
    }
    w.flush().map_err(fs_err(path))
}

/// `(rep, seed, censored)` per row of a summary file.
pub fn read_summary_keys(path: &Path) -> Result<Vec<(u32, u64, usize)>, IoError> {
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let header = rdr.headers().map_err(csv_err(path))?.clone();
    if header.iter().ne(SUMMARY_HEADER) {
        return Err(malformed(path, 0, "unexpected header"));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(csv_err(path))?;
        let bad = |what: &str| malformed(path, i + 1, &format!("bad {what}"));
        out.push((
            row[0].parse().map_err(|_| bad("rep"))?,
            row[1].parse().map_err(|_| bad("seed"))?,
            row[3].parse().map_err(|_| bad("censored"))?,
        ));
    }
    Ok(out)
}

/// Human-readable summary: one line per replication and the mean over
/// replications that completed vehicles.
pub fn render_summary(title: &str, rows: &[SummaryRow]) -> String {
    let mut out = format!("{title}\n\n");
    out.push_str(&format!(
        "{:>4} {:>20} {:>9} {:>8} {:>10} {:>10} {:>10} {:>10}\n",
        "rep", "seed", "completed", "censored", "tau (s)", "delta (s)", "sigma m/s", "sigma km/h"
    ));
    let mut sums = (0.0, 0.0, 0.0);
    let mut n = 0usize;
    for r in rows {
        let a = &r.aggregate;
        let cells = match a.means {
            Some(m) => {
                sums.0 += m.tau;
                sums.1 += m.delta;
                sums.2 += m.sigma;
                n += 1;
                format!("{:>10.2} {:>10.2} {:>10.3} {:>10.2}", m.tau, m.delta, m.sigma, kmh(m.sigma))
            }
            None => format!("{:>10} {:>10} {:>10} {:>10}", "-", "-", "-", "-"),
        };
        out.push_str(&format!(
            "{:>4} {:>20} {:>9} {:>8} {cells}\n",
            r.rep, r.seed, a.completed, a.censored
        ));
    }
    if n > 0 {
        let k = n as f64;
        out.push_str(&format!(
            "\nmean over {n} replications: tau {:.2} s, delta {:.2} s, sigma {:.3} m/s ({:.2} km/h)\n",
            sums.0 / k,
            sums.1 / k,
            sums.2 / k,
            kmh(sums.2 / k)
        ));
    } else {
        out.push_str("\nno vehicle completed the measurement zone\n");
    }
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Run manifest as `key = value` lines; `created_unix` is the only field
/// that changes between identical runs.
pub fn render_manifest(scenario_text: &str, seed: u64, replications: u32, created_unix: u64) -> String {
    format!(
        "software = forksim {}\nscenario_sha256 = {}\nseed = {seed}\nreplications = {replications}\ncreated_unix = {created_unix}\n",
        env!("CARGO_PKG_VERSION"),
        sha256_hex(scenario_text.as_bytes()),
    )
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    let mut f = fs::File::create(path).map_err(fs_err(path))?;
    f.write_all(text.as_bytes()).map_err(fs_err(path))
}

pub fn read_text(path: &Path) -> Result<Vec<u8>, IoError> {
    fs::read(path).map_err(fs_err(path))
}

pub fn ensure_dir(path: &Path) -> Result<(), IoError> {
    fs::create_dir_all(path).map_err(fs_err(path))
}

/// Writes `(x, y)` pairs under a two-column header.
pub fn write_xy(path: &Path, header: [&str; 2], points: &[(f64, f64)]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(header).map_err(csv_err(path))?;
    for (x, y) in points {
        w.write_record([x.to_string(), y.to_string()]).map_err(csv_err(path))?;
    }
    w.flush().map_err(fs_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use forksim_core::metrics::MetricMeans;

    fn record(id: u64) -> TrajectoryRecord {
        TrajectoryRecord {
            id,
            class: VehicleKind::Jeepney,
            route: RouteId::new(4).unwrap(),
            entry_time: 301.2,
            exit_time: 318.700_000_000_000_05,
            stopped_time: 3.1,
            distance_in_zone: 120.25,
            time_in_zone: 17.5,
        }
    }

    #[test]
    fn records_round_trip_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(records_file_name(3));
        assert!(path.ends_with("rep_003.csv"));
        let recs = vec![record(1), record(2)];
        write_records(&path, &recs).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("id,class,route,entry_s,exit_s,stopped_s,dist_m,zone_s\n"));
        assert!(!text.contains('\r'));
        assert_eq!(read_records(&path).unwrap(), recs);
    }

    #[test]
    fn malformed_records_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        std::fs::write(&path, "id,class,route,entry_s,exit_s,stopped_s,dist_m,zone_s\n1,tank,1,0,1,0,1,1\n").unwrap();
        let e = read_records(&path).unwrap_err();
        assert!(e.to_string().contains("row 1: bad class"), "{e}");
    }

    #[test]
    fn summary_has_units_and_empty_cells() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("summary.csv");
        let rows = [
            SummaryRow {
                rep: 0,
                seed: 9,
                aggregate: Aggregate {
                    completed: 2,
                    censored: 1,
                    means: Some(MetricMeans { tau: 20.0, delta: 4.0, sigma: 5.0 }),
                },
            },
            SummaryRow {
                rep: 1,
                seed: 10,
                aggregate: Aggregate { completed: 0, censored: 0, means: None },
            },
        ];
        write_summary_csv(&path, &rows).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "rep,seed,completed,censored,tau_mean_s,delta_mean_s,sigma_mean_mps,sigma_mean_kmh");
        assert_eq!(lines[1], "0,9,2,1,20,4,5,18");
        assert_eq!(lines[2], "1,10,0,0,,,,");
        assert_eq!(read_summary_keys(&path).unwrap(), vec![(0, 9, 1), (1, 10, 0)]);
        let shown = render_summary("t", &rows);
        assert!(shown.contains("sigma km/h"));
        assert!(shown.contains("mean over 1 replications: tau 20.00 s, delta 4.00 s, sigma 5.000 m/s (18.00 km/h)"));
    }

    #[test]
    fn sha256_known_vector() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn manifest_fields() {
        let m = render_manifest("x", 5, 10, 1234);
        assert!(m.contains("seed = 5\n"));
        assert!(m.contains("replications = 10\n"));
        assert!(m.ends_with("created_unix = 1234\n"));
    }
}
