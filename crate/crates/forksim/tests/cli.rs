//! End-to-end runs of the `forksim` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const SHORT: &str = "[scenario]\nduration = 600\nwarmup = 60\nreplications = 3\nseed = 11\n";

fn forksim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forksim")).args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scenario(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn run_writes_records_summary_and_manifest() {
    let tmp = tempfile::tempdir().unwrap();
    let s = scenario(tmp.path(), "s.txt", SHORT);
    let out = tmp.path().join("run");
    let o = forksim(&["run", "--scenario", path_str(&s), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for f in ["rep_000.csv", "rep_001.csv", "rep_002.csv", "summary.csv", "summary.txt", "scenario.txt", "manifest.txt"] {
        assert!(out.join(f).is_file(), "missing {f}");
    }
    let summary = fs::read_to_string(out.join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 4);
    assert!(stdout(&o).contains("mean over 3 replications"));

    // `report` rebuilds the same summary from the record files.
    let before = fs::read_to_string(out.join("summary.txt")).unwrap();
    let r = forksim(&["report", "--out", path_str(&out)]);
    assert_eq!(r.status.code(), Some(0), "{}", stderr(&r));
    assert_eq!(stdout(&r), before);
}

#[test]
fn overrides_reach_the_run() {
    let tmp = tempfile::tempdir().unwrap();
    let s = scenario(tmp.path(), "s.txt", SHORT);
    let out = tmp.path().join("run");
    let o = forksim(&["run", "--scenario", path_str(&s), "--out", path_str(&out), "--reps", "2", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let manifest = fs::read_to_string(out.join("manifest.txt")).unwrap();
    assert!(manifest.contains("seed = 5\n") && manifest.contains("replications = 2\n"));
    assert!(!out.join("rep_002.csv").exists());
}

#[test]
fn input_errors_exit_with_2() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("x");
    let missing = tmp.path().join("missing.txt");
    let o = forksim(&["run", "--scenario", path_str(&missing), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));

    let bad = scenario(tmp.path(), "bad.txt", "[scenario]\nvolume_multiplier = -1\n");
    let o = forksim(&["run", "--scenario", path_str(&bad), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("volume multiplier must be >= 0"));

    let s = scenario(tmp.path(), "s.txt", SHORT);
    let o = forksim(&["run", "--scenario", path_str(&s), "--out", path_str(&out), "--reps", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("replications must be >= 1"));

    let o = forksim(&["run", "--scenario", path_str(&s)]);
    assert_eq!(o.status.code(), Some(2), "missing --out is a usage error");
}

#[test]
fn compare_identical_scenarios_gives_one_group() {
    let tmp = tempfile::tempdir().unwrap();
    let a = scenario(tmp.path(), "a.txt", SHORT);
    let b = scenario(tmp.path(), "b.txt", SHORT);
    let out = tmp.path().join("cmp");
    let o = forksim(&["compare", "--scenario", path_str(&a), "--scenario", path_str(&b), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for metric in ["delta", "sigma"] {
        let anova = fs::read_to_string(out.join(format!("anova_{metric}.csv"))).unwrap();
        let row: Vec<&str> = anova.lines().nth(2).unwrap().split(',').collect();
        assert_eq!(row[0], "scenario");
        assert_eq!((row[4], row[5]), ("0.00", "1.0000"));
        let dmrt = fs::read_to_string(out.join(format!("dmrt_{metric}.csv"))).unwrap();
        assert!(dmrt.lines().skip(1).all(|l| l.ends_with(",A")), "{dmrt}");
    }
}

#[test]
fn compare_rejects_bad_inputs() {
    let tmp = tempfile::tempdir().unwrap();
    let a = scenario(tmp.path(), "a.txt", SHORT);
    let b = scenario(tmp.path(), "b.txt", &format!("{SHORT}variant = ID1\n").replace("replications = 3", "replications = 4"));
    let out = tmp.path().join("cmp");
    let o = forksim(&["compare", "--scenario", path_str(&a), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    let o = forksim(&["compare", "--scenario", path_str(&a), "--scenario", path_str(&b), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("replication counts differ"), "{}", stderr(&o));
}

#[test]
fn compare_four_variants_emits_two_tables_and_groupings() {
    let tmp = tempfile::tempdir().unwrap();
    let paths: Vec<PathBuf> = ["ID0", "ID1", "ID2", "ID3"]
        .iter()
        .map(|v| scenario(tmp.path(), &format!("{v}.txt"), &format!("{SHORT}variant = {v}\n")))
        .collect();
    let out = tmp.path().join("cmp");
    let mut args = vec!["compare"];
    for p in &paths {
        args.extend(["--scenario", path_str(p)]);
    }
    args.extend(["--out", path_str(&out)]);
    let o = forksim(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("SOV").count(), 2);
    assert!(text.contains("Duncan grouping of mean delay") && text.contains("Duncan grouping of mean speed"));
    let dmrt = fs::read_to_string(out.join("dmrt_delta.csv")).unwrap();
    assert_eq!(dmrt.lines().count(), 5);
}

#[test]
fn sweep_fits_and_rejects_degenerate_input() {
    let tmp = tempfile::tempdir().unwrap();
    let s = scenario(tmp.path(), "s.txt", SHORT);
    let out = tmp.path().join("sw");
    let o = forksim(&["sweep", "--scenario", path_str(&s), "--mult", "0.5,1.0", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("delay (s) vs volume increase (%): y = "));
    assert!(stdout(&o).contains("(R²="));
    let xy = fs::read_to_string(out.join("sweep_delta.csv")).unwrap();
    assert_eq!(xy.lines().collect::<Vec<_>>()[..2], ["increase_pct,delta_mean_s", xy.lines().nth(1).unwrap()]);
    assert!(xy.lines().nth(1).unwrap().starts_with("-50,"));
    assert!(out.join("sweep_fit.csv").is_file());

    let o = forksim(&["sweep", "--scenario", path_str(&s), "--mult", "1.0", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    let o = forksim(&["sweep", "--scenario", path_str(&s), "--mult", "1.0,1.0", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(3));
    let o = forksim(&["sweep", "--scenario", path_str(&s), "--mult", "1.0,-2", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
}

/// Observed file built from a run's record files, tagged by replication.
fn observed_from_run(run: &Path, reps: u32, shift: f64) -> String {
    let mut text = String::from("rep,tau_s\n");
    for rep in 0..reps {
        let records = fs::read_to_string(run.join(format!("rep_{rep:03}.csv"))).unwrap();
        for line in records.lines().skip(1) {
            let tau: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
            text.push_str(&format!("{rep},{}\n", tau + shift));
        }
    }
    text
}

#[test]
fn validate_accepts_self_and_rejects_shift() {
    let tmp = tempfile::tempdir().unwrap();
    let s = scenario(tmp.path(), "s.txt", SHORT);
    let run = tmp.path().join("run");
    assert_eq!(forksim(&["run", "--scenario", path_str(&s), "--out", path_str(&run)]).status.code(), Some(0));

    let same = scenario(tmp.path(), "same.csv", &observed_from_run(&run, 3, 0.0));
    let out = tmp.path().join("val");
    let o = forksim(&["validate", "--scenario", path_str(&s), "--observed", path_str(&same), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("SOV") && text.contains("alpha_F"));
    assert!(text.contains("accepted"), "{text}");
    assert!(out.join("validate_anova.csv").is_file());

    let shifted = scenario(tmp.path(), "shifted.csv", &observed_from_run(&run, 3, 100.0));
    let o = forksim(&["validate", "--scenario", path_str(&s), "--observed", path_str(&shifted), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("rejected"), "{}", stdout(&o));
}

#[test]
fn validate_rejects_malformed_observations() {
    let tmp = tempfile::tempdir().unwrap();
    let s = scenario(tmp.path(), "s.txt", SHORT);
    let out = tmp.path().join("val");
    for (name, body) in [
        ("nocol.csv", "speed\n1\n2\n3\n"),
        ("text.csv", "tau_s\n12\nabc\n30\n"),
        ("negative.csv", "tau_s\n12\n-4\n30\n"),
        ("empty.csv", "tau_s\n"),
        ("few.csv", "tau_s\n12\n"),
        ("blocks.csv", "rep,tau_s\n0,12\n1,14\n"),
    ] {
        let p = scenario(tmp.path(), name, body);
        let o = forksim(&["validate", "--scenario", path_str(&s), "--observed", path_str(&p), "--out", path_str(&out)]);
        assert_eq!(o.status.code(), Some(2), "{name}: {}", stderr(&o));
    }
}
