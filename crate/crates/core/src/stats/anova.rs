//! Randomized complete block ANOVA with replications as blocks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use super::fdist::f_pvalue;
use super::{format_p, StatsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Replication,
    Treatment,
    Error,
    Total,
}

/// F statistic of a tested row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FTest {
    Value { f: f64, p: f64 },
    /// Error mean square is zero while the tested one is not: F is infinite
    /// and the tail probability is zero.
    Infinite,
}

impl FTest {
    fn new(ms: f64, ms_err: f64, df: u32, df_err: u32) -> Self {
        if !(ms > 0.0) {
            // No variation between the tested groups.
            FTest::Value { f: 0.0, p: 1.0 }
        } else if ms_err > 0.0 {
            let f = ms / ms_err;
            FTest::Value { f, p: f_pvalue(f, df, df_err) }
        } else {
            FTest::Infinite
        }
    }

    pub fn f(&self) -> f64 {
        match self {
            FTest::Value { f, .. } => *f,
            FTest::Infinite => f64::INFINITY,
        }
    }

    pub fn p(&self) -> f64 {
        match self {
            FTest::Value { p, .. } => *p,
            FTest::Infinite => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnovaRow {
    pub source: Source,
    pub df: u32,
    pub ss: f64,
    /// `None` on the total row.
    pub ms: Option<f64>,
    /// `None` on the error and total rows.
    pub test: Option<FTest>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnovaTable {
    /// Replication, treatment, error and total, in that order.
    pub rows: [AnovaRow; 4],
}

impl AnovaTable {
    /// Builds the table from a block/treatment/error decomposition.
    pub fn from_decomposition(rep: (u32, f64), trt: (u32, f64), err: (u32, f64)) -> Result<Self, StatsError> {
        if rep.0 == 0 || trt.0 == 0 || err.0 == 0 {
            return Err(StatsError::InvalidInput("every source needs at least one degree of freedom"));
        }
        let ms = |(df, ss): (u32, f64)| ss / df as f64;
        let ms_err = ms(err);
        let row = |source, (df, ss): (u32, f64)| AnovaRow {
            source,
            df,
            ss,
            ms: Some(ms((df, ss))),
            test: Some(FTest::new(ms((df, ss)), ms_err, df, err.0)),
        };
        Ok(AnovaTable {
            rows: [
                row(Source::Replication, rep),
                row(Source::Treatment, trt),
                AnovaRow {
                    source: Source::Error,
                    df: err.0,
                    ss: err.1,
                    ms: Some(ms_err),
                    test: None,
                },
                AnovaRow {
                    source: Source::Total,
                    df: rep.0 + trt.0 + err.0,
                    ss: rep.1 + trt.1 + err.1,
                    ms: None,
                    test: None,
                },
            ],
        })
    }

    pub fn replication(&self) -> &AnovaRow {
        &self.rows[0]
    }

    pub fn treatment(&self) -> &AnovaRow {
        &self.rows[1]
    }

    pub fn error(&self) -> &AnovaRow {
        &self.rows[2]
    }

    pub fn total(&self) -> &AnovaRow {
        &self.rows[3]
    }

    /// All sums of squares are zero (every cell equal).
    pub fn is_degenerate(&self) -> bool {
        self.total().ss == 0.0
    }

    /// Aligned text with columns SOV, DF, SS, MS, F and the F tail
    /// probability. `treatment_label` names the treatment row.
    pub fn to_text(&self, treatment_label: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<22} {:>4} {:>14} {:>12} {:>10} {:>10}",
            "SOV", "DF", "SS", "MS", "F", "alpha_F"
        );
        for r in &self.rows {
            let (f, p) = test_cells(r);
            let _ = writeln!(
                out,
                "{:<22} {:>4} {:>14.2} {:>12} {:>10} {:>10}",
                label(r.source, treatment_label),
                r.df,
                r.ss,
                r.ms.map(|m| alloc::format!("{m:.2}")).unwrap_or_default(),
                f,
                p
            );
        }
        out
    }

    /// CSV with header `sov,df,ss,ms,f,alpha_f`.
    pub fn to_csv(&self, treatment_label: &str) -> String {
        let mut out = String::from("sov,df,ss,ms,f,alpha_f\n");
        for r in &self.rows {
            let (f, p) = test_cells(r);
            let _ = writeln!(
                out,
                "{},{},{:.6},{},{},{}",
                label(r.source, treatment_label),
                r.df,
                r.ss,
                r.ms.map(|m| alloc::format!("{m:.6}")).unwrap_or_default(),
                f,
                p
            );
        }
        out
    }
}

impl fmt::Display for AnovaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("Treatment"))
    }
}

fn label(source: Source, treatment: &str) -> &str {
    match source {
        Source::Replication => "Replication",
        Source::Treatment => treatment,
        Source::Error => "Error",
        Source::Total => "Total",
    }
}

fn test_cells(r: &AnovaRow) -> (String, String) {
    match r.test {
        None => (String::new(), String::new()),
        Some(FTest::Value { f, p }) => (alloc::format!("{f:.2}"), format_p(p)),
        Some(FTest::Infinite) => (String::from("inf"), format_p(0.0)),
    }
}

/// RCBD decomposition of `data[block][treatment]`.
pub fn anova_rcbd(data: &[Vec<f64>]) -> Result<AnovaTable, StatsError> {
    let b = data.len();
    if b < 2 {
        return Err(StatsError::TooFewBlocks(b));
    }
    let t = data[0].len();
    if t < 2 {
        return Err(StatsError::TooFewTreatments(t));
    }
    if data.iter().any(|row| row.len() != t) {
        return Err(StatsError::Ragged);
    }
    if data.iter().flatten().any(|x| !x.is_finite()) {
        return Err(StatsError::InvalidInput("every cell must be finite"));
    }
    let n = (b * t) as f64;
    let grand = data.iter().flatten().sum::<f64>() / n;
    let block_means: Vec<f64> = data.iter().map(|r| r.iter().sum::<f64>() / t as f64).collect();
    let trt_means: Vec<f64> = (0..t)
        .map(|j| data.iter().map(|r| r[j]).sum::<f64>() / b as f64)
        .collect();

    let sq = |x: f64| x * x;
    let ss_total: f64 = data.iter().flatten().map(|x| sq(x - grand)).sum();
    // Equal means give exactly zero even when the grand mean rounds differently.
    let spread = |means: &[f64], n: usize| {
        if means.iter().all(|m| *m == means[0]) {
            0.0
        } else {
            n as f64 * means.iter().map(|m| sq(m - grand)).sum::<f64>()
        }
    };
    let ss_rep = spread(&block_means, t);
    let ss_trt = spread(&trt_means, b);
    let mut ss_err = 0.0;
    for (i, row) in data.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            ss_err += sq(x - block_means[i] - trt_means[j] + grand);
        }
    }
    let df_rep = (b - 1) as u32;
    let df_trt = (t - 1) as u32;
    let df_err = df_rep * df_trt;
    let mut table = AnovaTable::from_decomposition((df_rep, ss_rep), (df_trt, ss_trt), (df_err, ss_err))?;
    // Report the directly computed total rather than the sum of the parts.
    table.rows[3].ss = ss_total;
    Ok(table)
}
