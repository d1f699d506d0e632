//! RCBD ANOVA, F tail probabilities, Duncan grouping and OLS.

mod anova;
mod dmrt;
mod duncan_table;
mod fdist;
mod regression;

pub use anova::{anova_rcbd, AnovaRow, AnovaTable, FTest, Source};
pub use dmrt::{dmrt, duncan_ssr, protected_dmrt, DmrtGrouping};
pub use fdist::{beta_inc, f_pvalue};
pub use regression::{linear_regression, RegressionFit};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatsError {
    #[error("need at least 2 blocks, got {0}")]
    TooFewBlocks(usize),
    #[error("need at least 2 treatments, got {0}")]
    TooFewTreatments(usize),
    #[error("every block must have a value for every treatment")]
    Ragged,
    #[error("no Duncan table shipped for alpha = {0}")]
    UnsupportedAlpha(f64),
    #[error("regression predictor has no spread")]
    DegenerateFit,
    #[error("{0}")]
    InvalidInput(&'static str),
}

/// Tail probability as printed in tables: four decimals, tiny values as
/// `< 0.0001`.
pub fn format_p(p: f64) -> String {
    if p < 1e-4 {
        String::from("< 0.0001")
    } else {
        alloc::format!("{p:.4}")
    }
}
