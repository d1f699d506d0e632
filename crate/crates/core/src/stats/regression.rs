//! Ordinary least squares on one predictor.

use core::fmt;

use super::StatsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// The responses had no variance; `r_squared` is reported as 0.
    pub zero_variance: bool,
}

impl RegressionFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

impl fmt::Display for RegressionFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.intercept < 0.0 { '-' } else { '+' };
        write!(
            f,
            "y = {:.4}·x {} {:.4} (R²={:.4})",
            self.slope,
            sign,
            self.intercept.abs(),
            self.r_squared
        )
    }
}

pub fn linear_regression(xs: &[f64], ys: &[f64]) -> Result<RegressionFit, StatsError> {
    if xs.len() != ys.len() {
        return Err(StatsError::InvalidInput("xs and ys differ in length"));
    }
    if xs.len() < 2 {
        return Err(StatsError::InvalidInput("regression needs at least two points"));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(StatsError::InvalidInput("regression input must be finite"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(StatsError::DegenerateFit);
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let (r_squared, zero_variance) = if ss_tot == 0.0 {
        (0.0, true)
    } else {
        ((1.0 - ss_res / ss_tot).clamp(0.0, 1.0), false)
    };
    Ok(RegressionFit {
        slope,
        intercept,
        r_squared,
        zero_variance,
    })
}
