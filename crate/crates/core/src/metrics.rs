//! Residuals, sums of squares and the coefficient of determination.

use crate::error::MetricsError;
use crate::poly::PolynomialModel;
use crate::series::Series;

/// Per-observation tolerance on `ss_res` for treating a fit of constant data
/// as perfect.
const PERFECT_FIT_TOLERANCE: f64 = 1e-12;

/// Goodness-of-fit summary for a model against a series.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub model: PolynomialModel,
    pub ss_res: f64,
    pub ss_tot: f64,
    pub r_squared: f64,
    pub n: usize,
}

/// Neumaier's compensated summation.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

pub(crate) fn mean(values: &[f64]) -> f64 {
    compensated_sum(values.iter().copied()) / values.len() as f64
}

/// `y_i - model(x_i)` for every observation.
pub fn residuals(model: &PolynomialModel, series: &Series) -> Vec<f64> {
    series.iter().map(|(x, y)| y - model.eval(x)).collect()
}

fn sums_of_squares(ys: &[f64], fitted: &[f64]) -> (f64, f64) {
    let y_bar = mean(ys);
    let ss_res = compensated_sum(ys.iter().zip(fitted).map(|(y, f)| (y - f) * (y - f)));
    let ss_tot = compensated_sum(ys.iter().map(|y| (y - y_bar) * (y - y_bar)));
    (ss_res, ss_tot)
}

fn ratio(ss_res: f64, ss_tot: f64, n: usize) -> Result<f64, MetricsError> {
    if ss_tot > 0.0 {
        Ok(1.0 - ss_res / ss_tot)
    } else if ss_res <= PERFECT_FIT_TOLERANCE * n as f64 {
        Ok(1.0)
    } else {
        Err(MetricsError::UndefinedRSquared { ss_res })
    }
}

/// `1 - ss_res / ss_tot`.
///
/// Constant `ys` make the ratio undefined; that case returns 1 when the fit
/// is perfect (up to `1e-12` per observation) and `UndefinedRSquared`
/// otherwise. Values below zero are possible for models that are not least
/// squares optima and are returned as is.
pub fn r_squared(series: &Series, fitted: &[f64]) -> Result<f64, MetricsError> {
    if fitted.len() != series.len() {
        return Err(MetricsError::LengthMismatch {
            observed: series.len(),
            fitted: fitted.len(),
        });
    }
    let (ss_res, ss_tot) = sums_of_squares(series.ys(), fitted);
    ratio(ss_res, ss_tot, series.len())
}

pub fn fit_report(model: &PolynomialModel, series: &Series) -> Result<FitReport, MetricsError> {
    let fitted: Vec<f64> = series.xs().iter().map(|&x| model.eval(x)).collect();
    let (ss_res, ss_tot) = sums_of_squares(series.ys(), &fitted);
    let r_squared = ratio(ss_res, ss_tot, series.len())?;
    Ok(FitReport {
        model: model.clone(),
        ss_res,
        ss_tot,
        r_squared,
        n: series.len(),
    })
}
