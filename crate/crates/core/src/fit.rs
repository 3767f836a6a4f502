//! Least-squares polynomial fitting.
//!
//! Abscissae are mapped affinely onto `[-1, 1]` before the Vandermonde matrix
//! is formed, the scaled problem is solved by Householder QR, and the
//! coefficients are composed back with the affine map so the returned model
//! is in the caller's units.

use crate::error::FitError;
use crate::linalg::{HouseholderQr, Matrix};
use crate::poly::{eval_poly, PolynomialModel};
use crate::series::Series;

pub const DEFAULT_DEGREE: usize = 2;
pub const DEFAULT_CURVE_SAMPLES: usize = 200;

/// Abscissa bounds used to scale the fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainWindow {
    x_min: f64,
    x_max: f64,
}

impl DomainWindow {
    pub fn new(x_min: f64, x_max: f64) -> Result<Self, FitError> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(FitError::InvalidWindow { x_min, x_max });
        }
        Ok(DomainWindow { x_min, x_max })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// `(scale, offset)` such that `t = scale * x + offset` maps the window
    /// onto `[-1, 1]`.
    pub fn affine(&self) -> (f64, f64) {
        let width = self.x_max - self.x_min;
        (2.0 / width, -(self.x_min + self.x_max) / width)
    }

    pub fn to_scaled(&self, x: f64) -> f64 {
        (2.0 * x - self.x_min - self.x_max) / (self.x_max - self.x_min)
    }
}

/// Vandermonde matrix with entry `(i, k) = xs[i]^k`; `0^0` is 1.
pub fn build_design_matrix(xs: &[f64], degree: usize) -> Matrix {
    let cols = degree + 1;
    let mut m = Matrix::zeros(xs.len(), cols);
    for (i, &x) in xs.iter().enumerate() {
        let mut p = 1.0;
        for k in 0..cols {
            m.set(i, k, p);
            p *= x;
        }
    }
    m
}

/// Coefficients minimizing `||design * c - ys||_2`, via Householder QR.
pub fn solve_least_squares(design: &Matrix, ys: &[f64]) -> Result<Vec<f64>, FitError> {
    if design.rows() != ys.len() {
        return Err(FitError::DimensionMismatch {
            rows: design.rows(),
            len: ys.len(),
        });
    }
    HouseholderQr::new(design)?.solve(ys)
}

/// Re-expresses `p(t)`, `t = (2x - x_min - x_max) / (x_max - x_min)`, as a
/// polynomial in `x`.
pub fn convert_domain(scaled_coeffs: &[f64], window: &DomainWindow) -> Vec<f64> {
    let (scale, offset) = window.affine();
    let Some((&top, rest)) = scaled_coeffs.split_last() else {
        return Vec::new();
    };
    // Horner over polynomials: q <- q * (scale x + offset) + p_k
    let mut q = vec![top];
    for &pk in rest.iter().rev() {
        let mut next = vec![0.0; q.len() + 1];
        for (j, &qj) in q.iter().enumerate() {
            next[j] += qj * offset;
            next[j + 1] += qj * scale;
        }
        next[0] += pk;
        q = next;
    }
    q
}

/// Fits a degree-`degree` polynomial to `series` by least squares.
pub fn fit_polynomial(
    series: &Series,
    degree: usize,
) -> Result<(PolynomialModel, DomainWindow), FitError> {
    check_fit_preconditions(series, degree)?;
    let (x_min, x_max) = series.x_range();
    let window = DomainWindow::new(x_min, x_max).map_err(|_| FitError::DegenerateAbscissa {
        needed: 2,
        distinct: 1,
    })?;

    let scaled: Vec<f64> = series.xs().iter().map(|&x| window.to_scaled(x)).collect();
    let design = build_design_matrix(&scaled, degree);
    let scaled_coeffs = solve_least_squares(&design, series.ys())?;
    let model = PolynomialModel::new(convert_domain(&scaled_coeffs, &window))?;
    Ok((model, window))
}

pub(crate) fn check_fit_preconditions(series: &Series, degree: usize) -> Result<(), FitError> {
    let needed = degree + 1;
    if series.len() < needed {
        return Err(FitError::InsufficientData {
            degree,
            needed,
            got: series.len(),
        });
    }
    let distinct = series.distinct_x();
    if distinct < needed {
        return Err(FitError::DegenerateAbscissa { needed, distinct });
    }
    Ok(())
}

/// `n` points `(x, model(x))` with `x` evenly spaced over `[x_min, x_max]`,
/// both endpoints included exactly.
pub fn sample_curve(
    model: &PolynomialModel,
    x_min: f64,
    x_max: f64,
    n: usize,
) -> Result<Vec<(f64, f64)>, FitError> {
    if n < 2 {
        return Err(FitError::InvalidSampleCount(n));
    }
    DomainWindow::new(x_min, x_max)?;
    let step = (x_max - x_min) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| {
            let x = if i == n - 1 {
                x_max
            } else {
                x_min + i as f64 * step
            };
            (x, eval_poly(model.coeffs(), x))
        })
        .collect())
}
