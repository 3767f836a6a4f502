use std::fmt;

use crate::error::FitError;

/// A polynomial in the monomial basis, coefficients in ascending power order:
/// `coeffs[0]` is the constant term, `coeffs[2]` the quadratic one.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialModel {
    coeffs: Vec<f64>,
}

impl PolynomialModel {
    pub fn new(coeffs: Vec<f64>) -> Result<Self, FitError> {
        if coeffs.is_empty() {
            return Err(FitError::InvalidDegree);
        }
        if let Some(index) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(FitError::NonFinite { index });
        }
        Ok(PolynomialModel { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        eval_poly(&self.coeffs, x)
    }

    /// `(a, b, c)` of `a x^2 + b x + c`, if this is a degree-2 model.
    pub fn quadratic(&self) -> Option<(f64, f64, f64)> {
        match self.coeffs[..] {
            [c, b, a] => Some((a, b, c)),
            _ => None,
        }
    }
}

impl fmt::Display for PolynomialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if k != self.degree() {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Evaluates `sum(coeffs[k] * x^k)` by Horner's scheme. An empty slice is
/// the zero polynomial.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
