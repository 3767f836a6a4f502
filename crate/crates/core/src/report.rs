//! Line-oriented `key=value` summary of a fit.
//!
//! Field order is fixed: `degree`, `coeff[k]` ascending, `ss_res`, `ss_tot`,
//! `r_squared`, then for quadratics `discriminant`, `roots`, `vertex_h`,
//! `vertex_k` and `equation`. Reals use C-style `%.10e` (`1.2345000000e+01`)
//! except `r_squared`, which is fixed with six decimals.

use std::fmt;

use crate::analysis::{discriminant, quadratic_roots, to_vertex_form, RootSet, VertexForm};
use crate::error::AnalysisError;
use crate::metrics::FitReport;
use crate::plot::format_equation;

/// Quadratic structure of a degree-2 fit.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisSummary {
    pub discriminant: f64,
    pub roots: RootSet,
    pub vertex: VertexForm,
}

impl AnalysisSummary {
    pub fn from_coefficients(a: f64, b: f64, c: f64) -> Result<Self, AnalysisError> {
        Ok(AnalysisSummary {
            discriminant: discriminant(a, b, c),
            roots: quadratic_roots(a, b, c)?,
            vertex: to_vertex_form(a, b, c)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub fit: FitReport,
    pub analysis: Option<AnalysisSummary>,
}

impl Report {
    /// Builds the report, adding the quadratic analysis when the model has
    /// degree 2. A degree-2 model whose leading coefficient is exactly zero
    /// is treated as linear and gets no analysis.
    pub fn new(fit: FitReport) -> Self {
        let analysis = fit
            .model
            .quadratic()
            .and_then(|(a, b, c)| AnalysisSummary::from_coefficients(a, b, c).ok());
        Report { fit, analysis }
    }
}

/// Formats like C's `%.{precision}e`: mantissa, `e`, sign, at least two
/// exponent digits.
pub fn format_sci(value: f64, precision: usize) -> String {
    if !value.is_finite() {
        return format!("{value}");
    }
    let s = format!("{value:.precision$e}");
    let (mantissa, exponent) = s.split_once('e').expect("exponent marker");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exponent),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

fn sci(value: f64) -> String {
    format_sci(value, 10)
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fit = &self.fit;
        writeln!(f, "degree={}", fit.model.degree())?;
        for (k, c) in fit.model.coeffs().iter().enumerate() {
            writeln!(f, "coeff[{k}]={}", sci(*c))?;
        }
        writeln!(f, "ss_res={}", sci(fit.ss_res))?;
        writeln!(f, "ss_tot={}", sci(fit.ss_tot))?;
        writeln!(f, "r_squared={:.6}", fit.r_squared)?;
        if let Some(analysis) = &self.analysis {
            writeln!(f, "discriminant={}", sci(analysis.discriminant))?;
            let roots = analysis.roots.roots();
            if roots.is_empty() {
                writeln!(f, "roots=none")?;
            } else {
                let joined: Vec<String> = roots.iter().map(|r| sci(*r)).collect();
                writeln!(f, "roots={}", joined.join(","))?;
            }
            writeln!(f, "vertex_h={}", sci(analysis.vertex.h))?;
            writeln!(f, "vertex_k={}", sci(analysis.vertex.k))?;
            let equation = format_equation(&fit.model, fit.r_squared).replace('\n', "; ");
            writeln!(f, "equation={equation}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolynomialModel;

    #[test]
    fn c_style_scientific() {
        assert_eq!(format_sci(12.345, 10), "1.2345000000e+01");
        assert_eq!(format_sci(0.0, 10), "0.0000000000e+00");
        assert_eq!(format_sci(-1e-8, 10), "-1.0000000000e-08");
        assert_eq!(format_sci(6.02e123, 3), "6.020e+123");
        assert_eq!(format_sci(1.0, 0), "1e+00");
    }

    fn fit(coeffs: &[f64]) -> FitReport {
        FitReport {
            model: PolynomialModel::new(coeffs.to_vec()).unwrap(),
            ss_res: 0.5,
            ss_tot: 10.0,
            r_squared: 0.95,
            n: 12,
        }
    }

    #[test]
    fn quadratic_report_layout() {
        let report = Report::new(fit(&[6.0, -5.0, 1.0]));
        let expected = "\
degree=2
coeff[0]=6.0000000000e+00
coeff[1]=-5.0000000000e+00
coeff[2]=1.0000000000e+00
ss_res=5.0000000000e-01
ss_tot=1.0000000000e+01
r_squared=0.950000
discriminant=1.0000000000e+00
roots=2.0000000000e+00,3.0000000000e+00
vertex_h=2.5000000000e+00
vertex_k=-2.5000000000e-01
equation=Fitted curve: 1.0000x^2 + -5.0000x + 6.0000; R^2 = 0.9500
";
        assert_eq!(report.to_string(), expected);
    }

    #[test]
    fn no_real_roots_and_double_root() {
        let report = Report::new(fit(&[1.0, 0.0, 1.0]));
        assert!(report.to_string().contains("\nroots=none\n"));
        let report = Report::new(fit(&[1.0, -2.0, 1.0]));
        assert!(report.to_string().contains("\nroots=1.0000000000e+00\n"));
    }

    #[test]
    fn linear_report_has_no_analysis() {
        let report = Report::new(fit(&[1.0, 2.0]));
        let text = report.to_string();
        assert!(text.starts_with("degree=1\ncoeff[0]="));
        assert!(text.ends_with("r_squared=0.950000\n"));
        assert!(!text.contains("equation="));
    }

    #[test]
    fn zero_leading_coefficient_skips_analysis() {
        let report = Report::new(fit(&[1.0, 2.0, 0.0]));
        assert!(report.analysis.is_none());
        assert!(!report.to_string().contains("roots="));
    }
}
