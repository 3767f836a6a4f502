//! Least-squares polynomial fitting for two-column time series.
//!
//! The pipeline is: [`ingest`] a CSV into a [`Series`], [`fit`] a polynomial
//! in a scaled domain with a Householder QR solve, score it with [`metrics`],
//! inspect quadratic structure with [`analysis`], and draw the data and the
//! fitted curve with [`plot`]. [`report`] renders the line-oriented summary
//! consumed by the command-line tool.
//!
//! ```
//! use quadfit::{fit_polynomial, fit_report, Series};
//!
//! let xs: Vec<f64> = (1..=12).map(f64::from).collect();
//! let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x * x - 2.0 * x + 1.0).collect();
//! let series = Series::new(xs, ys).unwrap();
//!
//! let (model, _window) = fit_polynomial(&series, 2).unwrap();
//! let report = fit_report(&model, &series).unwrap();
//! assert!((model.coeffs()[2] - 3.0).abs() < 1e-9);
//! assert!((report.r_squared - 1.0).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod error;
pub mod fit;
pub mod ingest;
pub mod linalg;
pub mod metrics;
pub mod plot;
pub mod poly;
pub mod report;
pub mod series;

pub use analysis::{
    discriminant, from_vertex_form, quadratic_roots, to_vertex_form, RootSet, VertexForm,
};
pub use error::{AnalysisError, Error, FitError, IngestError, MetricsError, PlotError};
pub use fit::{
    build_design_matrix, convert_domain, fit_polynomial, sample_curve, solve_least_squares,
    DomainWindow, DEFAULT_CURVE_SAMPLES, DEFAULT_DEGREE,
};
pub use ingest::{parse_csv, validate_series, write_csv, CsvSchema};
pub use linalg::Matrix;
pub use metrics::{fit_report, r_squared, residuals, FitReport};
pub use plot::{format_equation, month_ticks, render_plot, PlotSpec, Tick};
pub use poly::{eval_poly, PolynomialModel};
pub use report::{AnalysisSummary, Report};
pub use series::Series;
