//! Error types for each pipeline stage.
//!
//! Every error exposes [`kind`](Error::kind), the variant name, which the CLI
//! prints in its diagnostics so callers can match on a stable token.

use thiserror::Error;

/// Failures while building or solving a least-squares fit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("polynomial must have at least one coefficient")]
    InvalidDegree,
    #[error("series is empty")]
    EmptySeries,
    #[error("x and y have different lengths ({xs} vs {ys})")]
    LengthMismatch { xs: usize, ys: usize },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("need at least {needed} points for degree {degree}, got {got}")]
    InsufficientData {
        degree: usize,
        needed: usize,
        got: usize,
    },
    #[error("need at least {needed} distinct x values, got {distinct}")]
    DegenerateAbscissa { needed: usize, distinct: usize },
    #[error("design matrix has {rows} rows but {cols} columns")]
    Underdetermined { rows: usize, cols: usize },
    #[error("design matrix is rank deficient at column {column}")]
    RankDeficient { column: usize },
    #[error("design matrix has {rows} rows but {len} observations were given")]
    DimensionMismatch { rows: usize, len: usize },
    #[error("window [{x_min}, {x_max}] is empty or not finite")]
    InvalidWindow { x_min: f64, x_max: f64 },
    #[error("sample count must be at least 2, got {0}")]
    InvalidSampleCount(usize),
}

impl FitError {
    pub fn kind(&self) -> &'static str {
        match self {
            FitError::InvalidDegree => "InvalidDegree",
            FitError::EmptySeries => "EmptySeries",
            FitError::LengthMismatch { .. } => "LengthMismatch",
            FitError::NonFinite { .. } => "NonFinite",
            FitError::InsufficientData { .. } => "InsufficientData",
            FitError::DegenerateAbscissa { .. } => "DegenerateAbscissa",
            FitError::Underdetermined { .. } => "Underdetermined",
            FitError::RankDeficient { .. } => "RankDeficient",
            FitError::DimensionMismatch { .. } => "DimensionMismatch",
            FitError::InvalidWindow { .. } => "InvalidWindow",
            FitError::InvalidSampleCount(_) => "InvalidSampleCount",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("leading coefficient is zero; the polynomial is not quadratic")]
    NotQuadratic,
}

impl AnalysisError {
    pub fn kind(&self) -> &'static str {
        match self {
            AnalysisError::NotQuadratic => "NotQuadratic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    #[error("R^2 is undefined: y is constant but the residual sum of squares is {ss_res:e}")]
    UndefinedRSquared { ss_res: f64 },
    #[error("fitted vector has {fitted} values for {observed} observations")]
    LengthMismatch { observed: usize, fitted: usize },
}

impl MetricsError {
    pub fn kind(&self) -> &'static str {
        match self {
            MetricsError::UndefinedRSquared { .. } => "UndefinedRSquared",
            MetricsError::LengthMismatch { .. } => "LengthMismatch",
        }
    }
}

/// CSV ingestion failures. Row numbers count data rows from 1; the header
/// is not counted.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IngestError {
    #[error("invalid schema: {0}")]
    InvalidSchema(String),
    #[error("column {0:?} not found in header")]
    MissingColumn(String),
    #[error("row {row} has {found} fields, header has {expected}")]
    MalformedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, column {column:?}: cannot parse {value:?} as a number")]
    NonNumericValue {
        row: usize,
        column: String,
        value: String,
    },
    #[error("no data rows after the header")]
    EmptyData,
    #[error("input is empty (no header row)")]
    MissingHeader,
    #[error("invalid UTF-8 in {location}")]
    InvalidUtf8 { location: String },
    #[error("malformed CSV: {0}")]
    Syntax(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl IngestError {
    pub fn kind(&self) -> &'static str {
        match self {
            IngestError::InvalidSchema(_) => "InvalidSchema",
            IngestError::MissingColumn(_) => "MissingColumn",
            IngestError::MalformedRow { .. } => "MalformedRow",
            IngestError::NonNumericValue { .. } => "NonNumericValue",
            IngestError::EmptyData => "EmptyData",
            IngestError::MissingHeader => "MissingHeader",
            IngestError::InvalidUtf8 { .. } => "InvalidUtf8",
            IngestError::Syntax(_) => "Syntax",
            IngestError::Io(_) => "Io",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlotError {
    #[error("invalid plot spec: {0}")]
    InvalidSpec(&'static str),
    #[error("series and report disagree: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Fit(#[from] FitError),
}

impl PlotError {
    pub fn kind(&self) -> &'static str {
        match self {
            PlotError::InvalidSpec(_) => "InvalidSpec",
            PlotError::Inconsistent(_) => "Inconsistent",
            PlotError::Fit(e) => e.kind(),
        }
    }
}

/// Any error the pipeline can produce.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Plot(#[from] PlotError),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Fit(e) => e.kind(),
            Error::Analysis(e) => e.kind(),
            Error::Metrics(e) => e.kind(),
            Error::Ingest(e) => e.kind(),
            Error::Plot(e) => e.kind(),
        }
    }
}
