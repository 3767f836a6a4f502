//! Command-line pipeline: read CSV, fit, score, analyse, write the report and
//! optionally an SVG figure.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{CommandFactory, Parser};
use quadfit::{
    fit_polynomial, fit_report, parse_csv, render_plot, validate_series, CsvSchema, Error,
    PlotSpec, Report,
};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for data, numeric or I/O failures.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

/// Fit a polynomial to a two-column CSV time series, report R^2 and the
/// quadratic's roots and vertex, and optionally plot the fit as SVG.
#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "quadfit", version)]
pub struct CliConfig {
    /// CSV file to read, or `-` for standard input.
    #[arg(short = 'i', long = "input", value_name = "PATH")]
    pub input: String,

    /// Write the figure to this SVG file.
    #[arg(long = "svg", value_name = "PATH")]
    pub svg: Option<PathBuf>,

    /// Write the report here instead of standard output (`-` is stdout).
    #[arg(long = "report", value_name = "PATH", default_value = "-")]
    pub report: String,

    /// Polynomial degree.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=10))]
    pub degree: u8,

    /// Location or context shown on the figure title, e.g. "Kyiv, Shcherbakovskaya St.".
    #[arg(long, default_value = "")]
    pub description: String,

    /// Name of the measured quantity, e.g. "PM2.5".
    #[arg(long = "metric", default_value = "")]
    pub metric_name: String,

    /// Y-axis label, e.g. "PM2.5 Index".
    #[arg(long = "y-label", default_value = "")]
    pub y_label: String,

    /// Header of the abscissa column.
    #[arg(long = "x-col", default_value = "Month")]
    pub x_column: String,

    /// Header of the value column.
    #[arg(long = "y-col", default_value = "Values")]
    pub y_column: String,
}

/// Parses `argv` (including the program name). Help and version requests
/// come back as errors too; [`clap::Error::exit_code`] tells them apart.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    CliConfig::try_parse_from(argv)
}

/// Text to print for a usage error: clap's message, followed by the usage
/// line when clap left it out.
pub fn usage_error_text(err: &clap::Error) -> String {
    let mut text = err.render().to_string();
    if !text.contains("Usage:") {
        let usage = CliConfig::command().render_usage().to_string();
        text = format!("{}\n\n{usage}\n", text.trim_end());
    }
    text
}

/// A pipeline failure tagged with the stage it happened in.
#[derive(Debug)]
pub struct StageError {
    pub stage: &'static str,
    pub kind: &'static str,
    pub message: String,
}

impl std::fmt::Display for StageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} failed: {}: {}", self.stage, self.kind, self.message)
    }
}

fn stage<E: Into<Error>>(name: &'static str) -> impl FnOnce(E) -> StageError {
    move |e| {
        let e = e.into();
        StageError {
            stage: name,
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

fn io_stage<'a>(name: &'static str, path: &'a str) -> impl FnOnce(io::Error) -> StageError + 'a {
    move |e| StageError {
        stage: name,
        kind: "Io",
        message: format!("{path}: {e}"),
    }
}

/// Runs the pipeline and returns the rendered report and SVG without
/// touching the filesystem for output.
pub fn analyse<R: Read>(
    config: &CliConfig,
    input: R,
) -> Result<(String, Option<String>), StageError> {
    let schema = CsvSchema::new(config.x_column.clone(), config.y_column.clone(), ',')
        .map_err(stage("ingest"))?;
    let series = parse_csv(input, &schema).map_err(stage("ingest"))?;
    let degree = usize::from(config.degree);
    validate_series(&series, degree).map_err(stage("validate"))?;
    let (model, _window) = fit_polynomial(&series, degree).map_err(stage("fit"))?;
    let fit = fit_report(&model, &series).map_err(stage("metrics"))?;

    let svg = match config.svg {
        Some(_) => {
            let spec = PlotSpec::new(
                config.description.clone(),
                config.metric_name.clone(),
                config.y_label.clone(),
            );
            Some(render_plot(&series, &model, &fit, &spec).map_err(stage("plot"))?)
        }
        None => None,
    };
    let report = Report::new(fit);
    Ok((report.to_string(), svg))
}

fn execute(config: &CliConfig, stdout: &mut dyn Write) -> Result<(), StageError> {
    let (report, svg) = if config.input == "-" {
        analyse(config, io::stdin().lock())?
    } else {
        let file = File::open(&config.input).map_err(io_stage("read", &config.input))?;
        analyse(config, BufReader::new(file))?
    };

    if let (Some(path), Some(svg)) = (&config.svg, &svg) {
        let shown = path.display().to_string();
        std::fs::write(path, svg).map_err(io_stage("write", &shown))?;
    }
    if config.report == "-" {
        stdout
            .write_all(report.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(io_stage("write", "<stdout>"))?;
    } else {
        std::fs::write(&config.report, report).map_err(io_stage("write", &config.report))?;
    }
    Ok(())
}

/// Runs a parsed configuration, printing a one-line diagnostic to `stderr`
/// on failure. Returns the process exit code.
pub fn run(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(config, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "quadfit: {e}");
            EXIT_FAILURE
        }
    }
}
