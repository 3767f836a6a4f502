//! Deterministic SVG rendering of a scatter plot with its fitted curve.
//!
//! Layout: title above the plotting area, grid lines at tick positions, black
//! data markers, a purple polyline through the sampled fit, and a legend
//! holding the formatted equation and R^2. Coordinates are written with two
//! decimals and nothing depends on the clock or the platform, so equal inputs
//! give byte-identical documents.

use std::fmt::Write as _;

use crate::error::{FitError, PlotError};
use crate::fit::{sample_curve, DEFAULT_CURVE_SAMPLES};
use crate::metrics::FitReport;
use crate::poly::PolynomialModel;
use crate::series::{min_max, Series};

const MONTHS: [&str; 12] = [
    "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
];

const FONT_FAMILY: &str = "sans-serif";
const DATA_COLOR: &str = "black";
const CURVE_COLOR: &str = "purple";
const GRID_COLOR: &str = "#b0b0b0";

/// Fraction of the data+curve span added on each side of both axes.
const AXIS_PADDING: f64 = 0.05;

const MARGIN_LEFT: f64 = 100.0;
const MARGIN_RIGHT: f64 = 40.0;
const MARGIN_TOP: f64 = 90.0;
const MARGIN_BOTTOM: f64 = 80.0;

const TICK_FONT_SIZE: f64 = 13.0;
const LABEL_FONT_SIZE: f64 = 15.0;
const TITLE_FONT_SIZE: f64 = 18.0;
const LEGEND_FONT_SIZE: f64 = 14.0;
// rough advance width of a sans-serif glyph, in ems
const GLYPH_WIDTH_EM: f64 = 0.55;
const MARKER_RADIUS: f64 = 4.5;
const MAX_Y_TICKS: usize = 9;
const MAX_X_TICKS: usize = 12;

/// Labels and render parameters for a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// Location or context, shown on the title's second line.
    pub description: String,
    /// Name of the measured quantity, e.g. `PM2.5`.
    pub metric_name: String,
    pub y_label: String,
    pub width: u32,
    pub height: u32,
    pub curve_samples: usize,
}

impl PlotSpec {
    /// A 1200x700 figure with 200 curve samples.
    pub fn new(
        description: impl Into<String>,
        metric_name: impl Into<String>,
        y_label: impl Into<String>,
    ) -> Self {
        PlotSpec {
            description: description.into(),
            metric_name: metric_name.into(),
            y_label: y_label.into(),
            width: 1200,
            height: 700,
            curve_samples: DEFAULT_CURVE_SAMPLES,
        }
    }

    pub fn validate(&self) -> Result<(), PlotError> {
        if self.width == 0 || self.height == 0 {
            return Err(PlotError::InvalidSpec("width and height must be positive"));
        }
        if f64::from(self.width) <= MARGIN_LEFT + MARGIN_RIGHT
            || f64::from(self.height) <= MARGIN_TOP + MARGIN_BOTTOM
        {
            return Err(PlotError::InvalidSpec(
                "figure is too small for its margins",
            ));
        }
        if self.curve_samples < 2 {
            return Err(PlotError::InvalidSpec("curve_samples must be at least 2"));
        }
        Ok(())
    }
}

/// An axis tick: data-space position and its label.
#[derive(Debug, Clone, PartialEq)]
pub struct Tick {
    pub position: f64,
    pub label: String,
}

/// Legend text: `Fitted curve: ` followed by the terms in descending powers
/// with four decimals, joined by ` + ` (so negative coefficients show as
/// `+ -`), then `R^2` on a second line.
pub fn format_equation(model: &PolynomialModel, r_squared: f64) -> String {
    let terms: Vec<String> = model
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .map(|(k, c)| match k {
            0 => format!("{c:.4}"),
            1 => format!("{c:.4}x"),
            _ => format!("{c:.4}x^{k}"),
        })
        .collect();
    format!("Fitted curve: {}\nR^2 = {r_squared:.4}", terms.join(" + "))
}

/// Month ticks (`Jan` at 1 through `Dec` at 12) when `[x_min, x_max]` lies in
/// `[1, 12]`, restricted to months inside that interval. Otherwise up to 12
/// evenly spaced numeric ticks on a 1-2-5 step.
pub fn month_ticks(x_min: f64, x_max: f64) -> Vec<Tick> {
    if x_min >= 1.0 && x_max <= 12.0 {
        (1..=12)
            .filter(|&m| f64::from(m) >= x_min && f64::from(m) <= x_max)
            .map(|m| Tick {
                position: f64::from(m),
                label: MONTHS[m as usize - 1].to_owned(),
            })
            .collect()
    } else {
        numeric_ticks(x_min, x_max, MAX_X_TICKS)
    }
}

/// At most `max_count` ticks at multiples of a 1, 2 or 5 times power-of-ten
/// step inside `[lo, hi]`.
fn numeric_ticks(lo: f64, hi: f64, max_count: usize) -> Vec<Tick> {
    if hi.partial_cmp(&lo) != Some(std::cmp::Ordering::Greater) || max_count < 2 {
        return vec![Tick {
            position: lo,
            label: format_tick(lo, 0),
        }];
    }
    let raw = (hi - lo) / (max_count - 1) as f64;
    let exponent = raw.log10().floor();
    let magnitude = 10f64.powf(exponent);
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * magnitude)
        .find(|&s| s >= raw * (1.0 - 1e-12))
        .unwrap_or(10.0 * magnitude);
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };

    let first = (lo / step - 1e-9).ceil() as i64;
    let last = (hi / step + 1e-9).floor() as i64;
    (first..=last)
        .map(|i| {
            let position = (i as f64 * step).clamp(lo, hi);
            Tick {
                position,
                label: format_tick(position, decimals),
            }
        })
        .collect()
}

fn format_tick(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_owned()
    } else {
        s
    }
}

/// Fixed two-decimal coordinate; `-0.00` is written as `0.00`.
fn px(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            // XML 1.0 forbids most control characters
            c if (c as u32) < 0x20 && c != '\t' => out.push(' '),
            c => out.push(c),
        }
    }
    out
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let span = hi - lo;
    let pad = if span > 0.0 {
        AXIS_PADDING * span
    } else {
        (AXIS_PADDING * lo.abs()).max(0.5)
    };
    (lo - pad, hi + pad)
}

/// Data-to-pixel mapping for a figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotFrame {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    /// Plotting area in pixels: left, top, width, height.
    pub area: (f64, f64, f64, f64),
}

impl PlotFrame {
    /// Axis ranges cover the data and the curve sampled over the data's
    /// x-range, padded by 5% of the span on each side.
    pub fn new(series: &Series, curve: &[(f64, f64)], spec: &PlotSpec) -> Result<Self, PlotError> {
        spec.validate()?;
        let (x_lo, x_hi) = series.x_range();
        let curve_ys: Vec<f64> = curve.iter().map(|p| p.1).collect();
        let (cy_lo, cy_hi) = min_max(&curve_ys);
        let (dy_lo, dy_hi) = series.y_range();
        let (y_lo, y_hi) = (dy_lo.min(cy_lo), dy_hi.max(cy_hi));
        if !(y_lo.is_finite() && y_hi.is_finite()) {
            return Err(PlotError::InvalidSpec(
                "fitted curve is not finite over the data range",
            ));
        }
        let area = (
            MARGIN_LEFT,
            MARGIN_TOP,
            f64::from(spec.width) - MARGIN_LEFT - MARGIN_RIGHT,
            f64::from(spec.height) - MARGIN_TOP - MARGIN_BOTTOM,
        );
        Ok(PlotFrame {
            x_range: padded(x_lo, x_hi),
            y_range: padded(y_lo, y_hi),
            area,
        })
    }

    pub fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let (left, top, w, h) = self.area;
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            left + (x - x0) / (x1 - x0) * w,
            top + (y1 - y) / (y1 - y0) * h,
        )
    }

    pub fn from_px(&self, px: f64, py: f64) -> (f64, f64) {
        let (left, top, w, h) = self.area;
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            x0 + (px - left) / w * (x1 - x0),
            y1 - (py - top) / h * (y1 - y0),
        )
    }

    pub fn contains_px(&self, px: f64, py: f64) -> bool {
        let (left, top, w, h) = self.area;
        px >= left && px <= left + w && py >= top && py <= top + h
    }

    fn x_ticks(&self, data_x: (f64, f64)) -> Vec<Tick> {
        let (x0, x1) = self.x_range;
        month_ticks(data_x.0, data_x.1)
            .into_iter()
            .filter(|t| t.position >= x0 && t.position <= x1)
            .collect()
    }

    fn y_ticks(&self) -> Vec<Tick> {
        numeric_ticks(self.y_range.0, self.y_range.1, MAX_Y_TICKS)
    }
}

struct Legend {
    left: f64,
    top: f64,
    width: f64,
    height: f64,
}

const LEGEND_LINE: f64 = LEGEND_FONT_SIZE * 1.35;
const LEGEND_PAD: f64 = 10.0;
const LEGEND_SWATCH: f64 = 30.0;

impl Legend {
    /// Picks the candidate position covering the fewest markers and curve
    /// samples; ties go to the earlier candidate.
    fn place(frame: &PlotFrame, lines: usize, longest: usize, occupied: &[(f64, f64)]) -> Self {
        let width =
            3.0 * LEGEND_PAD + LEGEND_SWATCH + longest as f64 * LEGEND_FONT_SIZE * GLYPH_WIDTH_EM;
        let height = 2.0 * LEGEND_PAD + lines as f64 * LEGEND_LINE;
        let (left, top, w, h) = frame.area;
        let inset = 10.0;
        let xs = [
            left + inset,
            left + (w - width) / 2.0,
            left + w - width - inset,
        ];
        let ys = [top + inset, top + h - height - inset];
        let candidates = [
            (xs[0], ys[0]),
            (xs[2], ys[0]),
            (xs[1], ys[0]),
            (xs[0], ys[1]),
            (xs[2], ys[1]),
            (xs[1], ys[1]),
        ];
        let (lx, ly) = candidates
            .iter()
            .copied()
            .min_by_key(|&(lx, ly)| {
                occupied
                    .iter()
                    .filter(|&&(px, py)| {
                        px >= lx - MARKER_RADIUS
                            && px <= lx + width + MARKER_RADIUS
                            && py >= ly - MARKER_RADIUS
                            && py <= ly + height + MARKER_RADIUS
                    })
                    .count()
            })
            .expect("candidates is nonempty");
        Legend {
            left: lx,
            top: ly,
            width,
            height,
        }
    }
}

/// Renders the figure as a standalone SVG 1.1 document.
pub fn render_plot(
    series: &Series,
    model: &PolynomialModel,
    report: &FitReport,
    spec: &PlotSpec,
) -> Result<String, PlotError> {
    spec.validate()?;
    if report.n != series.len() {
        return Err(PlotError::Inconsistent(
            "report.n differs from the series length",
        ));
    }
    let data_x = series.x_range();
    let curve =
        sample_curve(model, data_x.0, data_x.1, spec.curve_samples).map_err(|e| match e {
            FitError::InvalidWindow { .. } => {
                PlotError::Inconsistent("series has a single x value")
            }
            other => PlotError::Fit(other),
        })?;
    let frame = PlotFrame::new(series, &curve, spec)?;
    let (left, top, w, h) = frame.area;
    let (width, height) = (spec.width, spec.height);
    let mut svg = String::new();

    // writing into a String is infallible; the results are ignored below
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="{FONT_FAMILY}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );

    let cx = px(left + w / 2.0);
    let _ = writeln!(
        svg,
        r#"<text id="title" x="{cx}" y="{}" font-size="{TITLE_FONT_SIZE}" text-anchor="middle"><tspan x="{cx}">{} by Month in</tspan><tspan x="{cx}" dy="{}">{}</tspan></text>"#,
        px(top - 2.2 * TITLE_FONT_SIZE),
        escape(&spec.metric_name),
        px(1.2 * TITLE_FONT_SIZE),
        escape(&spec.description),
    );

    let x_ticks = frame.x_ticks(data_x);
    let y_ticks = frame.y_ticks();

    let _ = writeln!(
        svg,
        r#"<g id="grid" stroke="{GRID_COLOR}" stroke-width="0.8">"#
    );
    for t in &x_ticks {
        let (x, _) = frame.to_px(t.position, 0.0);
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            px(top),
            px(top + h)
        );
    }
    for t in &y_ticks {
        let (_, y) = frame.to_px(0.0, t.position);
        let _ = writeln!(
            svg,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            px(y),
            px(left),
            px(left + w)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<rect id="axes" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        px(left),
        px(top),
        px(w),
        px(h)
    );

    let _ = writeln!(
        svg,
        r#"<g id="x-ticks" font-size="{TICK_FONT_SIZE}" text-anchor="middle">"#
    );
    for t in &x_ticks {
        let (x, _) = frame.to_px(t.position, 0.0);
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/><text x="{0}" y="{3}">{4}</text>"#,
            px(x),
            px(top + h),
            px(top + h + 5.0),
            px(top + h + 8.0 + TICK_FONT_SIZE),
            escape(&t.label)
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<g id="y-ticks" font-size="{TICK_FONT_SIZE}" text-anchor="end">"#
    );
    for t in &y_ticks {
        let (_, y) = frame.to_px(0.0, t.position);
        let _ = writeln!(
            svg,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="black"/><text x="{3}" y="{4}">{5}</text>"#,
            px(y),
            px(left - 5.0),
            px(left),
            px(left - 8.0),
            px(y + TICK_FONT_SIZE * 0.35),
            escape(&t.label)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<text id="x-label" x="{cx}" y="{}" font-size="{LABEL_FONT_SIZE}" text-anchor="middle">Month</text>"#,
        px(top + h + 8.0 + TICK_FONT_SIZE + 2.0 * LABEL_FONT_SIZE),
    );
    let ly_x = px(left - 60.0);
    let ly_y = px(top + h / 2.0);
    let _ = writeln!(
        svg,
        r#"<text id="y-label" x="{ly_x}" y="{ly_y}" font-size="{LABEL_FONT_SIZE}" text-anchor="middle" transform="rotate(-90 {ly_x} {ly_y})">{}</text>"#,
        escape(&spec.y_label)
    );

    let markers: Vec<(f64, f64)> = series.iter().map(|(x, y)| frame.to_px(x, y)).collect();
    let curve_px: Vec<(f64, f64)> = curve.iter().map(|&(x, y)| frame.to_px(x, y)).collect();

    let points: Vec<String> = curve_px
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), px(y)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline id="fitted-curve" fill="none" stroke="{CURVE_COLOR}" stroke-width="2" points="{}"/>"#,
        points.join(" ")
    );

    let _ = writeln!(svg, r#"<g id="data" fill="{DATA_COLOR}">"#);
    for &(x, y) in &markers {
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="{MARKER_RADIUS}"/>"#,
            px(x),
            px(y)
        );
    }
    let _ = writeln!(svg, "</g>");

    let equation = format_equation(model, report.r_squared);
    let eq_lines: Vec<&str> = equation.lines().collect();
    let longest = eq_lines
        .iter()
        .map(|l| l.chars().count())
        .chain(std::iter::once("Actual Data".len()))
        .max()
        .unwrap_or(0);
    let occupied: Vec<(f64, f64)> = markers.iter().chain(&curve_px).copied().collect();
    let legend = Legend::place(&frame, 1 + eq_lines.len(), longest, &occupied);

    let _ = writeln!(svg, r#"<g id="legend" font-size="{LEGEND_FONT_SIZE}">"#);
    let _ = writeln!(
        svg,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="white" fill-opacity="0.8" stroke="#cccccc" rx="4"/>"##,
        px(legend.left),
        px(legend.top),
        px(legend.width),
        px(legend.height)
    );
    let swatch_x = legend.left + LEGEND_PAD;
    let text_x = px(swatch_x + LEGEND_SWATCH + LEGEND_PAD);
    let row_mid = |row: usize| legend.top + LEGEND_PAD + (row as f64 + 0.5) * LEGEND_LINE;
    let text_y = |row: usize| px(row_mid(row) + LEGEND_FONT_SIZE * 0.35);

    let _ = writeln!(
        svg,
        r#"<circle cx="{}" cy="{}" r="{MARKER_RADIUS}" fill="{DATA_COLOR}"/><text id="legend-data" x="{text_x}" y="{}">Actual Data</text>"#,
        px(swatch_x + LEGEND_SWATCH / 2.0),
        px(row_mid(0)),
        text_y(0)
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{2}" x2="{}" y2="{2}" stroke="{CURVE_COLOR}" stroke-width="2"/>"#,
        px(swatch_x),
        px(swatch_x + LEGEND_SWATCH),
        px(row_mid(1)),
    );
    let _ = write!(
        svg,
        r#"<text id="legend-curve" x="{text_x}" y="{}">"#,
        text_y(1)
    );
    for (i, line) in eq_lines.iter().enumerate() {
        let dy = if i == 0 {
            String::new()
        } else {
            format!(r#" dy="{}""#, px(LEGEND_LINE))
        };
        let _ = write!(svg, r#"<tspan x="{text_x}"{dy}>{}</tspan>"#, escape(line));
    }
    let _ = writeln!(svg, "</text>");
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
