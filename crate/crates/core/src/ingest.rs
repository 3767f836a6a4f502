//! Two-column CSV ingestion.
//!
//! Tokenizing (quotes, CRLF, a leading UTF-8 BOM) is delegated to the `csv`
//! crate; this module projects the two named columns, parses numbers and
//! reports failures with the data row and column that caused them.

use std::io::Read;

use crate::error::{FitError, IngestError};
use crate::fit::check_fit_preconditions;
use crate::series::Series;

/// Which columns hold the abscissa and the values, and the field delimiter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvSchema {
    x_column: String,
    y_column: String,
    delimiter: u8,
}

impl Default for CsvSchema {
    fn default() -> Self {
        CsvSchema {
            x_column: "Month".to_owned(),
            y_column: "Values".to_owned(),
            delimiter: b',',
        }
    }
}

impl CsvSchema {
    pub fn new(
        x_column: impl Into<String>,
        y_column: impl Into<String>,
        delimiter: char,
    ) -> Result<Self, IngestError> {
        let (x_column, y_column) = (x_column.into(), y_column.into());
        if x_column.is_empty() || y_column.is_empty() {
            return Err(IngestError::InvalidSchema(
                "column names must be nonempty".into(),
            ));
        }
        if x_column == y_column {
            return Err(IngestError::InvalidSchema(format!(
                "x and y columns are both {x_column:?}"
            )));
        }
        if !delimiter.is_ascii() || delimiter == '"' || delimiter == '\n' || delimiter == '\r' {
            return Err(IngestError::InvalidSchema(format!(
                "unsupported delimiter {delimiter:?}"
            )));
        }
        Ok(CsvSchema {
            x_column,
            y_column,
            delimiter: delimiter as u8,
        })
    }

    pub fn x_column(&self) -> &str {
        &self.x_column
    }

    pub fn y_column(&self) -> &str {
        &self.y_column
    }

    pub fn delimiter(&self) -> char {
        self.delimiter as char
    }
}

fn map_csv_error(err: csv::Error) -> IngestError {
    match err.kind() {
        csv::ErrorKind::Io(e) => IngestError::Io(e.to_string()),
        _ => IngestError::Syntax(err.to_string()),
    }
}

fn decode(field: &[u8], location: impl FnOnce() -> String) -> Result<&str, IngestError> {
    std::str::from_utf8(field).map_err(|_| IngestError::InvalidUtf8 {
        location: location(),
    })
}

fn parse_number(raw: &[u8], row: usize, column: &str) -> Result<f64, IngestError> {
    let text = decode(raw, || format!("row {row}, column {column:?}"))?.trim();
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(IngestError::NonNumericValue {
            row,
            column: column.to_owned(),
            value: text.to_owned(),
        }),
    }
}

/// Reads a CSV with a header row and returns the schema's two columns as a
/// [`Series`], in file order. Other columns are ignored.
pub fn parse_csv<R: Read>(input: R, schema: &CsvSchema) -> Result<Series, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(schema.delimiter)
        .has_headers(false)
        .flexible(true)
        .from_reader(input);

    let mut record = csv::ByteRecord::new();
    if !reader
        .read_byte_record(&mut record)
        .map_err(map_csv_error)?
    {
        return Err(IngestError::MissingHeader);
    }
    let mut header = Vec::with_capacity(record.len());
    for (i, field) in record.iter().enumerate() {
        header.push(
            decode(field, || format!("header field {}", i + 1))?
                .trim()
                .to_owned(),
        );
    }
    let find = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| IngestError::MissingColumn(name.to_owned()))
    };
    let x_idx = find(&schema.x_column)?;
    let y_idx = find(&schema.y_column)?;

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut row = 0;
    while reader
        .read_byte_record(&mut record)
        .map_err(map_csv_error)?
    {
        row += 1;
        if record.len() != header.len() {
            return Err(IngestError::MalformedRow {
                row,
                expected: header.len(),
                found: record.len(),
            });
        }
        xs.push(parse_number(&record[x_idx], row, &schema.x_column)?);
        ys.push(parse_number(&record[y_idx], row, &schema.y_column)?);
    }
    if xs.is_empty() {
        return Err(IngestError::EmptyData);
    }
    // lengths match and values are finite by construction
    Series::new(xs, ys).map_err(|e| IngestError::Syntax(e.to_string()))
}

/// Writes `series` as a two-column CSV under `schema`. Values use the
/// shortest representation that parses back to the same `f64`.
pub fn write_csv(series: &Series, schema: &CsvSchema) -> String {
    let mut writer = csv::WriterBuilder::new()
        .delimiter(schema.delimiter)
        .from_writer(Vec::new());
    // writing to a Vec cannot fail
    writer
        .write_record([schema.x_column.as_str(), schema.y_column.as_str()])
        .expect("in-memory write");
    for (x, y) in series.iter() {
        writer
            .write_record([x.to_string(), y.to_string()])
            .expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}

/// Checks that `series` can be fitted at `degree`: enough points, enough
/// distinct abscissae, finite values.
pub fn validate_series(series: &Series, degree: usize) -> Result<(), FitError> {
    if let Some(index) = series
        .iter()
        .position(|(x, y)| !x.is_finite() || !y.is_finite())
    {
        return Err(FitError::NonFinite { index });
    }
    check_fit_preconditions(series, degree)?;
    if series.distinct_x() < 2 {
        return Err(FitError::DegenerateAbscissa {
            needed: 2,
            distinct: 1,
        });
    }
    Ok(())
}
