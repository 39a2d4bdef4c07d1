use std::collections::BTreeMap;
use std::io::Read;

use mcdm_core::{Matrix, ReviewMatrix, TRAVEL_CATEGORY_NAMES};

/// Errors from reading rating files and names configs. Rows and columns are
/// 1-based and count the header line and the reviewer-id column.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("row {row}, column {column}: '{value}' is not a number")]
    Parse {
        row: u64,
        column: usize,
        value: String,
    },
    #[error("row {row}, column {column}: rating {value} is outside [0, 4]")]
    Range { row: u64, column: usize, value: f64 },
    #[error("{0}")]
    Structure(String),
    #[error("names config line {line}: {message}")]
    Names { line: usize, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] mcdm_core::Error),
}

#[derive(Debug, Clone)]
pub struct LoadConfig {
    pub delimiter: u8,
    /// Display names keyed by 1-based rating column (the first column after
    /// the reviewer id is 1).
    pub names: BTreeMap<usize, String>,
}

impl Default for LoadConfig {
    fn default() -> Self {
        Self {
            delimiter: b',',
            names: BTreeMap::new(),
        }
    }
}

/// Parses `index=name` lines. Blank lines and lines starting with `#` are
/// skipped.
pub fn parse_names_config(text: &str) -> Result<BTreeMap<usize, String>, LoadError> {
    let mut names = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (index, name) = trimmed.split_once('=').ok_or_else(|| LoadError::Names {
            line,
            message: format!("expected index=name, got '{trimmed}'"),
        })?;
        let index: usize = index.trim().parse().map_err(|_| LoadError::Names {
            line,
            message: format!("'{}' is not a column index", index.trim()),
        })?;
        if index == 0 {
            return Err(LoadError::Names {
                line,
                message: "column indices start at 1".into(),
            });
        }
        let name = name.trim();
        if name.is_empty() {
            return Err(LoadError::Names {
                line,
                message: "empty name".into(),
            });
        }
        if names.insert(index, name.to_string()).is_some() {
            return Err(LoadError::Names {
                line,
                message: format!("index {index} given twice"),
            });
        }
    }
    Ok(names)
}

/// Travel Reviews headers are `Category 1` … `Category 10`.
fn travel_label(header: &str) -> Option<&'static str> {
    let lower = header.trim().to_ascii_lowercase();
    let k: usize = lower.strip_prefix("category")?.trim().parse().ok()?;
    TRAVEL_CATEGORY_NAMES.get(k.checked_sub(1)?).copied()
}

/// Reads a rating file: a header row, then one row per reviewer with the
/// reviewer id in the first column and one rating per alternative after it.
///
/// The result is transposed so alternatives index rows.
pub fn load_reviews<R: Read>(source: R, config: &LoadConfig) -> Result<ReviewMatrix, LoadError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(config.delimiter)
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let mut records = reader.records();

    let header = records
        .next()
        .ok_or_else(|| LoadError::Structure("input is empty; expected a header row".into()))??;
    let width = header.len();
    if width < 3 {
        return Err(LoadError::Structure(format!(
            "need a reviewer column and at least 2 rating columns, header has {width} column(s)"
        )));
    }
    let alternatives = width - 1;
    if let Some((&bad, _)) = config.names.range(alternatives + 1..).next() {
        return Err(LoadError::Structure(format!(
            "names config refers to column {bad} but only {alternatives} rating columns exist"
        )));
    }
    let names: Vec<String> = (1..=alternatives)
        .map(|k| {
            config
                .names
                .get(&k)
                .cloned()
                .or_else(|| travel_label(&header[k]).map(str::to_string))
                .unwrap_or_else(|| header[k].to_string())
        })
        .collect();

    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); alternatives];
    for record in records {
        let record = record?;
        let row = record.position().map_or(0, |p| p.line());
        if record.len() != width {
            return Err(LoadError::Structure(format!(
                "row {row} has {} fields, expected {width}",
                record.len()
            )));
        }
        for (k, column) in columns.iter_mut().enumerate() {
            let cell = &record[k + 1];
            let value: f64 = cell.parse().map_err(|_| LoadError::Parse {
                row,
                column: k + 2,
                value: cell.to_string(),
            })?;
            if !(0.0..=4.0).contains(&value) {
                return Err(LoadError::Range {
                    row,
                    column: k + 2,
                    value,
                });
            }
            column.push(value);
        }
    }
    if columns[0].is_empty() {
        return Err(LoadError::Structure("no data rows after the header".into()));
    }
    let values = Matrix::from_rows(&columns)?;
    Ok(ReviewMatrix::new(names, values)?)
}
