use std::fmt::Write as _;
use std::path::Path;

use super::{Column, TypicalityTable};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const CSV_HEADER: &str = "exemplar,mu_a,mu_b,mu_ab";

const DEFAULT_LABEL_A: &str = "A";
const DEFAULT_LABEL_B: &str = "B";
const DEFAULT_COMBINATION_LABEL: &str = "A or B";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_probability<T: Scalar>(line: usize, column: Column, field: &str) -> Result<T> {
    let value: T = field
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("{}: {field:?} is not a number", column.key())))?;
    if !value.is_finite() || value < T::zero() || value > T::one() {
        return Err(parse_error(
            line,
            format!("{}: {field} is outside [0, 1]", column.key()),
        ));
    }
    Ok(value)
}

/// Parses the typicality CSV format.
///
/// Blank lines and `#` comments are skipped anywhere; comments of the form
/// `# label_a: ...`, `# label_b: ...` and `# combination_label: ...` set the
/// table labels. The first non-comment line must be the header.
pub fn parse_table<T: Scalar>(source: &str) -> Result<TypicalityTable<T>> {
    let mut label_a = DEFAULT_LABEL_A.to_string();
    let mut label_b = DEFAULT_LABEL_B.to_string();
    let mut combination = DEFAULT_COMBINATION_LABEL.to_string();
    let mut header_seen = false;
    let mut rows = Vec::new();

    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.trim_start().strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let value = value.trim().to_string();
                match key.trim() {
                    "label_a" => label_a = value,
                    "label_b" => label_b = value,
                    "combination_label" => combination = value,
                    _ => {}
                }
            }
            continue;
        }
        if !header_seen {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.join(",") != CSV_HEADER {
                return Err(parse_error(
                    line_no,
                    format!("expected header {CSV_HEADER:?}, found {line:?}"),
                ));
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(parse_error(
                line_no,
                format!("expected 4 fields, found {}", fields.len()),
            ));
        }
        let name = fields[0].trim();
        if name.is_empty() {
            return Err(parse_error(line_no, "empty exemplar name"));
        }
        let mu_a = parse_probability(line_no, Column::A, fields[1])?;
        let mu_b = parse_probability(line_no, Column::B, fields[2])?;
        let mu_ab = parse_probability(line_no, Column::Combined, fields[3])?;
        rows.push((name.to_string(), mu_a, mu_b, mu_ab));
    }
    if !header_seen {
        return Err(parse_error(0, format!("missing header {CSV_HEADER:?}")));
    }
    TypicalityTable::from_rows(rows, label_a, label_b, combination)
}

pub fn read_table<T: Scalar>(path: impl AsRef<Path>) -> Result<TypicalityTable<T>> {
    let text = std::fs::read_to_string(path)?;
    parse_table(&text)
}

/// Writes a table in the format [`parse_table`] reads, at full precision.
pub fn render_csv<T: Scalar>(table: &TypicalityTable<T>) -> String {
    let mut out = String::new();
    // Writing to a String cannot fail.
    let _ = writeln!(out, "# label_a: {}", table.label_a);
    let _ = writeln!(out, "# label_b: {}", table.label_b);
    let _ = writeln!(out, "# combination_label: {}", table.combination_label);
    let _ = writeln!(out, "{CSV_HEADER}");
    for r in table.records() {
        let _ = writeln!(out, "{},{},{},{}", r.name, r.mu_a, r.mu_b, r.mu_ab);
    }
    out
}
