//! Typicality tables: per-exemplar membership probabilities for two concepts
//! and their combination.

mod csv;
pub mod published;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use self::csv::{parse_table, read_table, render_csv, CSV_HEADER};

/// Default column-sum tolerance accepted by [`validate_and_normalize`].
pub const DEFAULT_SUM_TOLERANCE: f64 = 0.02;

/// One exemplar with its three measured probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ExemplarRecord<T> {
    /// 1-based position in the table.
    pub index: usize,
    pub name: String,
    pub mu_a: T,
    pub mu_b: T,
    /// Probability for the combined concept ("A or B" for the bundled data).
    pub mu_ab: T,
}

impl<T: Scalar> ExemplarRecord<T> {
    /// Classical (no-interference) prediction, the mean of `mu_a` and `mu_b`.
    pub fn average(&self) -> T {
        (self.mu_a + self.mu_b) / T::lit(2.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypicalityTable<T> {
    records: Vec<ExemplarRecord<T>>,
    pub label_a: String,
    pub label_b: String,
    pub combination_label: String,
}

/// Which probability column of a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    A,
    B,
    Combined,
}

impl Column {
    pub const ALL: [Column; 3] = [Column::A, Column::B, Column::Combined];

    pub fn key(self) -> &'static str {
        match self {
            Column::A => "mu_a",
            Column::B => "mu_b",
            Column::Combined => "mu_ab",
        }
    }
}

fn check_label(what: &str, text: &str) -> Result<()> {
    if text.contains(['\n', '\r']) {
        return Err(Error::Validation(format!("{what} must be a single line")));
    }
    Ok(())
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.trim() != name {
        return Err(Error::Validation(format!(
            "exemplar name {name:?} is empty or has surrounding whitespace"
        )));
    }
    if name.starts_with('#') || name.contains([',', '\n', '\r']) {
        return Err(Error::Validation(format!(
            "exemplar name {name:?} contains a reserved character"
        )));
    }
    Ok(())
}

fn check_probability<T: Scalar>(name: &str, column: Column, value: T) -> Result<()> {
    if !value.is_finite() || value < T::zero() || value > T::one() {
        return Err(Error::Validation(format!(
            "{name}: {} = {value} is not a probability",
            column.key()
        )));
    }
    Ok(())
}

impl<T: Scalar> TypicalityTable<T> {
    /// Builds a table from `(name, mu_a, mu_b, mu_ab)` rows, assigning indices
    /// 1..=n in order. Checks names and the probability range, not column sums.
    pub fn from_rows<I, S>(
        rows: I,
        label_a: impl Into<String>,
        label_b: impl Into<String>,
        combination_label: impl Into<String>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T, T, T)>,
        S: Into<String>,
    {
        let records = rows
            .into_iter()
            .enumerate()
            .map(|(i, (name, mu_a, mu_b, mu_ab))| ExemplarRecord {
                index: i + 1,
                name: name.into(),
                mu_a,
                mu_b,
                mu_ab,
            })
            .collect();
        Self::from_records(records, label_a, label_b, combination_label)
    }

    pub fn from_records(
        records: Vec<ExemplarRecord<T>>,
        label_a: impl Into<String>,
        label_b: impl Into<String>,
        combination_label: impl Into<String>,
    ) -> Result<Self> {
        let table = TypicalityTable {
            records,
            label_a: label_a.into(),
            label_b: label_b.into(),
            combination_label: combination_label.into(),
        };
        table.check_structure()?;
        Ok(table)
    }

    fn check_structure(&self) -> Result<()> {
        check_label("label_a", &self.label_a)?;
        check_label("label_b", &self.label_b)?;
        check_label("combination_label", &self.combination_label)?;
        let mut seen = HashSet::new();
        for (i, record) in self.records.iter().enumerate() {
            if record.index != i + 1 {
                return Err(Error::Validation(format!(
                    "exemplar {} has index {}, expected {}",
                    record.name,
                    record.index,
                    i + 1
                )));
            }
            check_name(&record.name)?;
            if !seen.insert(record.name.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate exemplar name {:?}",
                    record.name
                )));
            }
            for column in Column::ALL {
                check_probability(&record.name, column, record.value(column))?;
            }
        }
        Ok(())
    }

    pub fn records(&self) -> &[ExemplarRecord<T>] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Record by 1-based index.
    pub fn record(&self, index: usize) -> Result<&ExemplarRecord<T>> {
        index
            .checked_sub(1)
            .and_then(|i| self.records.get(i))
            .ok_or(Error::Index {
                index,
                len: self.records.len(),
            })
    }

    pub fn column(&self, column: Column) -> Vec<T> {
        self.records.iter().map(|r| r.value(column)).collect()
    }

    pub fn column_sum(&self, column: Column) -> T {
        self.records
            .iter()
            .fold(T::zero(), |acc, r| acc + r.value(column))
    }

    /// Sums of the A, B and combined columns.
    pub fn column_sums(&self) -> [T; 3] {
        Column::ALL.map(|c| self.column_sum(c))
    }

    /// Multiplies all three columns by `factor` without re-checking ranges.
    pub fn scaled(&self, factor: T) -> Self {
        let mut out = self.clone();
        for r in &mut out.records {
            r.mu_a = r.mu_a * factor;
            r.mu_b = r.mu_b * factor;
            r.mu_ab = r.mu_ab * factor;
        }
        out
    }

    /// Reorders rows so that new row `i` is old row `order[i]` (0-based),
    /// renumbering indices.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut used = vec![false; self.len()];
        if order.len() != self.len() {
            return Err(Error::Dimension {
                left: order.len(),
                right: self.len(),
            });
        }
        let mut records = Vec::with_capacity(self.len());
        for (i, &src) in order.iter().enumerate() {
            if src >= self.len() || std::mem::replace(&mut used[src], true) {
                return Err(Error::Input(format!("{order:?} is not a permutation")));
            }
            let mut r = self.records[src].clone();
            r.index = i + 1;
            records.push(r);
        }
        Ok(TypicalityTable {
            records,
            ..self.clone()
        })
    }
}

impl<T: Scalar> ExemplarRecord<T> {
    pub fn value(&self, column: Column) -> T {
        match column {
            Column::A => self.mu_a,
            Column::B => self.mu_b,
            Column::Combined => self.mu_ab,
        }
    }

    fn value_mut(&mut self, column: Column) -> &mut T {
        match column {
            Column::A => &mut self.mu_a,
            Column::B => &mut self.mu_b,
            Column::Combined => &mut self.mu_ab,
        }
    }
}

/// Checks every column sums to 1 within `tolerance`, then rescales each column
/// by its sum.
///
/// Columns whose sum is already 1 up to accumulated rounding are left
/// untouched, which makes the operation idempotent bit for bit.
pub fn validate_and_normalize<T: Scalar>(
    table: TypicalityTable<T>,
    tolerance: T,
) -> Result<TypicalityTable<T>> {
    if !(tolerance > T::zero()) || !tolerance.is_finite() {
        return Err(Error::Validation(format!(
            "tolerance must be positive and finite, got {tolerance}"
        )));
    }
    table.check_structure()?;
    if table.len() < 2 {
        return Err(Error::Validation(format!(
            "need at least 2 exemplars, got {}",
            table.len()
        )));
    }
    for r in table.records() {
        if r.mu_a == T::zero() || r.mu_b == T::zero() {
            return Err(Error::Degenerate(format!(
                "exemplar {} ({}) has a zero probability for a single concept; \
                 its phase would be undefined",
                r.index, r.name
            )));
        }
    }

    let rounding_slack = T::epsilon() * T::lit(4.0 * table.len() as f64);
    let mut table = table;
    for column in Column::ALL {
        let sum = table.column_sum(column);
        if (sum - T::one()).abs() > tolerance {
            return Err(Error::Validation(format!(
                "column {} sums to {sum}, outside 1 ± {tolerance}",
                column.key()
            )));
        }
        if (sum - T::one()).abs() <= rounding_slack {
            continue;
        }
        for r in &mut table.records {
            let v = r.value_mut(column);
            *v = *v / sum;
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> TypicalityTable<f64> {
        TypicalityTable::from_rows(
            [("x", 0.25, 0.5, 0.5), ("y", 0.75, 0.5, 0.5)],
            "A",
            "B",
            "A or B",
        )
        .unwrap()
    }

    #[test]
    fn normalizing_exact_table_is_identity() {
        let t = small();
        let n = validate_and_normalize(t.clone(), 0.02).unwrap();
        assert_eq!(n, t);
    }

    #[test]
    fn bundled_columns_normalize_to_one() {
        let raw = published::fruits_vegetables();
        // Column sums of the published four-decimal table.
        let sums = raw.column_sums();
        assert!((sums[0] - 1.0001).abs() < 1e-12);
        assert!((sums[1] - 1.0001).abs() < 1e-12);
        assert!((sums[2] - 0.9999).abs() < 1e-12);
        let n = validate_and_normalize(raw, 0.02).unwrap();
        for s in n.column_sums() {
            assert!((s - 1.0).abs() < 1e-12, "{s}");
        }
    }

    #[test]
    fn half_sum_column_is_rejected() {
        let t = TypicalityTable::from_rows(
            [("x", 0.25, 0.5, 0.25), ("y", 0.75, 0.5, 0.25)],
            "A",
            "B",
            "A or B",
        )
        .unwrap();
        let err = validate_and_normalize(t, 0.02).unwrap_err();
        assert!(err.to_string().contains("0.5"), "{err}");
    }

    #[test]
    fn zero_single_concept_probability_is_degenerate() {
        let t = TypicalityTable::from_rows(
            [("x", 0.0, 0.5, 0.5), ("y", 1.0, 0.5, 0.5)],
            "A",
            "B",
            "A or B",
        )
        .unwrap();
        assert!(matches!(
            validate_and_normalize(t, 0.02),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn zero_combined_probability_is_allowed() {
        let t = TypicalityTable::from_rows(
            [("x", 0.5, 0.5, 0.0), ("y", 0.5, 0.5, 1.0)],
            "A",
            "B",
            "A or B",
        )
        .unwrap();
        assert!(validate_and_normalize(t, 0.02).is_ok());
    }

    #[test]
    fn single_exemplar_is_rejected() {
        let t = TypicalityTable::from_rows([("X", 1.0, 1.0, 1.0)], "A", "B", "A or B").unwrap();
        assert!(matches!(
            validate_and_normalize(t, 0.02),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn bad_tolerance_and_duplicates() {
        assert!(validate_and_normalize(small(), 0.0).is_err());
        assert!(validate_and_normalize(small(), f64::NAN).is_err());
        let dup = TypicalityTable::from_rows(
            [("x", 0.5, 0.5, 0.5), ("x", 0.5, 0.5, 0.5)],
            "A",
            "B",
            "A or B",
        );
        assert!(matches!(dup, Err(Error::Validation(_))));
    }

    #[test]
    fn permutation_must_be_bijective() {
        let t = small();
        assert!(t.permuted(&[0, 0]).is_err());
        assert!(t.permuted(&[1]).is_err());
        let p = t.permuted(&[1, 0]).unwrap();
        assert_eq!(p.record(1).unwrap().name, "y");
        assert_eq!(p.record(1).unwrap().index, 1);
        assert!(p.record(3).is_err());
    }
}
