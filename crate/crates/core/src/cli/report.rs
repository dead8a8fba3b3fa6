use serde::{Deserialize, Serialize};

use crate::complexlin::{ComplexScalar, StateVector};
use crate::dataset::TypicalityTable;
use crate::solver::{
    FeasibilityReport, InterferenceClass, InterferenceSolution, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Amplitude {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColumnSums {
    pub mu_a: f64,
    pub mu_b: f64,
    pub mu_ab: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub label_a: String,
    pub label_b: String,
    pub combination_label: String,
    pub n: usize,
    /// Column sums as read, before normalization.
    pub raw_column_sums: ColumnSums,
    pub normalization_tolerance: f64,
}

/// One exemplar. Probabilities are the normalized values the model was built
/// from; model fields are absent when no model exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExemplarRow {
    pub index: usize,
    pub name: String,
    pub mu_a: f64,
    pub mu_b: f64,
    pub mu_ab: f64,
    pub average: f64,
    pub deviation: f64,
    pub class: InterferenceClass,
    pub lambda: Option<f64>,
    pub phi_deg: Option<f64>,
    pub beta_deg: Option<f64>,
    pub c: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub m: usize,
    pub c_m: f64,
    pub vector_a: Vec<Amplitude>,
    pub vector_b: Vec<Amplitude>,
    pub verification: VerificationReport<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub tool_version: String,
    pub dataset: DatasetSummary,
    pub exemplars: Vec<ExemplarRow>,
    pub model: Option<ModelSummary>,
    pub feasibility: FeasibilityReport<f64>,
    /// Set when no model could be built for a reason other than a negative
    /// radicand, e.g. classically additive data.
    pub diagnostic: Option<String>,
}

pub(crate) fn amplitudes(v: &StateVector<f64>) -> Vec<Amplitude> {
    v.amplitudes()
        .iter()
        .map(|a| Amplitude { re: a.re, im: a.im })
        .collect()
}

pub(crate) fn state_vector(amplitudes: &[Amplitude]) -> StateVector<f64> {
    StateVector::new(
        amplitudes
            .iter()
            .map(|a| ComplexScalar::new(a.re, a.im))
            .collect(),
    )
}

impl SolveReport {
    pub fn new(
        raw: &TypicalityTable<f64>,
        normalized: &TypicalityTable<f64>,
        tolerance: f64,
        solution: Option<&InterferenceSolution<f64>>,
        feasibility: FeasibilityReport<f64>,
        diagnostic: Option<String>,
    ) -> Self {
        let [mu_a, mu_b, mu_ab] = raw.column_sums();
        let exemplars = normalized
            .records()
            .iter()
            .map(|r| {
                let deviation = r.mu_ab - r.average();
                let row = solution.and_then(|s| s.row(r.index));
                ExemplarRow {
                    index: r.index,
                    name: r.name.clone(),
                    mu_a: r.mu_a,
                    mu_b: r.mu_b,
                    mu_ab: r.mu_ab,
                    average: r.average(),
                    deviation,
                    class: InterferenceClass::from_deviation(deviation),
                    lambda: row.map(|x| x.lambda),
                    phi_deg: row.map(|x| x.phi_deg),
                    beta_deg: row.map(|x| x.beta_deg),
                    c: row.map(|x| x.c),
                }
            })
            .collect();
        SolveReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            dataset: DatasetSummary {
                label_a: raw.label_a.clone(),
                label_b: raw.label_b.clone(),
                combination_label: raw.combination_label.clone(),
                n: raw.len(),
                raw_column_sums: ColumnSums { mu_a, mu_b, mu_ab },
                normalization_tolerance: tolerance,
            },
            exemplars,
            model: solution.map(|s| ModelSummary {
                m: s.m,
                c_m: s.c_m,
                vector_a: amplitudes(&s.vector_a),
                vector_b: amplitudes(&s.vector_b),
                verification: s.residuals,
            }),
            feasibility,
            diagnostic,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
