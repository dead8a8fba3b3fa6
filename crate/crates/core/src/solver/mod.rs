//! Construction of the interference model from a normalized typicality table.
//!
//! For every exemplar k the combined probability decomposes as
//!
//! ```text
//! mu_ab_k = (mu_a_k + mu_b_k) / 2 + c_k sqrt(mu_a_k mu_b_k) cos(phi_k)
//! ```
//!
//! and the two concept vectors must be orthogonal. The real part of `<A|B>`
//! vanishes once the columns sum to one; the imaginary part is the sum of the
//! signed `lambda_k = c_k sqrt(mu_a_k mu_b_k) sin(phi_k)`. Signs are chosen
//! greedily and the leftover is absorbed by a single coefficient `c_m < 1` on
//! the exemplar with the largest |lambda|, whose projector becomes a plane.

mod classify;
mod signs;

use serde::{Deserialize, Serialize};

use crate::complexlin::{
    inner_product, project_probability, ComplexScalar, ProjectorLayout, StateVector,
};
use crate::dataset::TypicalityTable;
use crate::error::{Error, Result};
use crate::scalar::{cos_deg, sin_deg, Scalar};

pub use self::classify::{classify_exemplars, Classification, InterferenceClass, CLASSICAL_BAND};
pub use self::signs::{assign_signs, Sign, SignAssignment, SignStep};

/// c_m values in `(1, 1 + CM_CLAMP]` are rounded down to 1.
pub const CM_CLAMP: f64 = 1e-9;
/// arccos arguments this far outside [-1, 1] are clamped; beyond is an error.
pub const ARCCOS_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionRow<T> {
    pub index: usize,
    pub name: String,
    /// `mu_ab - (mu_a + mu_b) / 2`, the interference term.
    pub deviation: T,
    pub lambda: T,
    pub phi_deg: T,
    pub beta_deg: T,
    /// 1 except at the plane exemplar, where it is c_m.
    pub c: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterferenceSolution<T> {
    pub rows: Vec<SolutionRow<T>>,
    /// 1-based index of the plane exemplar.
    pub m: usize,
    pub c_m: T,
    pub signs: SignAssignment<T>,
    pub vector_a: StateVector<T>,
    pub vector_b: StateVector<T>,
    pub residuals: VerificationReport<T>,
}

impl<T: Scalar> InterferenceSolution<T> {
    pub fn layout(&self) -> ProjectorLayout {
        ProjectorLayout::new(self.rows.len(), self.m).expect("solution has a valid layout")
    }

    pub fn row(&self, index: usize) -> Option<&SolutionRow<T>> {
        index.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn lambdas(&self) -> Vec<T> {
        self.rows.iter().map(|r| r.lambda).collect()
    }

    pub fn phases_deg(&self) -> Vec<T> {
        self.rows.iter().map(|r| r.phi_deg).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport<T> {
    /// |<A|B>|
    pub orthogonality_modulus: T,
    pub norm_a_error: T,
    pub norm_b_error: T,
    /// max_k |mu_ab_k - <A+B|M_k|A+B> / 2|
    pub max_reconstruction_error: T,
}

impl<T: Scalar> VerificationReport<T> {
    pub fn within(&self, orthogonality: T, norm: T, reconstruction: T) -> bool {
        self.orthogonality_modulus <= orthogonality
            && self.norm_a_error <= norm
            && self.norm_b_error <= norm
            && self.max_reconstruction_error <= reconstruction
    }

    pub fn to_f64(&self) -> VerificationReport<f64> {
        VerificationReport {
            orthogonality_modulus: self.orthogonality_modulus.to_f64_lossy(),
            norm_a_error: self.norm_a_error.to_f64_lossy(),
            norm_b_error: self.norm_b_error.to_f64_lossy(),
            max_reconstruction_error: self.max_reconstruction_error.to_f64_lossy(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfeasibleExemplar<T> {
    pub index: usize,
    pub name: String,
    /// `mu_a mu_b - deviation^2`, negative here.
    pub radicand: T,
}

/// Why a table admits no model. Empty means constructible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport<T> {
    pub infeasible_exemplars: Vec<InfeasibleExemplar<T>>,
    pub cm_violation: Option<T>,
}

impl<T> Default for FeasibilityReport<T> {
    fn default() -> Self {
        FeasibilityReport {
            infeasible_exemplars: Vec::new(),
            cm_violation: None,
        }
    }
}

impl<T: Scalar> FeasibilityReport<T> {
    pub fn is_empty(&self) -> bool {
        self.infeasible_exemplars.is_empty() && self.cm_violation.is_none()
    }

    pub fn to_f64(&self) -> FeasibilityReport<f64> {
        FeasibilityReport {
            infeasible_exemplars: self
                .infeasible_exemplars
                .iter()
                .map(|e| InfeasibleExemplar {
                    index: e.index,
                    name: e.name.clone(),
                    radicand: e.radicand.to_f64_lossy(),
                })
                .collect(),
            cm_violation: self.cm_violation.map(Scalar::to_f64_lossy),
        }
    }
}

impl<T: Scalar> std::fmt::Display for FeasibilityReport<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "feasible");
        }
        let mut parts = Vec::new();
        for e in &self.infeasible_exemplars {
            parts.push(format!(
                "exemplar {} ({}) has negative radicand {:e}: its combined probability \
                 is too far from the average for any phase",
                e.index,
                e.name,
                e.radicand.to_f64_lossy()
            ));
        }
        if let Some(c) = self.cm_violation {
            parts.push(format!("c_m = {c} exceeds 1"));
        }
        write!(f, "{}", parts.join("; "))
    }
}

fn half<T: Scalar>() -> T {
    T::lit(0.5)
}

/// `mu_ab_k - (mu_a_k + mu_b_k) / 2` in table order.
pub fn compute_deviations<T: Scalar>(table: &TypicalityTable<T>) -> Vec<T> {
    table
        .records()
        .iter()
        .map(|r| r.mu_ab - r.average())
        .collect()
}

/// |lambda_k| = sqrt(mu_a mu_b - deviation^2).
///
/// Rows with a negative radicand get magnitude 0 and are listed in the report.
/// A radicand negative only by rounding (within a few ulps of `mu_a mu_b`) is
/// treated as 0.
pub fn compute_lambda_magnitudes<T: Scalar>(
    table: &TypicalityTable<T>,
) -> (Vec<T>, FeasibilityReport<T>) {
    let mut report = FeasibilityReport::default();
    let magnitudes = table
        .records()
        .iter()
        .map(|r| {
            let product = r.mu_a * r.mu_b;
            let deviation = r.mu_ab - r.average();
            let radicand = product - deviation * deviation;
            if radicand >= T::zero() {
                radicand.sqrt()
            } else if radicand >= -product * T::epsilon() * T::lit(4.0) {
                T::zero()
            } else {
                report.infeasible_exemplars.push(InfeasibleExemplar {
                    index: r.index,
                    name: r.name.clone(),
                    radicand,
                });
                T::zero()
            }
        })
        .collect();
    (magnitudes, report)
}

/// Coefficient on exemplar `m` that cancels the off-`m` imaginary sum.
///
/// The off-`m` sum is accumulated in greedy visit order so that the result
/// does not depend on row order.
pub fn compute_cm<T: Scalar>(table: &TypicalityTable<T>, lambdas: &[T], m: usize) -> Result<T> {
    if lambdas.len() != table.len() {
        return Err(Error::Dimension {
            left: lambdas.len(),
            right: table.len(),
        });
    }
    let record = table.record(m)?;
    let magnitudes: Vec<T> = lambdas.iter().map(|l| l.abs()).collect();
    let off_m = signs::descending_order(&magnitudes)
        .into_iter()
        .filter(|&k| k + 1 != m)
        .fold(T::zero(), |acc, k| acc + lambdas[k]);
    let deviation = record.mu_ab - record.average();
    let c_m = ((off_m * off_m + deviation * deviation) / (record.mu_a * record.mu_b)).sqrt();
    if !c_m.is_finite() {
        return Err(Error::Degenerate(format!("c_m is not finite ({c_m})")));
    }
    if c_m > T::one() + T::lit(CM_CLAMP) {
        return Err(Error::Infeasible(Box::new(FeasibilityReport {
            infeasible_exemplars: Vec::new(),
            cm_violation: Some(c_m.to_f64_lossy()),
        })));
    }
    if c_m <= T::zero() {
        return Err(Error::Degenerate(
            "c_m = 0: the data are classically additive and the phase of the plane \
             exemplar is undefined"
                .into(),
        ));
    }
    Ok(c_m.min(T::one()))
}

fn clamped_arccos_deg<T: Scalar>(
    argument: T,
    on_error: impl FnOnce() -> InfeasibleExemplar<f64>,
) -> Result<T> {
    let limit = T::one() + T::lit(ARCCOS_CLAMP);
    if !(argument.abs() <= limit) {
        return Err(Error::Infeasible(Box::new(FeasibilityReport {
            infeasible_exemplars: vec![on_error()],
            cm_violation: None,
        })));
    }
    Ok(argument.max(-T::one()).min(T::one()).acos().to_degrees())
}

/// Phase angles `phi_k` and vector phases `beta_k`, in degrees.
///
/// `phi_k` carries the sign of `lambda_k`. `beta_k = phi_k` off `m`, while
/// `beta_m` is the principal arccos, i.e. nonnegative.
pub fn compute_phases<T: Scalar>(
    table: &TypicalityTable<T>,
    lambdas: &[T],
    m: usize,
    c_m: T,
) -> Result<(Vec<T>, Vec<T>)> {
    if lambdas.len() != table.len() {
        return Err(Error::Dimension {
            left: lambdas.len(),
            right: table.len(),
        });
    }
    table.record(m)?;
    let mut phi = Vec::with_capacity(table.len());
    let mut beta = Vec::with_capacity(table.len());
    for (r, &lambda) in table.records().iter().zip(lambdas) {
        let c = if r.index == m { c_m } else { T::one() };
        let deviation = r.mu_ab - r.average();
        let argument = deviation / (c * (r.mu_a * r.mu_b).sqrt());
        let angle = clamped_arccos_deg(argument, || InfeasibleExemplar {
            index: r.index,
            name: r.name.clone(),
            radicand: (c * c * r.mu_a * r.mu_b - deviation * deviation).to_f64_lossy(),
        })?;
        let signed = if lambda.is_sign_negative() {
            -angle
        } else {
            angle
        };
        phi.push(signed);
        beta.push(if r.index == m { angle } else { signed });
    }
    Ok((phi, beta))
}

/// `|A> = (sqrt(mu_a_1), ..., sqrt(mu_a_n), 0)` and
/// `|B> = (e^{i beta_k} c_k sqrt(mu_b_k), ..., sqrt(mu_b_m (1 - c_m^2)))`.
pub fn build_state_vectors<T: Scalar>(
    table: &TypicalityTable<T>,
    m: usize,
    c_m: T,
    beta_deg: &[T],
) -> Result<(StateVector<T>, StateVector<T>)> {
    if beta_deg.len() != table.len() {
        return Err(Error::Dimension {
            left: beta_deg.len(),
            right: table.len(),
        });
    }
    let plane = table.record(m)?;
    let vector_a = StateVector::from_real(
        table
            .records()
            .iter()
            .map(|r| r.mu_a.sqrt())
            .chain(std::iter::once(T::zero())),
    );
    let mut amplitudes: Vec<ComplexScalar<T>> = table
        .records()
        .iter()
        .zip(beta_deg)
        .map(|(r, &beta)| {
            let c = if r.index == m { c_m } else { T::one() };
            let modulus = c * r.mu_b.sqrt();
            ComplexScalar::new(modulus * cos_deg(beta), modulus * sin_deg(beta))
        })
        .collect();
    let leftover = (plane.mu_b * (T::one() - c_m * c_m)).max(T::zero()).sqrt();
    amplitudes.push(ComplexScalar::new(leftover, T::zero()));
    Ok((vector_a, StateVector::new(amplitudes)))
}

/// Residuals of a pair of concept vectors against a combined column.
pub fn verify_vectors<T: Scalar>(
    vector_a: &StateVector<T>,
    vector_b: &StateVector<T>,
    layout: &ProjectorLayout,
    mu_ab: &[T],
) -> Result<VerificationReport<T>> {
    if mu_ab.len() != layout.n() {
        return Err(Error::Dimension {
            left: mu_ab.len(),
            right: layout.n(),
        });
    }
    let orthogonality_modulus = inner_product(vector_a, vector_b)?.norm();
    let sum = StateVector::new(
        vector_a
            .amplitudes()
            .iter()
            .zip(vector_b.amplitudes())
            .map(|(a, b)| a + b)
            .collect(),
    );
    let mut max_reconstruction_error = T::zero();
    for (k, &target) in mu_ab.iter().enumerate() {
        let p = project_probability(layout, k + 1, &sum)? * half();
        max_reconstruction_error = max_reconstruction_error.max((target - p).abs());
    }
    Ok(VerificationReport {
        orthogonality_modulus,
        norm_a_error: (vector_a.norm() - T::one()).abs(),
        norm_b_error: (vector_b.norm() - T::one()).abs(),
        max_reconstruction_error,
    })
}

pub fn verify_solution<T: Scalar>(
    solution: &InterferenceSolution<T>,
    table: &TypicalityTable<T>,
    layout: &ProjectorLayout,
) -> Result<VerificationReport<T>> {
    verify_vectors(
        &solution.vector_a,
        &solution.vector_b,
        layout,
        &table.column(crate::dataset::Column::Combined),
    )
}

/// Lists the rows whose radicand is negative; empty when a model exists.
pub fn check_feasibility<T: Scalar>(table: &TypicalityTable<T>) -> FeasibilityReport<T> {
    compute_lambda_magnitudes(table).1
}

/// Runs the whole construction on a normalized table.
///
/// Infeasible data yields [`Error::Infeasible`] with the full report; no
/// partial model is returned.
pub fn solve<T: Scalar>(table: &TypicalityTable<T>) -> Result<InterferenceSolution<T>> {
    let deviations = compute_deviations(table);
    let (magnitudes, feasibility) = compute_lambda_magnitudes(table);
    if !feasibility.is_empty() {
        return Err(Error::Infeasible(Box::new(feasibility.to_f64())));
    }
    let signs = assign_signs(&magnitudes)?;
    let m = signs.m;
    let lambdas: Vec<T> = magnitudes
        .iter()
        .zip(&signs.signs)
        .map(|(&mag, sign)| sign.apply(mag))
        .collect();
    let c_m = compute_cm(table, &lambdas, m)?;
    let (phi, beta) = compute_phases(table, &lambdas, m, c_m)?;
    let (vector_a, vector_b) = build_state_vectors(table, m, c_m, &beta)?;
    let layout = ProjectorLayout::new(table.len(), m)?;
    let residuals = verify_vectors(
        &vector_a,
        &vector_b,
        &layout,
        &table.column(crate::dataset::Column::Combined),
    )?;
    let rows = table
        .records()
        .iter()
        .enumerate()
        .map(|(i, r)| SolutionRow {
            index: r.index,
            name: r.name.clone(),
            deviation: deviations[i],
            lambda: lambdas[i],
            phi_deg: phi[i],
            beta_deg: beta[i],
            c: if r.index == m { c_m } else { T::one() },
        })
        .collect();
    Ok(InterferenceSolution {
        rows,
        m,
        c_m,
        signs,
        vector_a,
        vector_b,
        residuals,
    })
}
