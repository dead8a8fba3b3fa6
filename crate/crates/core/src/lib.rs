//! Complex Hilbert-space interference model for two-concept typicality data.
//!
//! Given per-exemplar probabilities for concept A, concept B and their
//! combination, the crate builds two orthogonal state vectors in C^(n+1)
//! whose normalized superposition reproduces the combined column exactly,
//! reports the interference phase of every exemplar, and renders the
//! two-source Gaussian interference landscape as raster grids.
//!
//! All numerical code is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases at the crate root fix it to `f64`.

// `!(x > 0)` deliberately treats NaN as a failed check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod complexlin;
pub mod config;
pub mod dataset;
mod error;
pub mod regression;
mod scalar;
pub mod solver;
pub mod wavefield;

pub use crate::error::{Error, Result};
pub use crate::scalar::{cos_deg, sin_deg, Scalar};

pub use crate::complexlin::{
    inner_product, project_probability, superpose_normalized, ProjectorLayout,
};
pub use crate::dataset::{parse_table, render_csv, validate_and_normalize};
pub use crate::solver::{classify_exemplars, solve, InterferenceClass};

pub type TypicalityTable = dataset::TypicalityTable<f64>;
pub type ExemplarRecord = dataset::ExemplarRecord<f64>;
pub type StateVector = complexlin::StateVector<f64>;
pub type ComplexScalar = complexlin::ComplexScalar<f64>;
pub type InterferenceSolution = solver::InterferenceSolution<f64>;
pub type SolutionRow = solver::SolutionRow<f64>;
pub type VerificationReport = solver::VerificationReport<f64>;
pub type FeasibilityReport = solver::FeasibilityReport<f64>;
pub type SignAssignment = solver::SignAssignment<f64>;
pub type Point = wavefield::Point<f64>;
pub type GaussianField = wavefield::GaussianField<f64>;
pub type FieldPair = wavefield::FieldPair<f64>;
pub type PlacementMap = wavefield::PlacementMap<f64>;
pub type PhaseField = wavefield::PhaseField<f64>;
pub type RasterGrid = wavefield::RasterGrid<f64>;
pub type Window = wavefield::Window<f64>;

/// Single-precision variants.
pub mod f32 {
    pub type TypicalityTable = crate::dataset::TypicalityTable<f32>;
    pub type StateVector = crate::complexlin::StateVector<f32>;
    pub type InterferenceSolution = crate::solver::InterferenceSolution<f32>;
    pub type RasterGrid = crate::wavefield::RasterGrid<f32>;
}
