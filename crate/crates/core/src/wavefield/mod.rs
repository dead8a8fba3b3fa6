//! Two-source interference landscapes.
//!
//! Each concept is an isotropic Gaussian intensity centred on its most typical
//! exemplar. Exemplars sit where both intensities match their measured
//! probabilities, the phase difference is interpolated between them, and the
//! combined intensity is `(G_A + G_B) / 2 + sqrt(G_A G_B) cos(phi)`.

mod phase;
mod placement;
mod raster;

use crate::dataset::{Column, TypicalityTable};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use self::phase::{interpolate_phase, PhaseField, PhaseNode, PhaseRule};
pub use self::placement::{circle_intersections, place_exemplars, Placement, PlacementMap};
pub use self::raster::{
    default_window, render_grids, RasterGrid, RenderedGrids, Resolution, Window, DEFAULT_RESOLUTION,
};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn distance_sqr(self, other: Point<T>) -> T {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn distance(self, other: Point<T>) -> T {
        self.distance_sqr(other).sqrt()
    }
}

/// Default source positions: the top Fruits exemplar at the origin, the top
/// Vegetables exemplar at (10, 4).
pub fn default_centers<T: Scalar>() -> (Point<T>, Point<T>) {
    (
        Point::new(T::zero(), T::zero()),
        Point::new(T::lit(10.0), T::lit(4.0)),
    )
}

/// Isotropic Gaussian intensity `peak * exp(-r^2 / (2 sigma^2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianField<T> {
    pub center: Point<T>,
    pub sigma: T,
    pub peak: T,
}

impl<T: Scalar> GaussianField<T> {
    pub fn intensity(&self, p: Point<T>) -> T {
        let two = T::lit(2.0);
        self.peak * (-p.distance_sqr(self.center) / (two * self.sigma * self.sigma)).exp()
    }

    /// Distance from the centre at which the intensity drops to
    /// `peak * fraction`; `fraction` in (0, 1].
    pub fn level_radius(&self, fraction: T) -> T {
        let two = T::lit(2.0);
        (self.sigma * (two * (T::one() / fraction).ln()).sqrt()).max(T::zero())
    }
}

/// The two fitted sources and the exemplars they are anchored on.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldPair<T> {
    pub a: GaussianField<T>,
    pub b: GaussianField<T>,
    /// 1-based index of the exemplar with the largest `mu_a`.
    pub top_a: usize,
    /// 1-based index of the exemplar with the largest `mu_b`.
    pub top_b: usize,
    max_a: T,
    max_b: T,
}

impl<T: Scalar> FieldPair<T> {
    pub fn max_mu_a(&self) -> T {
        self.max_a
    }

    pub fn max_mu_b(&self) -> T {
        self.max_b
    }

    pub fn max_sigma(&self) -> T {
        self.a.sigma.max(self.b.sigma)
    }
}

fn argmax<T: Scalar>(values: &[T]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

/// Fits both Gaussians: peaks at `scale * max mu`, widths such that each field
/// evaluated at the other source's centre equals `scale` times the
/// probability of the other source's top exemplar.
pub fn fit_gaussian_fields<T: Scalar>(
    table: &TypicalityTable<T>,
    center_a: Point<T>,
    center_b: Point<T>,
    scale: T,
) -> Result<FieldPair<T>> {
    if !(scale > T::zero()) || !scale.is_finite() {
        return Err(Error::Fit(format!(
            "display scale must be positive, got {scale}"
        )));
    }
    if table.is_empty() {
        return Err(Error::Fit("empty table".into()));
    }
    let d = center_a.distance(center_b);
    if !(d > T::zero()) || !d.is_finite() {
        return Err(Error::Fit(
            "source centres must be distinct and finite".into(),
        ));
    }
    let mu_a = table.column(Column::A);
    let mu_b = table.column(Column::B);
    let top_a = argmax(&mu_a);
    let top_b = argmax(&mu_b);
    if top_a == top_b {
        return Err(Error::Fit(format!(
            "exemplar {} is the most typical for both concepts; the sources would coincide",
            table.records()[top_a].name
        )));
    }
    let two = T::lit(2.0);
    let width = |peak: T, at_other: T, which: &str| -> Result<T> {
        if !(at_other > T::zero()) || !(at_other < peak) {
            return Err(Error::Fit(format!(
                "{which}: probability at the other centre must lie strictly between 0 and the peak"
            )));
        }
        Ok(d / (two * (peak / at_other).ln()).sqrt())
    };
    let sigma_a = width(mu_a[top_a], mu_a[top_b], "field A")?;
    let sigma_b = width(mu_b[top_b], mu_b[top_a], "field B")?;
    Ok(FieldPair {
        a: GaussianField {
            center: center_a,
            sigma: sigma_a,
            peak: scale * mu_a[top_a],
        },
        b: GaussianField {
            center: center_b,
            sigma: sigma_b,
            peak: scale * mu_b[top_b],
        },
        top_a: top_a + 1,
        top_b: top_b + 1,
        max_a: mu_a[top_a],
        max_b: mu_b[top_b],
    })
}
