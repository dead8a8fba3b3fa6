use super::{PlacementMap, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseNode<T> {
    pub location: Point<T>,
    pub phi_deg: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseRule<T> {
    /// Shepard interpolation with weights `1 / r^2`.
    InverseDistanceSquared,
    /// The same phase everywhere, in degrees.
    Constant(T),
}

/// Phase difference between the two wave functions over the plane, degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseField<T> {
    pub nodes: Vec<PhaseNode<T>>,
    pub rule: PhaseRule<T>,
}

impl<T: Scalar> PhaseField<T> {
    pub fn constant(phi_deg: T) -> Self {
        PhaseField {
            nodes: Vec::new(),
            rule: PhaseRule::Constant(phi_deg),
        }
    }

    pub fn rule_name(&self) -> &'static str {
        match self.rule {
            PhaseRule::InverseDistanceSquared => "inverse-distance-squared",
            PhaseRule::Constant(_) => "constant",
        }
    }

    /// Interpolated phase at `p`. Exact at nodes, and clamped to the node range
    /// so rounding never leaves the convex hull of node values.
    pub fn evaluate(&self, p: Point<T>) -> T {
        match self.rule {
            PhaseRule::Constant(value) => value,
            PhaseRule::InverseDistanceSquared => {
                let mut weight_sum = T::zero();
                let mut weighted = T::zero();
                let mut lo = T::infinity();
                let mut hi = T::neg_infinity();
                for node in &self.nodes {
                    let d2 = p.distance_sqr(node.location);
                    if d2 == T::zero() {
                        return node.phi_deg;
                    }
                    let w = d2.recip();
                    if !w.is_finite() {
                        return node.phi_deg;
                    }
                    weight_sum = weight_sum + w;
                    weighted = weighted + w * node.phi_deg;
                    lo = lo.min(node.phi_deg);
                    hi = hi.max(node.phi_deg);
                }
                (weighted / weight_sum).max(lo).min(hi)
            }
        }
    }
}

/// Inverse-distance-squared phase field through the placed exemplars.
pub fn interpolate_phase<T: Scalar>(
    placements: &PlacementMap<T>,
    phi_deg: &[T],
) -> Result<PhaseField<T>> {
    if placements.placements.len() != phi_deg.len() {
        return Err(Error::Dimension {
            left: placements.placements.len(),
            right: phi_deg.len(),
        });
    }
    if placements.placements.is_empty() {
        return Err(Error::Input("phase field needs at least one node".into()));
    }
    let nodes: Vec<PhaseNode<T>> = placements
        .placements
        .iter()
        .zip(phi_deg)
        .map(|(p, &phi)| PhaseNode {
            location: p.location,
            phi_deg: phi,
        })
        .collect();
    for (i, a) in nodes.iter().enumerate() {
        if let Some(j) = nodes[i + 1..].iter().position(|b| b.location == a.location) {
            return Err(Error::Input(format!(
                "exemplars {} and {} share location ({}, {})",
                placements.placements[i].name,
                placements.placements[i + 1 + j].name,
                a.location.x,
                a.location.y
            )));
        }
    }
    Ok(PhaseField {
        nodes,
        rule: PhaseRule::InverseDistanceSquared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavefield::Placement;

    fn map(points: &[(f64, f64)]) -> PlacementMap<f64> {
        PlacementMap {
            placements: points
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| Placement {
                    index: i + 1,
                    name: format!("e{}", i + 1),
                    location: Point::new(x, y),
                    residual: 0.0,
                })
                .collect(),
        }
    }

    #[test]
    fn exact_at_nodes() {
        let f = interpolate_phase(
            &map(&[(0.0, 0.0), (1.0, 0.0), (0.0, 2.0)]),
            &[10.0, -20.0, 35.5],
        )
        .unwrap();
        assert_eq!(f.evaluate(Point::new(1.0, 0.0)), -20.0);
        assert_eq!(f.evaluate(Point::new(0.0, 2.0)), 35.5);
    }

    #[test]
    fn symmetric_midpoint_of_opposite_phases() {
        let f = interpolate_phase(
            &map(&[(-1.0, 0.0), (1.0, 0.0), (1e4, 1e4), (-1e4, 1e4)]),
            &[90.0, -90.0, 30.0, -30.0],
        )
        .unwrap();
        assert!(f.evaluate(Point::new(0.0, 0.0)).abs() < 1e-6);
    }

    #[test]
    fn constant_values_reproduced_exactly() {
        let f =
            interpolate_phase(&map(&[(0.0, 0.0), (3.0, 1.0), (-2.0, 5.0)]), &[45.0; 3]).unwrap();
        for p in [(0.3, 0.7), (100.0, -3.0), (1e-9, 0.0)] {
            assert_eq!(f.evaluate(Point::new(p.0, p.1)), 45.0);
        }
    }

    #[test]
    fn duplicate_locations_rejected() {
        assert!(interpolate_phase(&map(&[(1.0, 1.0), (1.0, 1.0)]), &[0.0, 1.0]).is_err());
        assert!(interpolate_phase(&map(&[(1.0, 1.0)]), &[0.0, 1.0]).is_err());
    }
}
