use std::fmt::Write as _;

use super::{FieldPair, Point};
use crate::dataset::TypicalityTable;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Placement<T> {
    pub index: usize,
    pub name: String,
    pub location: Point<T>,
    /// Root of the summed squared radial violations of both level curves.
    pub residual: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlacementMap<T> {
    pub placements: Vec<Placement<T>>,
}

impl<T: Scalar> PlacementMap<T> {
    pub fn get(&self, index: usize) -> Option<&Placement<T>> {
        index.checked_sub(1).and_then(|i| self.placements.get(i))
    }

    pub fn locations(&self) -> Vec<Point<T>> {
        self.placements.iter().map(|p| p.location).collect()
    }

    /// `exemplar,x,y,residual` rows, full precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("exemplar,x,y,residual\n");
        for p in &self.placements {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                p.name, p.location.x, p.location.y, p.residual
            );
        }
        out
    }
}

/// Intersections of two circles, left point first relative to the direction
/// from `c1` to `c2`. `None` when they do not meet or the centres coincide.
pub fn circle_intersections<T: Scalar>(
    c1: Point<T>,
    r1: T,
    c2: Point<T>,
    r2: T,
) -> Option<(Point<T>, Point<T>)> {
    let d = c1.distance(c2);
    if !(d > T::zero()) {
        return None;
    }
    let two = T::lit(2.0);
    let along = (d * d + r1 * r1 - r2 * r2) / (two * d);
    let h_sqr = r1 * r1 - along * along;
    if h_sqr < T::zero() {
        return None;
    }
    let h = h_sqr.sqrt();
    let ux = (c2.x - c1.x) / d;
    let uy = (c2.y - c1.y) / d;
    let base = Point::new(c1.x + along * ux, c1.y + along * uy);
    // Left normal of (ux, uy) is (-uy, ux).
    let left = Point::new(base.x - h * uy, base.y + h * ux);
    let right = Point::new(base.x + h * uy, base.y - h * ux);
    Some((left, right))
}

/// Point on the centre line minimising `(|p - c1| - r1)^2 + (|p - c2| - r2)^2`,
/// returned as the signed distance `t` from `c1` toward `c2` plus the minimum.
fn best_on_center_line<T: Scalar>(d: T, r1: T, r2: T) -> (T, T) {
    let two = T::lit(2.0);
    // On each piece |t| = s1 t and |d - t| = s2 t + k2 are linear.
    let pieces: [(T, T, T, T, T); 3] = [
        (T::neg_infinity(), T::zero(), -T::one(), -T::one(), d),
        (T::zero(), d, T::one(), -T::one(), d),
        (d, T::infinity(), T::one(), T::one(), -d),
    ];
    let mut best: Option<(T, T)> = None;
    for (lo, hi, s1, s2, k2) in pieces {
        // f(t) = (s1 t - r1)^2 + (s2 t + k2 - r2)^2
        let c1 = -r1;
        let c2 = k2 - r2;
        let t = (-(s1 * c1 + s2 * c2) / two).max(lo).min(hi);
        let f = (s1 * t + c1).powi(2) + (s2 * t + c2).powi(2);
        if best.is_none_or(|(_, bf)| f < bf) {
            best = Some((t, f));
        }
    }
    best.expect("three candidate pieces")
}

/// Places every exemplar on the intersection of its two level curves.
///
/// The top exemplar of each concept sits on that concept's centre. Others take
/// the intersection left of the line from centre A to centre B when their
/// index is even and the right one when odd. Exemplars whose circles miss each
/// other fall back to the best point on the centre line, with a nonzero
/// residual.
pub fn place_exemplars<T: Scalar>(
    table: &TypicalityTable<T>,
    fields: &FieldPair<T>,
) -> PlacementMap<T> {
    let ca = fields.a.center;
    let cb = fields.b.center;
    let d = ca.distance(cb);
    let placements = table
        .records()
        .iter()
        .map(|r| {
            let (location, residual) = if r.index == fields.top_a {
                (ca, T::zero())
            } else if r.index == fields.top_b {
                (cb, T::zero())
            } else {
                let ra = fields.a.level_radius(r.mu_a / fields.max_mu_a());
                let rb = fields.b.level_radius(r.mu_b / fields.max_mu_b());
                match circle_intersections(ca, ra, cb, rb) {
                    Some((left, right)) => (if r.index % 2 == 0 { left } else { right }, T::zero()),
                    None => {
                        let (t, f) = best_on_center_line(d, ra, rb);
                        let s = t / d;
                        (
                            Point::new(ca.x + s * (cb.x - ca.x), ca.y + s * (cb.y - ca.y)),
                            f.sqrt(),
                        )
                    }
                }
            };
            Placement {
                index: r.index,
                name: r.name.clone(),
                location,
                residual,
            }
        })
        .collect();
    PlacementMap { placements }
}
