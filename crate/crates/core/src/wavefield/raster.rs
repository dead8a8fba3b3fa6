use std::fmt::Write as _;

use super::{FieldPair, PhaseField, PlacementMap, Point};
use crate::error::{Error, Result};
use crate::scalar::{cos_deg, Scalar};

pub const DEFAULT_RESOLUTION: usize = 400;

/// World-coordinate rectangle covered by a raster.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window<T> {
    pub x_min: T,
    pub x_max: T,
    pub y_min: T,
    pub y_max: T,
}

impl<T: Scalar> Window<T> {
    pub fn new(x_min: T, x_max: T, y_min: T, y_max: T) -> Result<Self> {
        let w = Window {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        w.check()?;
        Ok(w)
    }

    fn check(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || !(self.x_max > self.x_min) || !(self.y_max > self.y_min) {
            return Err(Error::Render(format!(
                "degenerate window x [{}, {}], y [{}, {}]",
                self.x_min, self.x_max, self.y_min, self.y_max
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Resolution {
    pub width: usize,
    pub height: usize,
}

impl Resolution {
    pub fn square(n: usize) -> Self {
        Resolution {
            width: n,
            height: n,
        }
    }
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution::square(DEFAULT_RESOLUTION)
    }
}

/// Row-major grid of intensities. Row 0 is the top edge (`y_max`), column 0
/// the left edge (`x_min`); values are sampled at pixel centres.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterGrid<T> {
    pub width: usize,
    pub height: usize,
    pub window: Window<T>,
    pub values: Vec<T>,
}

impl<T: Scalar> RasterGrid<T> {
    fn pixel_size(&self) -> (T, T) {
        (
            (self.window.x_max - self.window.x_min) / T::from_usize(self.width).unwrap(),
            (self.window.y_max - self.window.y_min) / T::from_usize(self.height).unwrap(),
        )
    }

    pub fn pixel_center(&self, col: usize, row: usize) -> Point<T> {
        pixel_center(&self.window, self.width, self.height, col, row)
    }

    /// Pixel containing `p`, if inside the window.
    pub fn pixel_of(&self, p: Point<T>) -> Option<(usize, usize)> {
        let (dx, dy) = self.pixel_size();
        let col = ((p.x - self.window.x_min) / dx).floor();
        let row = ((self.window.y_max - p.y) / dy).floor();
        let col = col.to_usize()?;
        let row = row.to_usize()?;
        (col < self.width && row < self.height).then_some((col, row))
    }

    pub fn get(&self, col: usize, row: usize) -> T {
        self.values[row * self.width + col]
    }

    pub fn min_max(&self) -> (T, T) {
        self.values
            .iter()
            .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// Header `x_min,x_max,y_min,y_max,width,height`, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let w = &self.window;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            w.x_min, w.x_max, w.y_min, w.y_max, self.width, self.height
        );
        for row in self.values.chunks(self.width) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Binary PGM (P5, maxval 255), linearly mapping this grid's min..max to
    /// 0..255. A constant grid maps to all zeros.
    pub fn to_pgm(&self) -> Vec<u8> {
        let (lo, hi) = self.min_max();
        let span = hi - lo;
        let top = T::lit(255.0);
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend(self.values.iter().map(|&v| {
            if span > T::zero() {
                ((v - lo) / span * top)
                    .round()
                    .max(T::zero())
                    .min(top)
                    .to_u8()
                    .unwrap_or(0)
            } else {
                0
            }
        }));
        out
    }
}

fn pixel_center<T: Scalar>(
    window: &Window<T>,
    width: usize,
    height: usize,
    col: usize,
    row: usize,
) -> Point<T> {
    let half = T::lit(0.5);
    let fx = (T::from_usize(col).unwrap() + half) / T::from_usize(width).unwrap();
    let fy = (T::from_usize(row).unwrap() + half) / T::from_usize(height).unwrap();
    Point::new(
        window.x_min + fx * (window.x_max - window.x_min),
        window.y_max - fy * (window.y_max - window.y_min),
    )
}

/// Bounding box of the placements padded by twice the wider Gaussian width.
pub fn default_window<T: Scalar>(placements: &PlacementMap<T>, fields: &FieldPair<T>) -> Window<T> {
    let pad = T::lit(2.0) * fields.max_sigma();
    let mut w = Window {
        x_min: fields.a.center.x.min(fields.b.center.x),
        x_max: fields.a.center.x.max(fields.b.center.x),
        y_min: fields.a.center.y.min(fields.b.center.y),
        y_max: fields.a.center.y.max(fields.b.center.y),
    };
    for p in &placements.placements {
        w.x_min = w.x_min.min(p.location.x);
        w.x_max = w.x_max.max(p.location.x);
        w.y_min = w.y_min.min(p.location.y);
        w.y_max = w.y_max.max(p.location.y);
    }
    Window {
        x_min: w.x_min - pad,
        x_max: w.x_max + pad,
        y_min: w.y_min - pad,
        y_max: w.y_max + pad,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderedGrids<T> {
    pub a_only: RasterGrid<T>,
    pub b_only: RasterGrid<T>,
    /// `(G_A + G_B) / 2`
    pub classical: RasterGrid<T>,
    /// `(G_A + G_B) / 2 + sqrt(G_A G_B) cos(phi)`
    pub interference: RasterGrid<T>,
}

impl<T: Scalar> RenderedGrids<T> {
    /// Grids paired with their output file stems.
    pub fn named(&self) -> [(&'static str, &RasterGrid<T>); 4] {
        [
            ("a_only", &self.a_only),
            ("b_only", &self.b_only),
            ("classical", &self.classical),
            ("interference", &self.interference),
        ]
    }
}

pub fn render_grids<T: Scalar>(
    fields: &FieldPair<T>,
    phase: &PhaseField<T>,
    window: Window<T>,
    resolution: Resolution,
) -> Result<RenderedGrids<T>> {
    window.check()?;
    if resolution.width < 2 || resolution.height < 2 {
        return Err(Error::Render(format!(
            "resolution must be at least 2x2, got {}x{}",
            resolution.width, resolution.height
        )));
    }
    let Resolution { width, height } = resolution;
    let count = width * height;
    let mut a_only = Vec::with_capacity(count);
    let mut b_only = Vec::with_capacity(count);
    let mut classical = Vec::with_capacity(count);
    let mut interference = Vec::with_capacity(count);
    let half = T::lit(0.5);
    for row in 0..height {
        for col in 0..width {
            let p = pixel_center(&window, width, height, col, row);
            let ga = fields.a.intensity(p);
            let gb = fields.b.intensity(p);
            let mean = (ga + gb) * half;
            a_only.push(ga);
            b_only.push(gb);
            classical.push(mean);
            interference.push(mean + (ga * gb).sqrt() * cos_deg(phase.evaluate(p)));
        }
    }
    let grid = |values| RasterGrid {
        width,
        height,
        window,
        values,
    };
    Ok(RenderedGrids {
        a_only: grid(a_only),
        b_only: grid(b_only),
        classical: grid(classical),
        interference: grid(interference),
    })
}
