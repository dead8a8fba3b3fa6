//! Floating-point abstraction shared by every numerical module.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, NumCast};

/// Real scalar the model is computed in: `f32` or `f64`.
///
/// Tolerances throughout the crate are stated for `f64`; with `f32` the same
/// pipeline runs, but residuals land near `f32::EPSILON` instead.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumCast
    + FromStr
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal, panicking only for values `Self` cannot hold at all.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Cosine of an angle in degrees, exact at multiples of 90°.
pub fn cos_deg<T: Scalar>(degrees: T) -> T {
    let full = T::lit(360.0);
    let reduced = degrees % full;
    let reduced = if reduced < T::zero() {
        reduced + full
    } else {
        reduced
    };
    if reduced == T::zero() {
        T::one()
    } else if reduced == T::lit(90.0) || reduced == T::lit(270.0) {
        T::zero()
    } else if reduced == T::lit(180.0) {
        -T::one()
    } else {
        reduced.to_radians().cos()
    }
}

/// Sine of an angle in degrees, exact at multiples of 90°.
pub fn sin_deg<T: Scalar>(degrees: T) -> T {
    cos_deg(degrees - T::lit(90.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(cos_deg(90.0_f64), 0.0);
        assert_eq!(cos_deg(-90.0_f64), 0.0);
        assert_eq!(cos_deg(180.0_f64), -1.0);
        assert_eq!(cos_deg(720.0_f64), 1.0);
        assert_eq!(sin_deg(90.0_f64), 1.0);
        assert_eq!(sin_deg(-90.0_f64), -1.0);
        assert_eq!(cos_deg(90.0_f32), 0.0);
    }

    #[test]
    fn generic_angles_match_libm() {
        for deg in [-113.2431_f64, 12.5, 83.8854, 359.9] {
            assert!((cos_deg(deg) - deg.to_radians().cos()).abs() < 1e-14);
            assert!((sin_deg(deg) - deg.to_radians().sin()).abs() < 1e-14);
        }
    }
}
