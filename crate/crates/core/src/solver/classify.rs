use serde::{Deserialize, Serialize};

use super::InterferenceSolution;
use crate::scalar::Scalar;

/// Deviations within this band of zero count as classical.
pub const CLASSICAL_BAND: f64 = 1e-12;

/// Effect of interference on one exemplar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InterferenceClass {
    /// Combined probability below the classical average (underextension).
    Weakening,
    /// Combined probability above the classical average (overextension).
    Strengthening,
    Classical,
}

impl InterferenceClass {
    pub fn from_deviation<T: Scalar>(deviation: T) -> Self {
        let band = T::lit(CLASSICAL_BAND);
        if deviation < -band {
            InterferenceClass::Weakening
        } else if deviation > band {
            InterferenceClass::Strengthening
        } else {
            InterferenceClass::Classical
        }
    }

    /// Same decision read off the phase: destructive beyond 90°, constructive
    /// inside it. Only equivalent to [`Self::from_deviation`] where c = 1.
    pub fn from_phase_deg<T: Scalar>(phi_deg: T) -> Self {
        let right = T::lit(90.0);
        let a = phi_deg.abs();
        if a > right {
            InterferenceClass::Weakening
        } else if a < right {
            InterferenceClass::Strengthening
        } else {
            InterferenceClass::Classical
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            InterferenceClass::Weakening => "Weakening",
            InterferenceClass::Strengthening => "Strengthening",
            InterferenceClass::Classical => "Classical",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub index: usize,
    pub name: String,
    pub class: InterferenceClass,
}

pub fn classify_exemplars<T: Scalar>(solution: &InterferenceSolution<T>) -> Vec<Classification> {
    solution
        .rows
        .iter()
        .map(|row| Classification {
            index: row.index,
            name: row.name.clone(),
            class: InterferenceClass::from_deviation(row.deviation),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deviation_thresholds() {
        assert_eq!(
            InterferenceClass::from_deviation(-0.0174_f64),
            InterferenceClass::Weakening
        );
        assert_eq!(
            InterferenceClass::from_deviation(0.0262_f64),
            InterferenceClass::Strengthening
        );
        assert_eq!(
            InterferenceClass::from_deviation(0.0_f64),
            InterferenceClass::Classical
        );
        assert_eq!(
            InterferenceClass::from_deviation(5e-13_f64),
            InterferenceClass::Classical
        );
    }

    #[test]
    fn phase_thresholds() {
        assert_eq!(
            InterferenceClass::from_phase_deg(-113.2_f64),
            InterferenceClass::Weakening
        );
        assert_eq!(
            InterferenceClass::from_phase_deg(-69.07_f64),
            InterferenceClass::Strengthening
        );
        assert_eq!(
            InterferenceClass::from_phase_deg(90.0_f64),
            InterferenceClass::Classical
        );
    }
}
