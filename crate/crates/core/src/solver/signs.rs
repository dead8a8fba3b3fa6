use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<T: Scalar>(self, magnitude: T) -> T {
        match self {
            Sign::Plus => magnitude,
            Sign::Minus => -magnitude,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One greedy decision: the exemplar visited, its sign, and the running signed
/// sum right after the decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignStep<T> {
    /// 1-based exemplar index.
    pub index: usize,
    pub magnitude: T,
    pub sign: Sign,
    pub running_sum: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignAssignment<T> {
    /// Signs in table order.
    pub signs: Vec<Sign>,
    /// 1-based index of the largest magnitude.
    pub m: usize,
    /// Decisions in visit order; the first step is `m`.
    pub trace: Vec<SignStep<T>>,
}

impl<T: Scalar> SignAssignment<T> {
    pub fn final_sum(&self) -> T {
        self.trace
            .last()
            .map(|s| s.running_sum)
            .unwrap_or_else(T::zero)
    }

    pub fn visit_order(&self) -> Vec<usize> {
        self.trace.iter().map(|s| s.index).collect()
    }
}

/// 0-based indices sorted by decreasing magnitude, ties by ascending index.
pub(crate) fn descending_order<T: Scalar>(magnitudes: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..magnitudes.len()).collect();
    order.sort_by(|&i, &j| {
        magnitudes[j]
            .partial_cmp(&magnitudes[i])
            .unwrap_or(Ordering::Equal)
            .then(i.cmp(&j))
    });
    order
}

/// Greedy sign choice for the λ magnitudes.
///
/// The largest magnitude gets `+`; every other magnitude, visited from largest
/// to smallest, gets `-` whenever the running sum stays nonnegative after the
/// subtraction and `+` otherwise. The final sum is therefore nonnegative and
/// never exceeds the largest magnitude.
pub fn assign_signs<T: Scalar>(magnitudes: &[T]) -> Result<SignAssignment<T>> {
    if magnitudes.len() < 2 {
        return Err(Error::Input(format!(
            "sign assignment needs at least 2 magnitudes, got {}",
            magnitudes.len()
        )));
    }
    if let Some((i, v)) = magnitudes
        .iter()
        .enumerate()
        .find(|(_, v)| !(**v >= T::zero()) || !v.is_finite())
    {
        return Err(Error::Input(format!(
            "magnitude {} at index {} is not a finite nonnegative number",
            v,
            i + 1
        )));
    }

    let order = descending_order(magnitudes);
    let mut signs = vec![Sign::Plus; magnitudes.len()];
    let mut trace = Vec::with_capacity(magnitudes.len());
    let first = order[0];
    let mut running = magnitudes[first];
    trace.push(SignStep {
        index: first + 1,
        magnitude: running,
        sign: Sign::Plus,
        running_sum: running,
    });
    for &k in &order[1..] {
        let magnitude = magnitudes[k];
        let lowered = running - magnitude;
        let sign = if lowered >= T::zero() {
            running = lowered;
            Sign::Minus
        } else {
            running = running + magnitude;
            Sign::Plus
        };
        signs[k] = sign;
        trace.push(SignStep {
            index: k + 1,
            magnitude,
            sign,
            running_sum: running,
        });
    }
    Ok(SignAssignment {
        signs,
        m: first + 1,
        trace,
    })
}
