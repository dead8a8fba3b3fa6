//! Amplitude vectors in C^(n+1) and the structural projector layout of the
//! model: rank-1 rays for every exemplar except one, which owns a plane.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type ComplexScalar<T> = Complex<T>;

/// Largest |<u|v>| accepted by [`superpose_normalized`].
pub const ORTHOGONALITY_PRECONDITION: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    pub fn new(amplitudes: Vec<Complex<T>>) -> Self {
        StateVector { amplitudes }
    }

    pub fn from_real(values: impl IntoIterator<Item = T>) -> Self {
        Self::new(
            values
                .into_iter()
                .map(|v| Complex::new(v, T::zero()))
                .collect(),
        )
    }

    /// Unit vector along 0-based coordinate `j` of a `dim`-dimensional space.
    pub fn basis(dim: usize, j: usize) -> Self {
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); dim];
        amplitudes[j] = Complex::new(T::one(), T::zero());
        Self::new(amplitudes)
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.amplitudes
            .iter()
            .all(|a| a.re.is_finite() && a.im.is_finite())
    }

    /// `|norm - 1| <= tolerance`.
    pub fn is_normalized(&self, tolerance: T) -> bool {
        (self.norm() - T::one()).abs() <= tolerance
    }
}

/// `<u|v> = sum conj(u_k) v_k`.
pub fn inner_product<T: Scalar>(u: &StateVector<T>, v: &StateVector<T>) -> Result<Complex<T>> {
    if u.len() != v.len() {
        return Err(Error::Dimension {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.amplitudes
        .iter()
        .zip(&v.amplitudes)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
            acc + a.conj() * b
        }))
}

/// Spectral decomposition over C^(n+1): `M_k` projects onto coordinate `k`
/// for `k != m`, and `M_m` onto the plane spanned by coordinates `m` and
/// `n + 1`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectorLayout {
    n: usize,
    m: usize,
}

impl ProjectorLayout {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("projector layout needs n >= 1".into()));
        }
        if m == 0 || m > n {
            return Err(Error::Index { index: m, len: n });
        }
        Ok(ProjectorLayout { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of the Hilbert space, `n + 1`.
    pub fn dimension(&self) -> usize {
        self.n + 1
    }

    /// 0-based coordinates spanned by the range of `M_k`.
    pub fn support(&self, k: usize) -> Result<Vec<usize>> {
        if k == 0 || k > self.n {
            return Err(Error::Index {
                index: k,
                len: self.n,
            });
        }
        Ok(if k == self.m {
            vec![k - 1, self.n]
        } else {
            vec![k - 1]
        })
    }
}

/// `<u|M_k|u>`.
pub fn project_probability<T: Scalar>(
    layout: &ProjectorLayout,
    k: usize,
    u: &StateVector<T>,
) -> Result<T> {
    let support = layout.support(k)?;
    if u.len() != layout.dimension() {
        return Err(Error::Dimension {
            left: u.len(),
            right: layout.dimension(),
        });
    }
    Ok(support
        .into_iter()
        .fold(T::zero(), |acc, j| acc + u.amplitudes[j].norm_sqr()))
}

/// `(u + v) / sqrt(2)` for orthogonal unit vectors.
pub fn superpose_normalized<T: Scalar>(
    u: &StateVector<T>,
    v: &StateVector<T>,
) -> Result<StateVector<T>> {
    let overlap = inner_product(u, v)?.norm();
    if !(overlap < T::lit(ORTHOGONALITY_PRECONDITION)) {
        return Err(Error::NotOrthogonal {
            residual: overlap.to_f64_lossy(),
        });
    }
    let scale = T::SQRT_2().recip();
    Ok(StateVector::new(
        u.amplitudes
            .iter()
            .zip(&v.amplitudes)
            .map(|(a, b)| (a + b) * scale)
            .collect(),
    ))
}
