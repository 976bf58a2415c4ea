//! Discrete orthogonality measures on finite grids.

use crate::Scalar;
use alloc::vec::Vec;
use num_traits::Zero;

/// A finite discrete measure: weights attached to grid points, together with
/// the total mass κ₀ = Σ_s w_s used to normalize orthogonality relations.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    /// Grid points x_0, …, x_N in grid order.
    pub points: Vec<Scalar>,
    /// Weight w_s at each grid point.
    pub weights: Vec<Scalar>,
    /// Total mass κ₀ = Σ_s w_s.
    pub kappa0: Scalar,
}

impl DiscreteMeasure {
    /// Number of grid points (N + 1).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// True when the grid is empty (never the case for valid parameters).
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// True when every weight is strictly positive, i.e. when the measure is
    /// a genuine positive-definite orthogonality measure.
    pub fn is_positive(&self) -> bool {
        self.weights.iter().all(|w| *w > Scalar::zero())
    }

    /// Σ_s w_s · f(x_s) for an arbitrary integrand.
    pub fn integrate<F: FnMut(&Scalar) -> Scalar>(&self, mut f: F) -> Scalar {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .fold(Scalar::zero(), |acc, t| acc + t)
    }
}
