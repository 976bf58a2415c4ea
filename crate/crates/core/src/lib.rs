//! Exact-arithmetic library for the dual q-Hahn orthogonal polynomials and
//! their q → −1 descendants, the dual −1 Hahn polynomials.
//!
//! Everything algebraic is computed over arbitrary-precision rationals
//! ([`Scalar`]), so the defining identities — recurrences, orthogonality,
//! difference/Dunkl eigenvalue equations, closed forms, Christoffel splits —
//! hold *exactly* and are tested as zero residuals. Coefficient formulas are
//! additionally generic over [`scalar::Field`] so the float-based limit
//! sweeps (in the companion crate) reuse the same code paths.
//!
//! Module map:
//! - [`scalar`]: exact rationals, parsing, the shared numeric trait;
//! - [`hyper`]: Pochhammer symbols and terminating ₃F₂ / ₃φ₂ kernels;
//! - [`poly`], [`ratfun`], [`matrix`]: dense polynomials, reduced rational
//!   functions, and exact dense linear algebra;
//! - [`qhahn`]: the dual q-Hahn family on the grid x_s = q^(−s) + a·b·q^(s+1);
//! - [`m1hahn`]: the dual −1 Hahn family on its bi-lattice grids, with
//!   weights, closed forms and Christoffel factorization;
//! - [`operators`]: tridiagonal and five-diagonal difference stencils, the
//!   Dunkl shift operator, the classical dual Hahn operator, and the
//!   generalized Leonard pair built from them.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod hyper;
pub mod m1hahn;
pub mod matrix;
pub mod measure;
pub mod operators;
pub mod poly;
pub mod qhahn;
pub mod ratfun;
pub mod scalar;

pub use measure::DiscreteMeasure;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use scalar::{Field, Scalar};

use alloc::string::String;
use core::fmt;

/// Errors raised by constructions and exact computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A denominator factor evaluated to zero and the singularity is not
    /// removable. The context names the offending factor (and index).
    DenominatorPole { context: String },
    /// Two grid points coincide; the indices identify the collision.
    DegenerateGrid { first: usize, second: usize },
    /// A division that the algebra guarantees to be exact left a remainder.
    NonExactDivision { context: String },
    /// The polynomial-evaluation matrix on the grid is singular.
    SingularEvaluationMatrix,
    /// A parameter violates a documented constraint.
    InvalidParameter { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DenominatorPole { context } => {
                write!(f, "denominator pole: {context}")
            }
            Error::DegenerateGrid { first, second } => {
                write!(f, "degenerate grid: points {first} and {second} coincide")
            }
            Error::NonExactDivision { context } => {
                write!(f, "division is not exact: {context}")
            }
            Error::SingularEvaluationMatrix => {
                write!(f, "evaluation matrix is singular")
            }
            Error::InvalidParameter { reason } => {
                write!(f, "invalid parameter: {reason}")
            }
        }
    }
}
