//! The dual q-Hahn family on the q-quadratic grid x_s = q^(−s) + a·b·q^(s+1).
//!
//! Coefficient formulas are generic over [`Field`]: the exact instantiation
//! drives the identity checks, while the `f64` instantiation travels the
//! q → ±1 paths in the limit sweeps. Constructions that need division
//! safety (weights, series values) are exact-only.

use crate::hyper::{phi32, q_pochhammer};
use crate::measure::DiscreteMeasure;
use crate::poly::{monic_from_recurrence, Polynomial};
use crate::scalar::{Field, Scalar};
use crate::Error;
use alloc::format;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Parameters (a, b, q) of a dual q-Hahn family truncated at level N =
/// `n_max`: degrees and grid indices both run over 0..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct QHahnParams<T> {
    pub a: T,
    pub b: T,
    pub q: T,
    pub n_max: usize,
}

impl<T: Field> QHahnParams<T> {
    /// Wraps parameters without validation; use [`QHahnParams::new`] for the
    /// exact, checked constructor.
    pub fn unchecked(a: T, b: T, q: T, n_max: usize) -> Self {
        QHahnParams { a, b, q, n_max }
    }

    /// Grid point x_s = q^(−s) + a·b·q^(s+1).
    pub fn grid(&self, s: usize) -> T {
        let s = s as i64;
        self.q.powi(-s) + self.a.clone() * self.b.clone() * self.q.powi(s + 1)
    }

    /// Forward branch coefficient A_n = (1 − q^(n−N))(1 − a·q^(n+1)).
    pub fn a_coeff(&self, n: usize) -> T {
        let n = n as i64;
        let nn = self.n_max as i64;
        (T::one() - self.q.powi(n - nn)) * (T::one() - self.a.clone() * self.q.powi(n + 1))
    }

    /// Backward branch coefficient C_n = a·q·(1 − q^n)(b − q^(n−N−1)).
    pub fn c_coeff(&self, n: usize) -> T {
        let n = n as i64;
        let nn = self.n_max as i64;
        self.a.clone()
            * self.q.clone()
            * (T::one() - self.q.powi(n))
            * (self.b.clone() - self.q.powi(n - nn - 1))
    }

    /// Monic recurrence diagonal b_n = 1 + a·b·q − A_n − C_n.
    pub fn b_monic(&self, n: usize) -> T {
        T::one() + self.a.clone() * self.b.clone() * self.q.clone()
            - self.a_coeff(n)
            - self.c_coeff(n)
    }

    /// Monic recurrence product u_n = A_(n−1)·C_n (zero at n = 0).
    pub fn u_monic(&self, n: usize) -> T {
        if n == 0 {
            return T::zero();
        }
        self.a_coeff(n - 1) * self.c_coeff(n)
    }

    /// Upward difference-operator coefficient
    /// B(s) = (1 − q^(s−N))(1 − a·q^(s+1))(1 − a·b·q^(s+1)) /
    ///        [(1 − a·b·q^(2s+1))(1 − a·b·q^(2s+2))].
    ///
    /// B(N) carries the identically-zero factor (1 − q^0) and is returned as
    /// a structural zero without touching the denominator, which matters on
    /// the q → −1 float path where the denominator vanishes alongside it.
    pub fn difference_up(&self, s: usize) -> T {
        if s == self.n_max {
            return T::zero();
        }
        let s = s as i64;
        let nn = self.n_max as i64;
        let ab = self.a.clone() * self.b.clone();
        let num = (T::one() - self.q.powi(s - nn))
            * (T::one() - self.a.clone() * self.q.powi(s + 1))
            * (T::one() - ab.clone() * self.q.powi(s + 1));
        let den = (T::one() - ab.clone() * self.q.powi(2 * s + 1))
            * (T::one() - ab * self.q.powi(2 * s + 2));
        num / den
    }

    /// Downward difference-operator coefficient
    /// D(s) = −a·q^(s−N)(1 − q^s)(1 − a·b·q^(s+1+N))(1 − b·q^s) /
    ///        [(1 − a·b·q^(2s+1))(1 − a·b·q^(2s))].
    ///
    /// D(0) is a structural zero, mirroring [`QHahnParams::difference_up`].
    pub fn difference_down(&self, s: usize) -> T {
        if s == 0 {
            return T::zero();
        }
        let s = s as i64;
        let nn = self.n_max as i64;
        let ab = self.a.clone() * self.b.clone();
        let num = -self.a.clone()
            * self.q.powi(s - nn)
            * (T::one() - self.q.powi(s))
            * (T::one() - ab.clone() * self.q.powi(s + 1 + nn))
            * (T::one() - self.b.clone() * self.q.powi(s));
        let den = (T::one() - ab.clone() * self.q.powi(2 * s + 1))
            * (T::one() - ab * self.q.powi(2 * s));
        num / den
    }

    /// Difference-operator eigenvalue λ_n = q^(−n) − 1.
    pub fn eigenvalue(&self, n: usize) -> T {
        self.q.powi(-(n as i64)) - T::one()
    }
}

impl QHahnParams<Scalar> {
    /// Validated constructor. Rejects parameters that break the grid, the
    /// recurrence, the weights, or the difference operator:
    /// - N ≥ 1, q ∉ {0, ±1}, a ≠ 0;
    /// - a·q^k ≠ 1 and b·q^k ≠ 1 for k = 1..=N (degenerate recurrence);
    /// - a·b·q^k ≠ 1 for k = 0..=2N+2 (weight/operator denominator poles);
    /// - pairwise distinct grid points.
    pub fn new(a: Scalar, b: Scalar, q: Scalar, n_max: usize) -> Result<Self, Error> {
        if n_max == 0 {
            return Err(Error::InvalidParameter {
                reason: "truncation level N must be at least 1".into(),
            });
        }
        if q.is_zero() || q.is_one() || q == -Scalar::one() {
            return Err(Error::InvalidParameter {
                reason: format!("q = {q} must avoid 0, 1 and -1"),
            });
        }
        if a.is_zero() {
            return Err(Error::InvalidParameter {
                reason: "a must be nonzero".into(),
            });
        }
        let one = Scalar::one();
        for k in 1..=n_max as i64 {
            if a.clone() * q.powi(k) == one {
                return Err(Error::InvalidParameter {
                    reason: format!("a*q^{k} = 1 degenerates the recurrence"),
                });
            }
            if b.clone() * q.powi(k) == one {
                return Err(Error::InvalidParameter {
                    reason: format!("b*q^{k} = 1 degenerates the recurrence"),
                });
            }
        }
        let ab = a.clone() * b.clone();
        for k in 0..=(2 * n_max as i64 + 2) {
            if ab.clone() * q.powi(k) == one {
                return Err(Error::DenominatorPole {
                    context: format!("a*b*q^{k} = 1 hits a weight or operator denominator"),
                });
            }
        }
        let params = QHahnParams { a, b, q, n_max };
        let grid: Vec<Scalar> = (0..=n_max).map(|s| params.grid(s)).collect();
        for i in 0..grid.len() {
            for j in (i + 1)..grid.len() {
                if grid[i] == grid[j] {
                    return Err(Error::DegenerateGrid { first: i, second: j });
                }
            }
        }
        Ok(params)
    }

    /// Series value R_n(x_s) of the degree-n polynomial at grid node s, via
    /// the terminating basic series
    /// ₃φ₂(q^(−n), q^(−s), a·b·q^(s+1); a·q, q^(−N) | q; q).
    pub fn series(&self, n: usize, s: usize) -> Result<Scalar, Error> {
        let num = [
            self.q.powi(-(n as i64)),
            self.q.powi(-(s as i64)),
            self.a.clone() * self.b.clone() * self.q.powi(s as i64 + 1),
        ];
        let den = [
            self.a.clone() * self.q.clone(),
            self.q.powi(-(self.n_max as i64)),
        ];
        phi32(&num, &den, &self.q, &self.q, n)
    }

    /// All series-normalized values R_0(x_s), …, R_N(x_s) at node s through
    /// the three-term recurrence
    /// A_n·R_(n+1) = (x_s − 1 − a·b·q + A_n + C_n)·R_n − C_n·R_(n−1).
    pub fn recurrence_values(&self, s: usize) -> Vec<Scalar> {
        let x = self.grid(s);
        let shift = Scalar::one() + self.a.clone() * self.b.clone() * self.q.clone();
        let mut vals = Vec::with_capacity(self.n_max + 1);
        vals.push(Scalar::one());
        for n in 0..self.n_max {
            let an = self.a_coeff(n);
            let cn = self.c_coeff(n);
            let prev = if n == 0 {
                Scalar::zero()
            } else {
                vals[n - 1].clone()
            };
            let next = ((x.clone() + an.clone() + cn.clone() - shift.clone()) * vals[n].clone()
                - cn * prev)
                / an;
            vals.push(next);
        }
        vals
    }

    /// Orthogonality weights, their node values, and the total mass
    /// κ₀ = (a·b·q²; q)_N / (b·q; q)_N · (a·q)^(−N), with
    /// w_s = (a·q, a·b·q, q^(−N); q)_s / (q, a·b·q^(N+2), b·q; q)_s ·
    ///       (1 − a·b·q^(2s+1)) / [(1 − a·b·q)(−a·q)^s] · q^(Ns − s(s−1)/2).
    pub fn weights(&self) -> Result<DiscreteMeasure, Error> {
        let n = self.n_max;
        let q = &self.q;
        let aq = self.a.clone() * q.clone();
        let abq = self.a.clone() * self.b.clone() * q.clone();
        let bq = self.b.clone() * q.clone();
        let qmn = q.powi(-(n as i64));
        let abqn2 = self.a.clone() * self.b.clone() * q.powi(n as i64 + 2);
        let mut weights = Vec::with_capacity(n + 1);
        for s in 0..=n {
            let si = s as i64;
            let top = q_pochhammer(&aq, q, s)
                * q_pochhammer(&abq, q, s)
                * q_pochhammer(&qmn, q, s);
            let bot = q_pochhammer(q, q, s)
                * q_pochhammer(&abqn2, q, s)
                * q_pochhammer(&bq, q, s);
            if bot.is_zero() {
                return Err(Error::DenominatorPole {
                    context: format!("weight denominator vanishes at node {s}"),
                });
            }
            let balance = (Scalar::one() - self.a.clone() * self.b.clone() * q.powi(2 * si + 1))
                / ((Scalar::one() - abq.clone()) * (-aq.clone()).powi(si));
            let scale = q.powi(n as i64 * si - si * (si - 1) / 2);
            weights.push(top / bot * balance * scale);
        }
        let kappa_top = q_pochhammer(&(abq.clone() * q.clone()), q, n);
        let kappa_bot = q_pochhammer(&bq, q, n);
        if kappa_bot.is_zero() {
            return Err(Error::DenominatorPole {
                context: "total-mass denominator (bq; q)_N vanishes".into(),
            });
        }
        let kappa0 = kappa_top / kappa_bot * aq.powi(-(n as i64));
        Ok(DiscreteMeasure {
            points: (0..=n).map(|s| self.grid(s)).collect(),
            weights,
            kappa0,
        })
    }

    /// Monic polynomials P_0, …, P_m from the three-term recurrence.
    pub fn monic_polys(&self, up_to: usize) -> Vec<Polynomial> {
        let b: Vec<Scalar> = (0..up_to).map(|k| self.b_monic(k)).collect();
        let u: Vec<Scalar> = (0..up_to).map(|k| self.u_monic(k)).collect();
        monic_from_recurrence(&b, &u)
    }
}
