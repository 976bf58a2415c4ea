//! Dense univariate polynomials over exact rational coefficients.

use crate::scalar::Scalar;
use crate::Error;
use alloc::borrow::ToOwned;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

/// Polynomial with ascending coefficients and no trailing zeros (the zero
/// polynomial stores no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        Polynomial::affine(Scalar::zero(), Scalar::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Scalar) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The affine polynomial c0 + c1·x.
    pub fn affine(c0: Scalar, c1: Scalar) -> Self {
        Polynomial::from_coeffs(vec![c0, c1])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// Horner evaluation at an exact point.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Multiplies by the scalar c.
    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Composition p(a·x + b) by Horner over polynomials.
    pub fn compose_affine(&self, a: &Scalar, b: &Scalar) -> Self {
        let inner = Polynomial::affine(b.clone(), a.clone());
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Substitutes x ↦ x², i.e. p(x) becomes p(x²).
    pub fn inflate(&self) -> Self {
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() * 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg d. Panics on a zero divisor (callers never pass one).
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] = &rem[k + j] - t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = c;
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Division that the caller's algebra guarantees to be exact; a nonzero
    /// remainder is reported as [`Error::NonExactDivision`].
    pub fn divide_exact(&self, d: &Polynomial, context: &str) -> Result<Polynomial, Error> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision {
                context: context.to_owned(),
            })
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = Scalar::one() / l;
                a.scale(&inv)
            }
            _ => a,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Scalar::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Monic orthogonal sequence P_0, …, P_m from recurrence data
/// P_{k+1} = (x − b_k)·P_k − u_k·P_{k−1}, where `b` holds b_0..b_{m−1} and
/// `u` holds u_1..u_{m−1} at indices 1.. (index 0 of `u` is ignored).
pub fn monic_from_recurrence(b: &[Scalar], u: &[Scalar]) -> Vec<Polynomial> {
    let mut seq = Vec::with_capacity(b.len() + 1);
    seq.push(Polynomial::one());
    for (k, bk) in b.iter().enumerate() {
        let shift = Polynomial::affine(-bk.clone(), Scalar::one());
        let mut next = &shift * &seq[k];
        if k >= 1 {
            next = &next - &seq[k - 1].scale(&u[k]);
        }
        seq.push(next);
    }
    seq
}
