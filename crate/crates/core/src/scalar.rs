//! Exact rational scalars and the numeric trait shared by exact and float
//! evaluation modes.

use crate::Error;
use alloc::format;
use core::ops::Neg;
use core::str::FromStr;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

/// Exact rational scalar. Arithmetic is arbitrary precision, equality is
/// decidable, and `Display` renders `p/q` (or just `p` when q = 1).
pub type Scalar = BigRational;

/// Numeric field the coefficient formulas are generic over. [`Scalar`]
/// instantiates the exact mode; `f64` instantiates the float mode used by
/// the limit sweeps. In float mode every *comparison* against zero is exact
/// bit equality, which the callers only rely on for structurally zero
/// factors (such as `1 - q^0`).
pub trait Field: Clone + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    /// Embeds a small signed integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 embeds into the field")
    }

    /// Raises to a signed integer power. Negative exponents invert; a zero
    /// base with a negative exponent panics (callers validate first).
    fn powi(&self, k: i64) -> Self {
        if k < 0 {
            return Self::one() / self.powi(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl<T> Field for T where T: Clone + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Rational scalar n/d. Panics if d = 0.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

/// Parses an exact rational from `"3"`, `"-7/2"`, `"1/3"` form.
pub fn parse(text: &str) -> Result<Scalar, Error> {
    let bad = |t: &str| Error::InvalidParameter {
        reason: format!("`{t}` is not a rational (expected `p` or `p/q`)"),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let n = BigInt::from_str(num.trim()).map_err(|_| bad(text))?;
    let d = match den {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad(text))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::InvalidParameter {
            reason: format!("`{text}` has a zero denominator"),
        });
    }
    Ok(Scalar::new(n, d))
}

/// Converts an exact scalar to the nearest `f64`.
pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
