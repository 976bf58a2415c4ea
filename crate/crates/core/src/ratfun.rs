//! Reduced rational functions over exact rational coefficients.

use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::Error;
use alloc::borrow::ToOwned;
use alloc::format;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

/// Quotient of two polynomials kept in lowest terms with a monic
/// denominator, so equality of values is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds num/den, reducing by the gcd and normalizing the denominator
    /// to be monic. A zero denominator is rejected.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::InvalidParameter {
                reason: "rational function denominator is zero".to_owned(),
            });
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = Scalar::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    /// Embeds a polynomial.
    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The zero function.
    pub fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }

    /// Reduced numerator.
    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Reduced (monic) denominator.
    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// True when the reduced denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Extracts the polynomial a reduced quotient represents; a surviving
    /// denominator is reported as [`Error::NonExactDivision`].
    pub fn to_polynomial(&self, context: &str) -> Result<Polynomial, Error> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NonExactDivision {
                context: format!("{context}: denominator {} survives reduction", self.den),
            })
        }
    }

    /// Evaluates at an exact point; a vanishing denominator is a
    /// [`Error::DenominatorPole`].
    pub fn eval(&self, at: &Scalar) -> Result<Scalar, Error> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DenominatorPole {
                context: format!("rational function evaluated at pole x = {at}"),
            });
        }
        Ok(self.num.eval(at) / d)
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        RationalFunction::new(&self.num * p, self.den.clone())
            .expect("denominator unchanged and nonzero")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
