//! Pochhammer symbols and terminating hypergeometric kernels.
//!
//! Both kernels are *terminating* sums: the first numerator parameter must
//! be a non-positive-integer node (−n for ₃F₂, q^(−n) for ₃φ₂) so the series
//! cuts off after n + 1 terms. Denominator parameters are pre-scanned so a
//! vanishing denominator factor inside the summation range surfaces as
//! [`Error::DenominatorPole`] instead of a panic.

use crate::scalar::Field;
use crate::Error;
use alloc::format;
use alloc::vec::Vec;

/// Rising factorial (c)_k = c(c+1)⋯(c+k−1), with (c)_0 = 1.
pub fn pochhammer<T: Field>(c: &T, k: usize) -> T {
    let mut acc = T::one();
    for j in 0..k {
        acc = acc * (c.clone() + T::from_int(j as i64));
    }
    acc
}

/// q-shifted factorial (c; q)_k = (1−c)(1−cq)⋯(1−cq^(k−1)), with (c; q)_0 = 1.
pub fn q_pochhammer<T: Field>(c: &T, q: &T, k: usize) -> T {
    let mut acc = T::one();
    let mut cq = c.clone();
    for _ in 0..k {
        acc = acc * (T::one() - cq.clone());
        cq = cq * q.clone();
    }
    acc
}

/// Terminating ₃F₂(a₁, a₂, a₃; b₁, b₂ | 1) with a₁ = −n, summed over n + 1
/// terms by the forward term recursion
/// t_k = t_{k−1} · (a₁+k−1)(a₂+k−1)(a₃+k−1) / [(b₁+k−1)(b₂+k−1) k].
///
/// Fails with [`Error::DenominatorPole`] when a denominator parameter is a
/// non-positive integer that vanishes before the series terminates.
pub fn hyp3f2<T: Field>(num: &[T; 3], den: &[T; 2], n: usize) -> Result<T, Error> {
    debug_assert!(
        num[0] == -T::from_int(n as i64),
        "first numerator parameter must equal -n"
    );
    for (i, b) in den.iter().enumerate() {
        for k in 0..n {
            if b.clone() + T::from_int(k as i64) == T::zero() {
                return Err(Error::DenominatorPole {
                    context: format!("3F2 denominator parameter {i} vanishes at term {}", k + 1),
                });
            }
        }
    }
    let mut sum = T::one();
    let mut term = T::one();
    for k in 1..=n {
        let km1 = T::from_int((k - 1) as i64);
        let mut ratio = T::one();
        for a in num {
            ratio = ratio * (a.clone() + km1.clone());
        }
        let mut d = T::from_int(k as i64);
        for b in den {
            d = d * (b.clone() + km1.clone());
        }
        term = term * ratio / d;
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// Terminating basic series ₃φ₂(a₁, a₂, a₃; b₁, b₂ | q; z) with a₁ = q^(−n):
///   Σ_k (a₁;q)_k (a₂;q)_k (a₃;q)_k / [(b₁;q)_k (b₂;q)_k (q;q)_k] · z^k.
///
/// Fails with [`Error::DenominatorPole`] when (b_i; q)_k vanishes before the
/// series terminates.
pub fn phi32<T: Field>(num: &[T; 3], den: &[T; 2], q: &T, z: &T, n: usize) -> Result<T, Error> {
    debug_assert!(
        num[0].clone() * q.powi(n as i64) == T::one(),
        "first numerator parameter must equal q^(-n)"
    );
    for (i, b) in den.iter().enumerate() {
        let mut bq = b.clone();
        for k in 0..n {
            if bq == T::one() {
                return Err(Error::DenominatorPole {
                    context: format!("3phi2 denominator parameter {i} hits q^(-{k})"),
                });
            }
            bq = bq * q.clone();
        }
    }
    // running factors a·q^(k−1), b·q^(k−1), q^k for the term ratio
    let mut nums: Vec<T> = num.iter().cloned().collect();
    let mut dens: Vec<T> = den.iter().cloned().collect();
    let mut qk = q.clone();
    let mut sum = T::one();
    let mut term = T::one();
    for _ in 1..=n {
        let mut ratio = z.clone();
        for a in nums.iter_mut() {
            ratio = ratio * (T::one() - a.clone());
            *a = a.clone() * q.clone();
        }
        let mut d = T::one() - qk.clone();
        for b in dens.iter_mut() {
            d = d * (T::one() - b.clone());
            *b = b.clone() * q.clone();
        }
        qk = qk * q.clone();
        term = term * ratio / d;
        sum = sum + term.clone();
    }
    Ok(sum)
}
