//! The dual −1 Hahn family: grids, recurrence data, weights, closed forms
//! and the Christoffel factorization of the shifted polynomials.
//!
//! Every formula branches on the parity of the truncation level N and, for
//! the structural data (grid, recurrence branches), on the parity of the
//! running index. The compact μ-number forms provide an independent route
//! to the same recurrence coefficients and are cross-checked in tests.

use crate::hyper::pochhammer;
use crate::measure::DiscreteMeasure;
use crate::poly::{monic_from_recurrence, Polynomial};
use crate::scalar::{frac, int, Field, Scalar};
use crate::Error;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// μ-number [n]_μ = n + μ(1 − (−1)^n): n for even n, n + 2μ for odd n.
pub fn mu_number(n: i64, mu: &Scalar) -> Scalar {
    if n % 2 == 0 {
        int(n)
    } else {
        int(n) + int(2) * mu
    }
}

/// Parameters (α, β) of a dual −1 Hahn family truncated at level N =
/// `n_max`; degrees and grid indices both run over 0..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct M1HahnParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub n_max: usize,
}

impl M1HahnParams {
    /// Wraps parameters without validation; use [`M1HahnParams::new`] for
    /// the checked constructor.
    pub fn unchecked(alpha: Scalar, beta: Scalar, n_max: usize) -> Self {
        M1HahnParams { alpha, beta, n_max }
    }

    /// Validated constructor. Rejects N = 0, coincident grid points,
    /// vanishing recurrence products u_n (degenerate orthogonality), and
    /// parameters that hit a weight denominator.
    pub fn new(alpha: Scalar, beta: Scalar, n_max: usize) -> Result<Self, Error> {
        if n_max == 0 {
            return Err(Error::InvalidParameter {
                reason: "truncation level N must be at least 1".into(),
            });
        }
        let params = M1HahnParams { alpha, beta, n_max };
        let grid: Vec<Scalar> = (0..=n_max).map(|s| params.grid(s)).collect();
        for i in 0..grid.len() {
            for j in (i + 1)..grid.len() {
                if grid[i] == grid[j] {
                    return Err(Error::DegenerateGrid { first: i, second: j });
                }
            }
        }
        for n in 1..=n_max {
            if params.u_monic(n).is_zero() {
                return Err(Error::InvalidParameter {
                    reason: format!("u_{n} = 0 degenerates the orthogonality"),
                });
            }
        }
        params.weights()?;
        Ok(params)
    }

    /// True when the truncation level N is even.
    pub fn even_level(&self) -> bool {
        self.n_max % 2 == 0
    }

    /// Grid point y_s: (−1)^s(1 − α − β + 2s) for even N and
    /// (−1)^s(α + β + 2s + 1) for odd N.
    pub fn grid(&self, s: usize) -> Scalar {
        let sign = if s % 2 == 0 { int(1) } else { int(-1) };
        let base = if self.even_level() {
            Scalar::one() - &self.alpha - &self.beta + int(2 * s as i64)
        } else {
            &self.alpha + &self.beta + int(2 * s as i64 + 1)
        };
        sign * base
    }

    /// Forward branch coefficient A_n of the parity-split recurrence.
    pub fn a_coeff(&self, n: usize) -> Scalar {
        let ni = n as i64;
        let nn = self.n_max as i64;
        match (self.even_level(), n % 2 == 0) {
            (true, true) => int(2 * (ni - nn)),
            (true, false) => int(2) * (int(ni + 1) - &self.alpha),
            (false, true) => int(2) * (&self.alpha + int(ni + 1)),
            (false, false) => int(2 * (ni - nn)),
        }
    }

    /// Backward branch coefficient C_n of the parity-split recurrence.
    pub fn c_coeff(&self, n: usize) -> Scalar {
        let ni = n as i64;
        let nn = self.n_max as i64;
        match (self.even_level(), n % 2 == 0) {
            (_, true) => int(-2 * ni),
            (true, false) => int(2) * (int(nn + 1 - ni) - &self.beta),
            (false, false) => int(2) * (&self.beta + int(nn - ni + 1)),
        }
    }

    /// Constant of the non-monic recurrence, so that
    /// b_n = `recurrence_const` − A_n − C_n.
    pub fn recurrence_const(&self) -> Scalar {
        if self.even_level() {
            Scalar::one() - &self.alpha - &self.beta
        } else {
            Scalar::one() + &self.alpha + &self.beta
        }
    }

    /// Monic recurrence diagonal b_n (branch form).
    pub fn b_monic(&self, n: usize) -> Scalar {
        let nn = self.n_max as i64;
        match (self.even_level(), n % 2 == 0) {
            (true, true) => int(2 * nn + 1) - &self.alpha - &self.beta,
            (true, false) => int(-2 * nn - 3) + &self.alpha + &self.beta,
            (false, true) => int(-1) - &self.alpha + &self.beta,
            (false, false) => int(-1) + &self.alpha - &self.beta,
        }
    }

    /// Monic recurrence product u_n (branch form, zero at n = 0).
    pub fn u_monic(&self, n: usize) -> Scalar {
        let ni = n as i64;
        let nn = self.n_max as i64;
        match (self.even_level(), n % 2 == 0) {
            (true, true) => int(4 * ni) * (&self.alpha - int(ni)),
            (true, false) => int(4 * (nn - ni + 1)) * (int(ni - nn - 1) + &self.beta),
            (false, true) => int(4 * ni * (nn + 1 - ni)),
            (false, false) => int(4) * (&self.alpha + int(ni)) * (&self.beta + int(nn + 1 - ni)),
        }
    }

    /// The μ-parameters (ξ, η) of the compact coefficient forms:
    /// ((β−N−1)/2, (α−N−1)/2) for even N and (α/2, β/2) for odd N.
    pub fn xi_eta(&self) -> (Scalar, Scalar) {
        let nn = int(self.n_max as i64);
        if self.even_level() {
            (
                (&self.beta - &nn - Scalar::one()) / int(2),
                (&self.alpha - &nn - Scalar::one()) / int(2),
            )
        } else {
            (self.alpha.clone() / int(2), self.beta.clone() / int(2))
        }
    }

    /// Compact form u_n = 4·[n]_ξ·[N−n+1]_η.
    pub fn u_compact(&self, n: usize) -> Scalar {
        let (xi, eta) = self.xi_eta();
        let ni = n as i64;
        let nn = self.n_max as i64;
        int(4) * mu_number(ni, &xi) * mu_number(nn - ni + 1, &eta)
    }

    /// Compact form b_n = 2([n]_ξ + [N−n]_η) + c with c = 1 − α − β for
    /// even N and c = −2N − 1 − α − β for odd N.
    pub fn b_compact(&self, n: usize) -> Scalar {
        let (xi, eta) = self.xi_eta();
        let ni = n as i64;
        let nn = self.n_max as i64;
        let c = if self.even_level() {
            Scalar::one() - &self.alpha - &self.beta
        } else {
            int(-2 * nn - 1) - &self.alpha - &self.beta
        };
        int(2) * (mu_number(ni, &xi) + mu_number(nn - ni, &eta)) + c
    }

    /// Orthogonality weights and total mass κ₀, laid out per index parity.
    pub fn weights(&self) -> Result<DiscreteMeasure, Error> {
        let n = self.n_max;
        let al = &self.alpha;
        let be = &self.beta;
        let one = Scalar::one();
        let mut weights = vec![Scalar::zero(); n + 1];
        let kappa0;
        if self.even_level() {
            let h = n / 2;
            let neg_half_n = frac(-(n as i64), 2);
            let p1 = &one - al / int(2);
            let p2 = &one - al / int(2) - be / int(2);
            let d1 = &one - be / int(2);
            let d2 = frac(n as i64, 2) + &one - al / int(2) - be / int(2);
            for s in 0..=h {
                let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                let common = pochhammer(&p1, s) * pochhammer(&p2, s) / pochhammer(&one, s);
                let den_even = pochhammer(&d1, s) * pochhammer(&d2, s);
                if den_even.is_zero() {
                    return Err(Error::DenominatorPole {
                        context: format!("weight denominator vanishes at node {}", 2 * s),
                    });
                }
                weights[2 * s] =
                    sign.clone() * pochhammer(&neg_half_n, s) * common.clone() / den_even;
                if 2 * s + 1 <= n {
                    let den_odd = pochhammer(&d1, s) * pochhammer(&d2, s + 1);
                    if den_odd.is_zero() {
                        return Err(Error::DenominatorPole {
                            context: format!("weight denominator vanishes at node {}", 2 * s + 1),
                        });
                    }
                    weights[2 * s + 1] =
                        sign * pochhammer(&neg_half_n, s + 1) * common / den_odd;
                }
            }
            let kd = pochhammer(&d1, h);
            if kd.is_zero() {
                return Err(Error::DenominatorPole {
                    context: "total-mass denominator vanishes".into(),
                });
            }
            kappa0 = pochhammer(&(&one - (al + be) / int(2)), h) / kd;
        } else {
            let h = (n - 1) / 2;
            let neg_half = frac(-((n as i64) - 1), 2);
            let rise = &one + al / int(2) + be / int(2);
            let p1 = frac(1, 2) + al / int(2);
            let d1 = frac(1, 2) + be / int(2);
            let d2 = frac(n as i64, 2) + frac(3, 2) + al / int(2) + be / int(2);
            for s in 0..=h {
                let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                let common =
                    sign * pochhammer(&neg_half, s) * pochhammer(&rise, s) / pochhammer(&one, s);
                let den_even = pochhammer(&d1, s) * pochhammer(&d2, s);
                let den_odd = pochhammer(&d1, s + 1) * pochhammer(&d2, s);
                if den_even.is_zero() || den_odd.is_zero() {
                    return Err(Error::DenominatorPole {
                        context: format!("weight denominator vanishes at node pair {s}"),
                    });
                }
                weights[2 * s] = common.clone() * pochhammer(&p1, s) / den_even;
                weights[2 * s + 1] = common * pochhammer(&p1, s + 1) / den_odd;
            }
            let half_count = (n + 1) / 2;
            let kd = pochhammer(&((be + &one) / int(2)), half_count);
            if kd.is_zero() {
                return Err(Error::DenominatorPole {
                    context: "total-mass denominator vanishes".into(),
                });
            }
            kappa0 = pochhammer(&(&one + (al + be) / int(2)), half_count) / kd;
        }
        Ok(DiscreteMeasure {
            points: (0..=n).map(|s| self.grid(s)).collect(),
            weights,
            kappa0,
        })
    }

    /// Monic polynomials R_0, …, R_m from the three-term recurrence.
    pub fn monic_polys(&self, up_to: usize) -> Vec<Polynomial> {
        let b: Vec<Scalar> = (0..up_to).map(|k| self.b_monic(k)).collect();
        let u: Vec<Scalar> = (0..up_to).map(|k| self.u_monic(k)).collect();
        monic_from_recurrence(&b, &u)
    }

    /// The Christoffel node τ of the shifted recurrence:
    /// 2N + 2 − α − β for even N and β − α for odd N. The shifted diagonal
    /// satisfies b_n + 1 = (−1)^n·τ.
    pub fn tau(&self) -> Scalar {
        if self.even_level() {
            int(2 * self.n_max as i64 + 2) - &self.alpha - &self.beta
        } else {
            &self.beta - &self.alpha
        }
    }

    /// Closed hypergeometric form of the monic degree-n polynomial,
    /// expanded into coefficients. Built out of the terminating sum
    /// Σ_k (−m)_k / [(d₁)_k (d₂)_k k!] · Π_{j<k} [(η+j)² − x²/16]
    /// (η, d₁, d₂, the 16^m·(…)_m prefactor and the odd-degree linear factor
    /// all branch on the parities of N and n), then shifted by x ↦ x + 1.
    pub fn closed_poly(&self, n: usize) -> Result<Polynomial, Error> {
        let one = Scalar::one();
        let al = &self.alpha;
        let be = &self.beta;
        let nn = self.n_max as i64;
        let (eta, d1, d2, prefactor, linear): (Scalar, Scalar, Scalar, Scalar, Option<Polynomial>) =
            if self.even_level() {
                let eta = frac(1, 2) - (al + be) / int(4);
                if n % 2 == 0 {
                    let m = n / 2;
                    let d1 = frac(-nn, 2);
                    let d2 = &one - al / int(2);
                    let g = int(16).powi(m as i64) * pochhammer(&d1, m) * pochhammer(&d2, m);
                    (eta, d1, d2, g, None)
                } else {
                    let m = (n - 1) / 2;
                    let d1 = &one - frac(nn, 2);
                    let d2 = &one - al / int(2);
                    let g = int(16).powi(m as i64) * pochhammer(&d1, m) * pochhammer(&d2, m);
                    let lin = Polynomial::affine(-self.tau(), one.clone());
                    (eta, d1, d2, g, Some(lin))
                }
            } else {
                let eta = (al + be + int(2)) / int(4);
                let d1 = frac(1 - nn, 2);
                if n % 2 == 0 {
                    let m = n / 2;
                    let d2 = (al + &one) / int(2);
                    let g = int(16).powi(m as i64) * pochhammer(&d1, m) * pochhammer(&d2, m);
                    (eta, d1, d2, g, None)
                } else {
                    let m = (n - 1) / 2;
                    let d2 = (al + int(3)) / int(2);
                    let g = int(16).powi(m as i64) * pochhammer(&d1, m) * pochhammer(&d2, m);
                    let lin = Polynomial::affine(al - be, one.clone());
                    (eta, d1, d2, g, Some(lin))
                }
            };
        let m = if n % 2 == 0 { n / 2 } else { (n - 1) / 2 };
        let mut series = Polynomial::one();
        let mut term_poly = Polynomial::one();
        let mut coeff = Scalar::one();
        for k in 1..=m {
            let km1 = int(k as i64 - 1);
            let quad = Polynomial::from_coeffs(vec![
                (&eta + &km1) * (&eta + &km1),
                Scalar::zero(),
                frac(-1, 16),
            ]);
            term_poly = &term_poly * &quad;
            let den = (&d1 + &km1) * (&d2 + &km1) * int(k as i64);
            if den.is_zero() {
                return Err(Error::DenominatorPole {
                    context: format!("closed-form denominator parameter vanishes at term {k}"),
                });
            }
            coeff = coeff * (int(-(m as i64)) + km1) / den;
            series = &series + &term_poly.scale(&coeff);
        }
        let mut p = series.scale(&prefactor);
        if let Some(lin) = linear {
            p = &p * &lin;
        }
        Ok(p.compose_affine(&Scalar::one(), &Scalar::one()))
    }

    /// The Christoffel factorization data of the shifted family; see
    /// [`ChristoffelPair`].
    pub fn christoffel(&self) -> ChristoffelPair {
        let nn = self.n_max;
        let tau = self.tau();
        let tau2 = &tau * &tau;
        let u = |k: usize| -> Scalar {
            if (1..=nn).contains(&k) {
                self.u_monic(k)
            } else {
                Scalar::zero()
            }
        };
        let p_len = (nn + 1) / 2;
        let q_len = nn.saturating_sub(1) / 2;
        let mut p_family = FamilyCoeffs {
            b: Vec::with_capacity(p_len),
            u: Vec::with_capacity(p_len),
        };
        for k in 0..p_len {
            p_family.b.push(u(2 * k) + u(2 * k + 1) + &tau2);
            p_family.u.push(if k == 0 {
                Scalar::zero()
            } else {
                u(2 * k) * u(2 * k - 1)
            });
        }
        let mut q_family = FamilyCoeffs {
            b: Vec::with_capacity(q_len),
            u: Vec::with_capacity(q_len),
        };
        for k in 0..q_len {
            q_family.b.push(u(2 * k + 2) + u(2 * k + 1) + &tau2);
            q_family.u.push(if k == 0 {
                Scalar::zero()
            } else {
                u(2 * k) * u(2 * k + 1)
            });
        }
        let link = (0..(nn + 1) / 2).map(|k| u(2 * k + 1)).collect();
        ChristoffelPair {
            tau,
            n_max: nn,
            p_family,
            q_family,
            link,
        }
    }
}

/// Three-term recurrence data (b_k, u_k) of a monic family; generates
/// polynomials P_0..P_len via [`monic_from_recurrence`].
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyCoeffs {
    pub b: Vec<Scalar>,
    pub u: Vec<Scalar>,
}

impl FamilyCoeffs {
    /// The monic polynomials P_0, …, P_{b.len()}.
    pub fn polys(&self) -> Vec<Polynomial> {
        monic_from_recurrence(&self.b, &self.u)
    }
}

/// Parity split of the shifted polynomials R̃_n(x) = R_n(x − 1): the even
/// part comes from a monic family P on z = x², the odd part carries the
/// linear factor (x − τ) times the Christoffel transform Q of P at z = τ².
#[derive(Debug, Clone, PartialEq)]
pub struct ChristoffelPair {
    pub tau: Scalar,
    n_max: usize,
    /// P-family recurrence data, generating P_0..P_{⌊(N+1)/2⌋} (one index
    /// past the reconstruction range so the division gate covers every Q).
    pub p_family: FamilyCoeffs,
    /// Q-family recurrence data, generating Q_0..Q_{⌊(N−1)/2⌋}.
    pub q_family: FamilyCoeffs,
    /// The linking coefficients u_1, u_3, u_5, … of the transform.
    link: Vec<Scalar>,
}

impl ChristoffelPair {
    /// Number of even-index shifted polynomials R̃_0, R̃_2, …: ⌊N/2⌋ + 1.
    pub fn even_count(&self) -> usize {
        self.n_max / 2 + 1
    }

    /// Number of odd-index shifted polynomials R̃_1, R̃_3, …: ⌊(N+1)/2⌋.
    pub fn odd_count(&self) -> usize {
        (self.n_max + 1) / 2
    }

    /// Rebuilds the shifted polynomial R̃_n from the split:
    /// R̃_{2k}(x) = P_k(x²), R̃_{2k+1}(x) = (x − τ)·Q_k(x²).
    pub fn reconstruct_shifted(&self, n: usize) -> Polynomial {
        assert!(n <= self.n_max, "index beyond the family");
        let p_polys = self.p_family.polys();
        let q_polys = self.q_family.polys();
        if n % 2 == 0 {
            p_polys[n / 2].inflate()
        } else {
            let lin = Polynomial::affine(-self.tau.clone(), Scalar::one());
            &lin * &q_polys[(n - 1) / 2].inflate()
        }
    }

    /// Rebuilds the monic polynomial R_n(x) = R̃_n(x + 1) from the split.
    pub fn reconstruct_monic(&self, n: usize) -> Polynomial {
        self.reconstruct_shifted(n)
            .compose_affine(&Scalar::one(), &Scalar::one())
    }

    /// The Christoffel-transform quotient (P_{k+1} + u_{2k+1}·P_k)/(z − τ²),
    /// whose division must be exact; the quotient equals Q_k.
    pub fn quotient(&self, k: usize) -> Result<Polynomial, Error> {
        let p_polys = self.p_family.polys();
        assert!(k + 1 < p_polys.len(), "index beyond the extended P family");
        let num = &p_polys[k + 1] + &p_polys[k].scale(&self.link[k]);
        let node = Polynomial::affine(-(&self.tau * &self.tau), Scalar::one());
        num.divide_exact(&node, "Christoffel transform at z = tau^2")
    }
}
