//! Difference and shift operators diagonalized by the polynomial families:
//! tridiagonal q-difference and classical operators, the five-diagonal
//! stencil and Dunkl shift operator of the −1 family, and the generalized
//! Leonard pair they generate.

use crate::hyper::hyp3f2;
use crate::m1hahn::M1HahnParams;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::qhahn::QHahnParams;
use crate::ratfun::RationalFunction;
use crate::scalar::{int, Field, Scalar};
use crate::Error;
use alloc::format;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Tridiagonal difference operator
/// (L f)(s) = up_s·(f(s+1) − f(s)) + down_s·(f(s−1) − f(s)).
/// Boundary entries up_N and down_0 are zero by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagOperator<T> {
    pub up: Vec<T>,
    pub down: Vec<T>,
}

impl<T: Field> TridiagOperator<T> {
    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.up.len()
    }

    /// True on an empty grid (never produced by the constructors).
    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// Applies the operator to node values.
    pub fn apply(&self, values: &[T]) -> Vec<T> {
        let n = self.len();
        assert_eq!(values.len(), n, "value vector does not match the grid");
        (0..n)
            .map(|s| {
                let mut acc = T::zero();
                if s + 1 < n {
                    acc = acc + self.up[s].clone() * (values[s + 1].clone() - values[s].clone());
                }
                if s >= 1 {
                    acc = acc + self.down[s].clone() * (values[s - 1].clone() - values[s].clone());
                }
                acc
            })
            .collect()
    }

    /// Dense matrix of the operator in the node basis.
    pub fn matrix(&self) -> Matrix<T> {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for s in 0..n {
            let diag = -(self.up[s].clone() + self.down[s].clone());
            m.set(s, s, diag);
            if s + 1 < n {
                m.set(s, s + 1, self.up[s].clone());
            }
            if s >= 1 {
                m.set(s, s - 1, self.down[s].clone());
            }
        }
        m
    }
}

/// The q-difference operator of a dual q-Hahn family, with eigenvalues
/// q^(−n) − 1 on the degree-n polynomial's node values.
pub fn qhahn_difference<T: Field>(p: &QHahnParams<T>) -> TridiagOperator<T> {
    TridiagOperator {
        up: (0..=p.n_max).map(|s| p.difference_up(s)).collect(),
        down: (0..=p.n_max).map(|s| p.difference_down(s)).collect(),
    }
}

/// Classical dual Hahn grid x_s = s(s + α + β + 1).
pub fn classical_grid<T: Field>(alpha: &T, beta: &T, s: usize) -> T {
    let s = T::from_int(s as i64);
    s.clone() * (s + alpha.clone() + beta.clone() + T::one())
}

/// Classical dual Hahn monic recurrence product
/// u_n = n(n − β − N − 1)(n − N − 1)(n + α).
pub fn classical_u<T: Field>(alpha: &T, beta: &T, n_max: usize, n: usize) -> T {
    let n = T::from_int(n as i64);
    let nn = T::from_int(n_max as i64);
    n.clone()
        * (n.clone() - beta.clone() - nn.clone() - T::one())
        * (n.clone() - nn - T::one())
        * (n + alpha.clone())
}

/// Classical dual Hahn monic recurrence diagonal
/// b_n = −[(n − N)(n + α + 1) + n(n − β − N − 1)].
pub fn classical_b<T: Field>(alpha: &T, beta: &T, n_max: usize, n: usize) -> T {
    let n = T::from_int(n as i64);
    let nn = T::from_int(n_max as i64);
    -((n.clone() - nn.clone()) * (n.clone() + alpha.clone() + T::one())
        + n.clone() * (n - beta.clone() - nn - T::one()))
}

/// Series value W_n(x_s) = ₃F₂(−n, −s, s+1+α+β; α+1, −N | 1) of the
/// classical dual Hahn polynomial.
pub fn classical_value(
    alpha: &Scalar,
    beta: &Scalar,
    n_max: usize,
    n: usize,
    s: usize,
) -> Result<Scalar, Error> {
    assert!(n <= n_max, "degree beyond the family");
    let num = [
        int(-(n as i64)),
        int(-(s as i64)),
        int(s as i64 + 1) + alpha + beta,
    ];
    let den = [alpha + Scalar::one(), int(-(n_max as i64))];
    hyp3f2(&num, &den, n)
}

/// The classical dual Hahn difference operator, with eigenvalue −n:
/// B₁(s) = (s+α+β+1)(s+α+1)(N−s) / [(2s+α+β+1)(2s+α+β+2)],
/// D₁(s) = s(s+β)(s+α+β+N+1) / [(2s+α+β+1)(2s+α+β)].
pub fn classical_difference<T: Field>(alpha: &T, beta: &T, n_max: usize) -> TridiagOperator<T> {
    let ab = alpha.clone() + beta.clone();
    let up = (0..=n_max)
        .map(|s| {
            let s = T::from_int(s as i64);
            let nn = T::from_int(n_max as i64);
            let two_s = T::from_int(2) * s.clone();
            (s.clone() + ab.clone() + T::one())
                * (s.clone() + alpha.clone() + T::one())
                * (nn - s)
                / ((two_s.clone() + ab.clone() + T::one()) * (two_s + ab.clone() + T::from_int(2)))
        })
        .collect();
    let down = (0..=n_max)
        .map(|s| {
            let s = T::from_int(s as i64);
            let nn = T::from_int(n_max as i64);
            let two_s = T::from_int(2) * s.clone();
            s.clone() * (s.clone() + beta.clone()) * (s + ab.clone() + nn + T::one())
                / ((two_s.clone() + ab.clone() + T::one()) * (two_s + ab.clone()))
        })
        .collect();
    TridiagOperator { up, down }
}

/// Five-diagonal difference stencil of the dual −1 Hahn family,
/// (H f)(s) = Σ_{k∈{±1,±2}} c_k(s)·(f(s+k) − f(s)) with coefficient arrays
/// u2, u1 (upward) and v1, v2 (downward). Eigenvalue on the degree-n node
/// values is 2n.
#[derive(Debug, Clone, PartialEq)]
pub struct FiveDiagOperator {
    pub u2: Vec<Scalar>,
    pub u1: Vec<Scalar>,
    pub v1: Vec<Scalar>,
    pub v2: Vec<Scalar>,
}

impl FiveDiagOperator {
    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.u2.len()
    }

    /// Applies the stencil to node values (out-of-range neighbors carry
    /// analytically vanishing coefficients).
    pub fn apply(&self, values: &[Scalar]) -> Vec<Scalar> {
        let n = self.len();
        assert_eq!(values.len(), n, "value vector does not match the grid");
        (0..n)
            .map(|s| {
                let mut acc = Scalar::zero();
                let mut couple = |coeff: &Scalar, t: isize| {
                    if (0..n as isize).contains(&t) {
                        acc = &acc + coeff * (&values[t as usize] - &values[s]);
                    }
                };
                couple(&self.u2[s], s as isize + 2);
                couple(&self.u1[s], s as isize + 1);
                couple(&self.v1[s], s as isize - 1);
                couple(&self.v2[s], s as isize - 2);
                acc
            })
            .collect()
    }

    /// Dense matrix in the node basis; the diagonal carries minus the sum
    /// of all four coefficients.
    pub fn matrix(&self) -> Matrix<Scalar> {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for s in 0..n {
            let diag = -(&self.u2[s] + &self.u1[s] + &self.v1[s] + &self.v2[s]);
            m.set(s, s, diag);
            let mut place = |coeff: &Scalar, t: isize| {
                if (0..n as isize).contains(&t) {
                    m.set(s, t as usize, coeff.clone());
                }
            };
            place(&self.u2[s], s as isize + 2);
            place(&self.u1[s], s as isize + 1);
            place(&self.v1[s], s as isize - 1);
            place(&self.v2[s], s as isize - 2);
        }
        m
    }
}

/// One multiplicative factor of a stencil coefficient. All denominator
/// factors of the stencil point in the α+β direction, so removable 0/0
/// forms are resolved by exact cancellation in the single variable
/// u = α + β before substituting its value.
enum StencilFactor {
    /// Integer factor depending only on s and N; zero makes the whole
    /// coefficient the zero rational function.
    Structural(i64),
    /// scale·(u − root) with u = α + β.
    Direction { scale: i64, root: i64 },
    /// Any other factor, evaluated directly (a zero here is a genuine
    /// zero of the numerator, not a structural truncation).
    Value(Scalar),
}

use StencilFactor::{Direction, Structural, Value};

/// Evaluates numerator factors over denominator roots (each denominator
/// factor is u − root) at u₀ = α + β, cancelling matching direction
/// factors first. A surviving denominator root at u₀ is a genuine pole.
fn eval_stencil_coeff(
    num: Vec<StencilFactor>,
    den_roots: Vec<i64>,
    u0: &Scalar,
    what: &str,
) -> Result<Scalar, Error> {
    let mut constant = Scalar::one();
    let mut num_roots: Vec<i64> = Vec::new();
    let mut plain = Scalar::one();
    for f in num {
        match f {
            Structural(0) => return Ok(Scalar::zero()),
            Structural(k) => constant = constant * int(k),
            Direction { scale, root } => {
                constant = constant * int(scale);
                num_roots.push(root);
            }
            Value(v) => plain = plain * v,
        }
    }
    let mut den = den_roots;
    den.retain(|r| {
        if let Some(pos) = num_roots.iter().position(|n| n == r) {
            num_roots.swap_remove(pos);
            false
        } else {
            true
        }
    });
    for r in &den {
        if *u0 == int(*r) {
            return Err(Error::DenominatorPole {
                context: format!("stencil coefficient {what}: alpha + beta = {r} is a pole"),
            });
        }
    }
    let mut value = constant * plain;
    for r in num_roots {
        value = value * (u0 - int(r));
    }
    for r in den {
        value = value / (u0 - int(r));
    }
    Ok(value)
}

/// Builds the five-diagonal stencil of a dual −1 Hahn family. Removable
/// 0/0 coefficient forms (integer α+β on the anchor parameter sets) are
/// resolved exactly; a non-removable denominator zero surfaces as
/// [`Error::DenominatorPole`].
pub fn m1hahn_stencil(p: &M1HahnParams) -> Result<FiveDiagOperator, Error> {
    let nn = p.n_max as i64;
    let u0 = &p.alpha + &p.beta;
    let al = &p.alpha;
    let be = &p.beta;
    let n_points = p.n_max + 1;
    let mut op = FiveDiagOperator {
        u2: Vec::with_capacity(n_points),
        u1: Vec::with_capacity(n_points),
        v1: Vec::with_capacity(n_points),
        v2: Vec::with_capacity(n_points),
    };
    for s_idx in 0..n_points {
        let s = s_idx as i64;
        let (u2, u1, v1, v2) = if p.even_level() {
            if s % 2 == 0 {
                (
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(-2),
                            Value(al - int(s + 2)),
                            Direction { scale: 1, root: s + 2 },
                            Structural(nn - s),
                        ],
                        alloc::vec![2 * s + 2, 2 * s + 4],
                        &u0,
                        "U2",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(2),
                            Direction { scale: 1, root: 0 },
                            Value(al - be),
                            Structural(nn - s),
                        ],
                        alloc::vec![2 * s, 2 * s + 2, 2 * s + 4],
                        &u0,
                        "U1",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(4),
                            Structural(s),
                            Value(be - int(s)),
                            Direction { scale: -1, root: 2 * nn + 2 },
                        ],
                        alloc::vec![2 * s, 2 * s + 2, 2 * s - 2],
                        &u0,
                        "V1",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(2),
                            Structural(s),
                            Value(be - int(s)),
                            Direction { scale: -1, root: nn + s },
                        ],
                        alloc::vec![2 * s - 2, 2 * s],
                        &u0,
                        "V2",
                    )?,
                )
            } else {
                (
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(-2),
                            Value(al - int(s + 1)),
                            Direction { scale: 1, root: s + 1 },
                            Structural(nn - s - 1),
                        ],
                        alloc::vec![2 * s + 2, 2 * s + 4],
                        &u0,
                        "U2",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(4),
                            Value(al - int(s + 1)),
                            Direction { scale: 1, root: s + 1 },
                            Direction { scale: -1, root: 2 * nn + 2 },
                        ],
                        alloc::vec![2 * s, 2 * s + 2, 2 * s + 4],
                        &u0,
                        "U1",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(-2),
                            Direction { scale: 1, root: 0 },
                            Value(al - be),
                            Direction { scale: -1, root: nn + s + 1 },
                        ],
                        alloc::vec![2 * s, 2 * s + 2, 2 * s - 2],
                        &u0,
                        "V1",
                    )?,
                    eval_stencil_coeff(
                        alloc::vec![
                            Structural(2),
                            Structural(s - 1),
                            Value(be - int(s - 1)),
                            Direction { scale: -1, root: nn + s + 1 },
                        ],
                        alloc::vec![2 * s - 2, 2 * s],
                        &u0,
                        "V2",
                    )?,
                )
            }
        } else if s % 2 == 0 {
            (
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Direction { scale: 1, root: -(s + 2) },
                        Value(al + int(s + 1)),
                        Structural(nn - s - 1),
                    ],
                    alloc::vec![-(2 * s + 2), -(2 * s + 4)],
                    &u0,
                    "U2",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Direction { scale: 1, root: 0 },
                        Value(al + int(s + 1)),
                        Direction { scale: 1, root: -(2 * nn + 2) },
                    ],
                    alloc::vec![-2 * s, -(2 * s + 2), -(2 * s + 4)],
                    &u0,
                    "U1",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-4),
                        Structural(s),
                        Value(al - be),
                        Direction { scale: 1, root: -(nn + s + 1) },
                    ],
                    alloc::vec![-2 * s, -(2 * s + 2), -(2 * s - 2)],
                    &u0,
                    "V1",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Structural(s),
                        Value(be + int(s - 1)),
                        Direction { scale: 1, root: -(nn + s + 1) },
                    ],
                    alloc::vec![-(2 * s - 2), -2 * s],
                    &u0,
                    "V2",
                )?,
            )
        } else {
            (
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Value(al + int(s + 2)),
                        Direction { scale: 1, root: -(s + 1) },
                        Structural(nn - s),
                    ],
                    alloc::vec![-(2 * s + 2), -(2 * s + 4)],
                    &u0,
                    "U2",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-4),
                        Value(al - be),
                        Structural(nn - s),
                        Direction { scale: 1, root: -(s + 1) },
                    ],
                    alloc::vec![-2 * s, -(2 * s + 2), -(2 * s + 4)],
                    &u0,
                    "U1",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Value(be + int(s)),
                        Direction { scale: 1, root: 0 },
                        Direction { scale: 1, root: -(2 * nn + 2) },
                    ],
                    alloc::vec![-2 * s, -(2 * s + 2), -(2 * s - 2)],
                    &u0,
                    "V1",
                )?,
                eval_stencil_coeff(
                    alloc::vec![
                        Structural(-2),
                        Structural(s - 1),
                        Value(be + int(s)),
                        Direction { scale: 1, root: -(nn + s) },
                    ],
                    alloc::vec![-(2 * s - 2), -2 * s],
                    &u0,
                    "V2",
                )?,
            )
        };
        debug_assert!(s_idx + 2 <= p.n_max || u2.is_zero(), "U2 truncation at {s_idx}");
        debug_assert!(s_idx + 1 <= p.n_max || u1.is_zero(), "U1 truncation at {s_idx}");
        debug_assert!(s_idx >= 1 || v1.is_zero(), "V1 truncation at {s_idx}");
        debug_assert!(s_idx >= 2 || v2.is_zero(), "V2 truncation at {s_idx}");
        op.u2.push(u2);
        op.u1.push(u1);
        op.v1.push(v1);
        op.v2.push(v2);
    }
    Ok(op)
}

/// Dunkl shift operator H = E₁T⁴ + E₂T⁻⁴ + G₁T²R + G₂T⁻²R − (ΣE+ΣG)·I,
/// acting on polynomials as
/// (H p)(x) = E₁(x)p(x+4) + E₂(x)p(x−4) + G₁(x)p(−x−2) + G₂(x)p(−x+2)
///            − (E₁+E₂+G₁+G₂)(x)·p(x),
/// with H R_n = 2n·R_n and degree preservation on every polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct DunklShiftOperator {
    pub e1: RationalFunction,
    pub e2: RationalFunction,
    pub g1: RationalFunction,
    pub g2: RationalFunction,
}

impl DunklShiftOperator {
    /// Applies the operator; the algebra guarantees the rational-function
    /// image reduces to a polynomial, enforced by the exact-division gate.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, Error> {
        let shifted = |a: i64, b: i64| p.compose_affine(&int(a), &int(b));
        let mut sum = self.e1.mul_poly(&shifted(1, 4));
        sum = &sum + &self.e2.mul_poly(&shifted(1, -4));
        sum = &sum + &self.g1.mul_poly(&shifted(-1, -2));
        sum = &sum + &self.g2.mul_poly(&shifted(-1, 2));
        let total = &(&(&self.e1 + &self.e2) + &self.g1) + &self.g2;
        sum = &sum - &total.mul_poly(p);
        sum.to_polynomial("Dunkl shift image")
    }
}

/// Builds the Dunkl shift operator of a dual −1 Hahn family.
pub fn dunkl_operator(p: &M1HahnParams) -> DunklShiftOperator {
    let al = &p.alpha;
    let be = &p.beta;
    let nn = int(p.n_max as i64);
    let one = Scalar::one();
    let lin = |c: Scalar| Polynomial::affine(c, one.clone());
    let xp1 = lin(one.clone());
    let xm1 = lin(-one.clone());
    let xp3 = lin(int(3));
    let xm3 = lin(int(-3));
    let four = Polynomial::constant(int(4));
    let (e1, e2, g1, g2) = if p.even_level() {
        let e1_num = &(&lin(int(3) - al + be) * &lin(int(3) - al - be))
            * &lin(int(-1) - int(2) * &nn + al + be);
        let e1 = RationalFunction::new(e1_num, &(&four * &xp1) * &xp3).expect("nonzero");
        let e2_num = &(&lin(al + be - &one) * &lin(al - be - &one))
            * &lin(int(-1) + int(2) * &nn - al - be);
        let e2 =
            RationalFunction::new(-&e2_num, &(&four * &xm1) * &xm3).expect("nonzero");
        let g1_num = lin(al + be - int(2) * &nn - &one)
            .scale(&((al * al) - (be * be)));
        let g1 = RationalFunction::new(g1_num, &(&xp1 * &xm1) * &xp3).expect("nonzero");
        let g2_shift = lin(al - &one);
        let g2_num = (&(&g2_shift * &g2_shift) - &Polynomial::constant(be * be))
            .scale(&(int(2) * &nn + int(2) - al - be));
        let g2 = RationalFunction::new(g2_num, &(&xp1 * &xm1) * &xm3).expect("nonzero");
        (e1, e2, g1, g2)
    } else {
        let e1_num = &(&lin(al + be + int(3)) * &lin(al - be + &one))
            * &lin(-al - be - int(2) * &nn + &one);
        let e1 = RationalFunction::new(e1_num, &(&four * &xp1) * &xp3).expect("nonzero");
        let e2_num = &(&lin(-al - be - &one) * &lin(be - al - int(3)))
            * &lin(al + be + int(2) * &nn + &one);
        let e2 =
            RationalFunction::new(-&e2_num, &(&four * &xm1) * &xm3).expect("nonzero");
        let one_minus_x2 = -&(&xp1 * &xm1);
        let g1_num = lin(al - be + &one)
            .scale(&((al + be) * (al + be + int(2) * &nn + int(2))));
        let g1 = RationalFunction::new(g1_num, &one_minus_x2 * &xp3).expect("nonzero");
        let g2_num = (&lin(-al - be - &one) * &lin(al + be + int(2) * &nn + &one))
            .scale(&(al - be));
        let g2 = RationalFunction::new(g2_num, &one_minus_x2 * &xm3).expect("nonzero");
        (e1, e2, g1, g2)
    };
    DunklShiftOperator { e1, e2, g1, g2 }
}

/// The generalized Leonard pair of a dual −1 Hahn family: the stencil
/// matrix A and the grid-multiplication matrix B, linked by the polynomial
/// evaluation matrix E[s][n] = R_n(y_s). Conjugation by E diagonalizes A
/// (eigenvalues 2n) and tridiagonalizes B (the monic recurrence matrix).
#[derive(Debug, Clone, PartialEq)]
pub struct LeonardPair {
    pub stencil: Matrix<Scalar>,
    pub multiplication: Matrix<Scalar>,
    pub evaluation: Matrix<Scalar>,
}

/// Builds the Leonard pair of a dual −1 Hahn family.
pub fn leonard_pair(p: &M1HahnParams) -> Result<LeonardPair, Error> {
    let n = p.n_max + 1;
    let stencil = m1hahn_stencil(p)?.matrix();
    let multiplication = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            p.grid(i)
        } else {
            Scalar::zero()
        }
    });
    let polys = p.monic_polys(p.n_max);
    let evaluation = Matrix::from_fn(n, n, |s, k| polys[k].eval(&p.grid(s)));
    Ok(LeonardPair {
        stencil,
        multiplication,
        evaluation,
    })
}

impl LeonardPair {
    /// E⁻¹·A·E — diagonal with entries 0, 2, …, 2N when the pair is genuine.
    pub fn stencil_in_degree_basis(&self) -> Result<Matrix<Scalar>, Error> {
        self.stencil.conjugate(&self.evaluation)
    }

    /// E⁻¹·B·E — tridiagonal with unit subdiagonal, diagonal b_n and
    /// superdiagonal u_n when the pair is genuine.
    pub fn multiplication_in_degree_basis(&self) -> Result<Matrix<Scalar>, Error> {
        self.multiplication.conjugate(&self.evaluation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use alloc::vec;
    use alloc::vec::Vec;

    fn anchor_even() -> M1HahnParams {
        M1HahnParams::new(int(3), int(3), 2).unwrap()
    }

    fn anchor_odd() -> M1HahnParams {
        M1HahnParams::new(int(1), int(1), 1).unwrap()
    }

    #[test]
    fn stencil_resolves_removable_zeros_at_even_anchor() {
        let op = m1hahn_stencil(&anchor_even()).unwrap();
        assert_eq!(op.u2, vec![int(-2), int(0), int(0)]);
        assert_eq!(op.u1, vec![int(0), int(-2), int(0)]);
        assert_eq!(op.v1, vec![int(0), int(0), int(-1)]);
        assert_eq!(op.v2, vec![int(0), int(0), int(-1)]);
        let h = op.matrix();
        let expect = [[2, 0, -2], [0, 2, -2], [-1, -1, 2]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*h.get(i, j), int(*v), "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn stencil_matches_closed_matrix_at_odd_anchor() {
        let h = m1hahn_stencil(&anchor_odd()).unwrap().matrix();
        let expect = [[1, -1], [-1, 1]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*h.get(i, j), int(*v), "entry ({i}, {j})");
            }
        }
    }

    fn eigencheck_stencil(p: &M1HahnParams) {
        let op = m1hahn_stencil(p).unwrap();
        let polys = p.monic_polys(p.n_max);
        for (n, poly) in polys.iter().enumerate() {
            let values: Vec<Scalar> = (0..=p.n_max).map(|s| poly.eval(&p.grid(s))).collect();
            let image = op.apply(&values);
            for (s, v) in image.iter().enumerate() {
                assert_eq!(*v, int(2 * n as i64) * &values[s], "degree {n}, node {s}");
            }
        }
    }

    #[test]
    fn stencil_eigenvalue_is_twice_the_degree() {
        eigencheck_stencil(&anchor_even());
        eigencheck_stencil(&anchor_odd());
        eigencheck_stencil(&M1HahnParams::new(frac(10, 3), frac(11, 5), 4).unwrap());
        eigencheck_stencil(&M1HahnParams::new(frac(-7, 3), frac(8, 5), 5).unwrap());
    }

    #[test]
    fn stencil_reports_genuine_poles() {
        // at N = 4, s = 0 the upward coefficient has denominator roots
        // {2, 4} and a single cancelling numerator root 2, so α + β = 4
        // is a genuine pole rather than a removable 0/0
        let p = M1HahnParams::unchecked(frac(7, 2), frac(1, 2), 4);
        let err = m1hahn_stencil(&p).unwrap_err();
        assert!(matches!(err, Error::DenominatorPole { .. }));
    }

    #[test]
    fn dunkl_coefficients_match_known_values_at_even_anchor() {
        let op = dunkl_operator(&anchor_even());
        let x5 = int(5);
        assert_eq!(op.e1.eval(&x5).unwrap(), frac(1, 2));
        assert_eq!(op.e2.eval(&x5).unwrap(), frac(-5, 2));
        assert_eq!(op.g1.eval(&x5).unwrap(), int(0));
        assert_eq!(op.g2.eval(&x5).unwrap(), int(0));
    }

    fn eigencheck_dunkl(p: &M1HahnParams) {
        let op = dunkl_operator(p);
        let polys = p.monic_polys(p.n_max);
        for (n, poly) in polys.iter().enumerate() {
            let image = op.apply(poly).unwrap();
            assert_eq!(image, poly.scale(&int(2 * n as i64)), "degree {n}");
        }
    }

    #[test]
    fn dunkl_eigenvalue_is_twice_the_degree() {
        eigencheck_dunkl(&anchor_even());
        eigencheck_dunkl(&anchor_odd());
        eigencheck_dunkl(&M1HahnParams::new(frac(10, 3), frac(11, 5), 4).unwrap());
        eigencheck_dunkl(&M1HahnParams::new(frac(-7, 3), frac(8, 5), 5).unwrap());
    }

    #[test]
    fn dunkl_preserves_degree_on_monomials() {
        let p = M1HahnParams::new(frac(10, 3), frac(11, 5), 4).unwrap();
        let op = dunkl_operator(&p);
        for k in 0..=p.n_max {
            let mut coeffs = vec![Scalar::zero(); k + 1];
            coeffs[k] = Scalar::one();
            let image = op.apply(&Polynomial::from_coeffs(coeffs)).unwrap();
            assert!(
                image.degree().map_or(true, |d| d <= k),
                "degree grows at x^{k}: {image}"
            );
            assert_eq!(image.coeff(k), int(2 * k as i64), "leading action at {k}");
        }
    }

    #[test]
    fn dunkl_agrees_with_stencil_on_grid() {
        // off the pole nodes x ∈ {±1, ±3}, the stencil coefficients are the
        // Dunkl coefficients evaluated on the grid, swapped by node parity
        for p in [
            M1HahnParams::new(frac(10, 3), frac(11, 5), 4).unwrap(),
            M1HahnParams::new(frac(-7, 3), frac(8, 5), 5).unwrap(),
        ] {
            let op = dunkl_operator(&p);
            let st = m1hahn_stencil(&p).unwrap();
            for s in 0..=p.n_max {
                let y = p.grid(s);
                if [int(1), int(-1), int(3), int(-3)].contains(&y) {
                    continue;
                }
                let (e_up, e_dn, g_up, g_dn) = if s % 2 == 0 {
                    (&op.e1, &op.e2, &op.g1, &op.g2)
                } else {
                    (&op.e2, &op.e1, &op.g2, &op.g1)
                };
                assert_eq!(st.u2[s], e_up.eval(&y).unwrap(), "U2 at node {s}");
                assert_eq!(st.v2[s], e_dn.eval(&y).unwrap(), "V2 at node {s}");
                assert_eq!(st.u1[s], g_up.eval(&y).unwrap(), "U1 at node {s}");
                assert_eq!(st.v1[s], g_dn.eval(&y).unwrap(), "V1 at node {s}");
            }
        }
    }

    #[test]
    fn qhahn_difference_has_stated_eigenvalues() {
        let p = QHahnParams::new(frac(1, 3), frac(1, 5), frac(1, 2), 3).unwrap();
        let op = qhahn_difference(&p);
        assert_eq!(op.up[3], int(0));
        assert_eq!(op.down[0], int(0));
        for n in 0..=3 {
            let values: Vec<Scalar> = (0..=3).map(|s| p.series(n, s).unwrap()).collect();
            let image = op.apply(&values);
            let lambda = p.eigenvalue(n);
            for (s, v) in image.iter().enumerate() {
                assert_eq!(*v, &lambda * &values[s], "degree {n}, node {s}");
            }
        }
    }

    #[test]
    fn classical_difference_has_eigenvalue_minus_n() {
        let alpha = int(1);
        let beta = int(2);
        let n_max = 3;
        let op = classical_difference(&alpha, &beta, n_max);
        assert_eq!(op.up[n_max], int(0));
        assert_eq!(op.down[0], int(0));
        let grid: Vec<Scalar> = (0..=n_max)
            .map(|s| classical_grid(&alpha, &beta, s))
            .collect();
        assert_eq!(grid, vec![int(0), int(5), int(12), int(21)]);
        for n in 0..=n_max {
            let values: Vec<Scalar> = (0..=n_max)
                .map(|s| classical_value(&alpha, &beta, n_max, n, s).unwrap())
                .collect();
            let image = op.apply(&values);
            for (s, v) in image.iter().enumerate() {
                assert_eq!(*v, int(-(n as i64)) * &values[s], "degree {n}, node {s}");
            }
        }
        assert_eq!(
            (0..=n_max)
                .map(|n| classical_u(&alpha, &beta, n_max, n))
                .collect::<Vec<_>>(),
            vec![int(0), int(30), int(48), int(36)]
        );
        assert_eq!(
            (0..=n_max)
                .map(|n| classical_b(&alpha, &beta, n_max, n))
                .collect::<Vec<_>>(),
            vec![int(6), int(11), int(12), int(9)]
        );
    }

    #[test]
    fn leonard_pair_diagonalizes_and_tridiagonalizes() {
        for p in [
            anchor_even(),
            anchor_odd(),
            M1HahnParams::new(frac(10, 3), frac(11, 5), 4).unwrap(),
        ] {
            let pair = leonard_pair(&p).unwrap();
            let n = p.n_max + 1;
            let diag = pair.stencil_in_degree_basis().unwrap();
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { int(2 * i as i64) } else { Scalar::zero() };
                    assert_eq!(*diag.get(i, j), expect, "A entry ({i}, {j})");
                }
            }
            let tri = pair.multiplication_in_degree_basis().unwrap();
            assert_eq!(tri.bandwidth(), (1, 1));
            for i in 0..n {
                assert_eq!(*tri.get(i, i), p.b_monic(i), "diagonal {i}");
                if i >= 1 {
                    assert_eq!(*tri.get(i, i - 1), Scalar::one(), "subdiagonal {i}");
                    assert_eq!(*tri.get(i - 1, i), p.u_monic(i), "superdiagonal {i}");
                }
            }
        }
    }
}
