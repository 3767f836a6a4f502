//! Exact-arithmetic normal-equations oracle.
//!
//! Every `f64` input converts exactly to a rational, so `X^T X` and `X^T y`
//! are formed without rounding and the system is solved exactly; the only
//! rounding is the final conversion back to `f64`. Shares no code with the
//! QR path it checks.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite input")
}

pub fn to_f64(v: &BigRational) -> f64 {
    v.to_f64().expect("representable")
}

fn normal_equations(
    xs: &[f64],
    ys: &[f64],
    degree: usize,
) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let cols = degree + 1;
    let powers: Vec<Vec<BigRational>> = xs
        .iter()
        .map(|&x| {
            let x = rational(x);
            let mut row = Vec::with_capacity(cols);
            let mut p = BigRational::one();
            for _ in 0..cols {
                row.push(p.clone());
                p *= &x;
            }
            row
        })
        .collect();
    let ys: Vec<BigRational> = ys.iter().map(|&y| rational(y)).collect();

    let mut gram = vec![vec![BigRational::zero(); cols]; cols];
    let mut rhs = vec![BigRational::zero(); cols];
    for (row, y) in powers.iter().zip(&ys) {
        for r in 0..cols {
            for c in 0..cols {
                gram[r][c] += &row[r] * &row[c];
            }
            rhs[r] += &row[r] * y;
        }
    }
    (gram, rhs)
}

/// Exact Gauss-Jordan elimination. Panics on a singular system.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let n = b.len();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .expect("singular normal equations");
        a.swap(k, pivot);
        b.swap(k, pivot);
        let inv = a[k][k].recip();
        for v in &mut a[k][k..n] {
            *v = &*v * &inv;
        }
        b[k] = &b[k] * &inv;
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                let pivot_row = a[k].clone();
                for (v, p) in a[i][k..n].iter_mut().zip(&pivot_row[k..n]) {
                    *v -= &f * p;
                }
                let t = &f * &b[k];
                b[i] -= t;
            }
        }
    }
    b
}

fn det3(m: &[Vec<BigRational>]) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Exact least-squares coefficients (ascending powers).
pub fn fit_exact(xs: &[f64], ys: &[f64], degree: usize) -> Vec<BigRational> {
    let (gram, rhs) = normal_equations(xs, ys, degree);
    solve_exact(gram, rhs)
}

/// Degree-2 least squares by Cramer's rule on the 3x3 normal equations.
pub fn fit_quadratic_cramer(xs: &[f64], ys: &[f64]) -> Vec<BigRational> {
    let (gram, rhs) = normal_equations(xs, ys, 2);
    let d = det3(&gram);
    assert!(!d.is_zero(), "singular normal equations");
    (0..3)
        .map(|j| {
            let mut m = gram.clone();
            for r in 0..3 {
                m[r][j] = rhs[r].clone();
            }
            det3(&m) / &d
        })
        .collect()
}

pub fn fit_f64(xs: &[f64], ys: &[f64], degree: usize) -> Vec<f64> {
    fit_exact(xs, ys, degree).iter().map(to_f64).collect()
}

fn eval_exact(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Exact residuals, `ss_res`, `ss_tot` and `R^2` of the exact fit.
pub struct ExactDiagnostics {
    pub coeffs: Vec<BigRational>,
    pub residuals: Vec<BigRational>,
    pub ss_res: BigRational,
    pub ss_tot: BigRational,
    pub r_squared: BigRational,
}

pub fn diagnostics(xs: &[f64], ys: &[f64], degree: usize) -> ExactDiagnostics {
    let coeffs = fit_exact(xs, ys, degree);
    let ys_q: Vec<BigRational> = ys.iter().map(|&y| rational(y)).collect();
    let residuals: Vec<BigRational> = xs
        .iter()
        .zip(&ys_q)
        .map(|(&x, y)| y - eval_exact(&coeffs, &rational(x)))
        .collect();
    let ss_res = residuals
        .iter()
        .fold(BigRational::zero(), |acc, r| acc + r * r);
    let n = BigRational::from_integer(BigInt::from(ys.len()));
    let mean = ys_q.iter().fold(BigRational::zero(), |acc, y| acc + y) / n;
    let ss_tot = ys_q.iter().fold(BigRational::zero(), |acc, y| {
        acc + (y - &mean) * (y - &mean)
    });
    let r_squared = BigRational::one() - &ss_res / &ss_tot;
    ExactDiagnostics {
        coeffs,
        residuals,
        ss_res,
        ss_tot,
        r_squared,
    }
}

/// `max_k |got_k - want_k| / max_k |want_k|`, the norm-wise relative error.
pub fn relative_error(got: &[f64], want: &[f64]) -> f64 {
    assert_eq!(got.len(), want.len());
    let scale = want.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    let err = got
        .iter()
        .zip(want)
        .fold(0.0f64, |m, (g, w)| m.max((g - w).abs()));
    if scale == 0.0 {
        err
    } else {
        err / scale
    }
}

pub fn abs(v: &BigRational) -> BigRational {
    v.abs()
}
