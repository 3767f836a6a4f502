//! Dense row-major matrix and Householder QR least-squares solve.

use std::ops::Index;

use crate::error::FitError;

/// Relative threshold on the diagonal of `R` below which a column is treated
/// as linearly dependent on the ones before it.
pub const RANK_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix from nested rows. Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.cols + j] = value;
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

/// Compact Householder factorization `A = QR`.
///
/// The strict lower part of `qr` column `k` holds the tail of the k-th
/// Householder vector `v` (with `v[k]` stored in `vk`), `R` sits in the upper
/// triangle with its diagonal kept in `r_diag`.
#[derive(Debug, Clone)]
pub struct HouseholderQr {
    qr: Matrix,
    vk: Vec<f64>,
    beta: Vec<f64>,
    r_diag: Vec<f64>,
}

impl HouseholderQr {
    pub fn new(a: &Matrix) -> Result<Self, FitError> {
        let (m, n) = (a.rows(), a.cols());
        if m < n {
            return Err(FitError::Underdetermined { rows: m, cols: n });
        }
        let mut qr = a.clone();
        let mut vk = vec![0.0; n];
        let mut beta = vec![0.0; n];
        let mut r_diag = vec![0.0; n];

        for k in 0..n {
            // scale the column to dodge overflow in the norm
            let scale = (k..m).map(|i| qr[(i, k)].abs()).fold(0.0, f64::max);
            if scale == 0.0 {
                r_diag[k] = 0.0;
                continue;
            }
            let norm = scale
                * (k..m)
                    .map(|i| (qr[(i, k)] / scale).powi(2))
                    .sum::<f64>()
                    .sqrt();
            let x0 = qr[(k, k)];
            // alpha takes the sign opposite to x0 so v[k] = x0 - alpha never cancels
            let alpha = if x0 >= 0.0 { -norm } else { norm };
            let v0 = x0 - alpha;
            // H = I - beta v v^T with beta = 2 / (v^T v) = -1 / (alpha v0)
            let b = -1.0 / (alpha * v0);
            vk[k] = v0;
            beta[k] = b;
            r_diag[k] = alpha;

            for j in k + 1..n {
                let dot =
                    v0 * qr[(k, j)] + (k + 1..m).map(|i| qr[(i, k)] * qr[(i, j)]).sum::<f64>();
                let s = b * dot;
                *qr.get_mut(k, j) -= s * v0;
                for i in k + 1..m {
                    let vi = qr[(i, k)];
                    *qr.get_mut(i, j) -= s * vi;
                }
            }
        }

        Ok(HouseholderQr {
            qr,
            vk,
            beta,
            r_diag,
        })
    }

    pub fn r_diagonal(&self) -> &[f64] {
        &self.r_diag
    }

    /// Index of the first column whose `R` diagonal is negligible relative to
    /// the largest one, if any.
    pub fn rank_deficiency(&self) -> Option<usize> {
        let largest = self.r_diag.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        if largest == 0.0 {
            return if self.r_diag.is_empty() {
                None
            } else {
                Some(0)
            };
        }
        self.r_diag
            .iter()
            .position(|d| d.abs() < RANK_TOLERANCE * largest)
    }

    /// Computes `Q^T b` in place.
    fn apply_qt(&self, b: &mut [f64]) {
        let (m, n) = (self.qr.rows(), self.qr.cols());
        for k in 0..n {
            if self.beta[k] == 0.0 {
                continue;
            }
            let v0 = self.vk[k];
            let dot = v0 * b[k] + (k + 1..m).map(|i| self.qr[(i, k)] * b[i]).sum::<f64>();
            let s = self.beta[k] * dot;
            b[k] -= s * v0;
            for (i, bi) in b.iter_mut().enumerate().take(m).skip(k + 1) {
                *bi -= s * self.qr[(i, k)];
            }
        }
    }

    /// Minimizes `||A x - b||_2`.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>, FitError> {
        let (m, n) = (self.qr.rows(), self.qr.cols());
        if b.len() != m {
            return Err(FitError::DimensionMismatch {
                rows: m,
                len: b.len(),
            });
        }
        if let Some(column) = self.rank_deficiency() {
            return Err(FitError::RankDeficient { column });
        }
        let mut qtb = b.to_vec();
        self.apply_qt(&mut qtb);

        let mut x = vec![0.0; n];
        for k in (0..n).rev() {
            let tail: f64 = (k + 1..n).map(|j| self.qr[(k, j)] * x[j]).sum();
            x[k] = (qtb[k] - tail) / self.r_diag[k];
        }
        Ok(x)
    }
}
