//! Small dense row-major matrices and the two factorizations the crate
//! needs: Householder QR for least squares and Cholesky for the SPD
//! systems inside the interior-point solver. Column counts stay tiny
//! (base-model counts plus a handful of features), so nothing here is
//! tuned for large problems.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

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

    /// Builds a matrix from row-major data; `data.len()` must equal
    /// `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimError {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimError {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Returns true if any entry is NaN or infinite.
    pub fn has_non_finite(&self) -> bool {
        self.data.iter().any(|v| !v.is_finite())
    }
}

/// Solves the least-squares problem `min ||a x - y||` via Householder QR
/// with column pivoting disabled (columns are few and well scaled here).
/// Fails with [`Error::RankDeficient`] when a diagonal of R collapses.
pub(crate) fn qr_solve(a: &Matrix, y: &[f64]) -> Result<Vec<f64>> {
    let m = a.rows();
    let n = a.cols();
    if y.len() != m {
        return Err(Error::AlignError {
            left: m,
            right: y.len(),
        });
    }
    if m < n {
        return Err(Error::InsufficientData { needed: n, got: m });
    }

    let mut r = a.clone();
    let mut q_t_y = y.to_vec();

    let mut col_scale = 0.0f64;
    for &v in r.data.iter() {
        col_scale = col_scale.max(math::fabs(v));
    }
    let tol = (m.max(n) as f64) * f64::EPSILON * col_scale.max(1.0);

    for k in 0..n {
        // Householder vector for column k, rows k..m.
        let mut norm = 0.0;
        for i in k..m {
            let v = r.get(i, k);
            norm += v * v;
        }
        let norm = math::sqrt(norm);
        if norm <= tol {
            return Err(Error::RankDeficient);
        }
        let alpha = if r.get(k, k) >= 0.0 { -norm } else { norm };
        let mut v = vec![0.0; m - k];
        v[0] = r.get(k, k) - alpha;
        for i in (k + 1)..m {
            v[i - k] = r.get(i, k);
        }
        let v_norm2: f64 = v.iter().map(|x| x * x).sum();
        if v_norm2 > 0.0 {
            // Apply H = I - 2 v v^T / (v^T v) to R and to Q^T y.
            for j in k..n {
                let mut dot = 0.0;
                for i in k..m {
                    dot += v[i - k] * r.get(i, j);
                }
                let f = 2.0 * dot / v_norm2;
                for i in k..m {
                    let val = r.get(i, j) - f * v[i - k];
                    r.set(i, j, val);
                }
            }
            let mut dot = 0.0;
            for i in k..m {
                dot += v[i - k] * q_t_y[i];
            }
            let f = 2.0 * dot / v_norm2;
            for i in k..m {
                q_t_y[i] -= f * v[i - k];
            }
        }
        r.set(k, k, alpha);
    }

    // Back substitution on the upper-triangular block.
    let mut beta = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = q_t_y[k];
        for j in (k + 1)..n {
            s -= r.get(k, j) * beta[j];
        }
        let d = r.get(k, k);
        if math::fabs(d) <= tol {
            return Err(Error::RankDeficient);
        }
        beta[k] = s / d;
    }
    Ok(beta)
}

/// Solves the SPD system `m x = rhs` in place via Cholesky; `m` is a
/// dense row-major `n x n` buffer. A vanishing pivot gets one retry with
/// a tiny ridge before reporting a solver error.
pub(crate) fn cholesky_solve(m: &[f64], n: usize, rhs: &[f64]) -> Result<Vec<f64>> {
    debug_assert_eq!(m.len(), n * n);
    debug_assert_eq!(rhs.len(), n);

    let trace: f64 = (0..n).map(|i| m[i * n + i]).sum();
    let mut jitter = 0.0;
    for _attempt in 0..2 {
        if let Some(x) = try_cholesky(m, n, rhs, jitter) {
            return Ok(x);
        }
        jitter = 1e-12 * trace.max(1e-300);
    }
    Err(Error::SolverError("Cholesky factorization failed"))
}

fn try_cholesky(m: &[f64], n: usize, rhs: &[f64], jitter: f64) -> Option<Vec<f64>> {
    let mut l = m.to_vec();
    for i in 0..n {
        l[i * n + i] += jitter;
    }
    for i in 0..n {
        for j in 0..=i {
            let mut s = l[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * n + i] = math::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    // Forward then backward substitution with L and L^T.
    let mut x = rhs.to_vec();
    for i in 0..n {
        let mut s = x[i];
        for k in 0..i {
            s -= l[i * n + k] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        for k in (i + 1)..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qr_recovers_exact_solution() {
        // y = 2 + 3*x1 - x2 on a small full-rank design.
        let x = Matrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 2.0, 1.0],
            vec![1.0, 1.5, -0.5],
        ])
        .unwrap();
        let y: Vec<f64> = (0..5)
            .map(|i| 2.0 + 3.0 * x.get(i, 1) - x.get(i, 2))
            .collect();
        let beta = qr_solve(&x, &y).unwrap();
        assert!((beta[0] - 2.0).abs() < 1e-12);
        assert!((beta[1] - 3.0).abs() < 1e-12);
        assert!((beta[2] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn qr_flags_rank_deficiency() {
        let x = Matrix::from_rows(&[
            vec![1.0, 2.0, 4.0],
            vec![1.0, 3.0, 6.0],
            vec![1.0, 4.0, 8.0],
            vec![1.0, 5.0, 10.0],
        ])
        .unwrap();
        let y = vec![1.0, 2.0, 3.0, 4.0];
        assert_eq!(qr_solve(&x, &y), Err(Error::RankDeficient));
    }

    #[test]
    fn cholesky_solves_spd_system() {
        // m = a^T a for a well-conditioned a.
        let m = [4.0, 2.0, 0.6, 2.0, 5.0, 1.0, 0.6, 1.0, 3.0];
        let rhs = [1.0, -2.0, 0.5];
        let x = cholesky_solve(&m, 3, &rhs).unwrap();
        for i in 0..3 {
            let mut s = 0.0;
            for j in 0..3 {
                s += m[i * 3 + j] * x[j];
            }
            assert!((s - rhs[i]).abs() < 1e-12);
        }
    }
}
