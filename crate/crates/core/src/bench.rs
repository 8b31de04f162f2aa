//! Timing helpers shared by the `bench` command and the criterion suite.

use std::time::{Duration, Instant};

use crate::band::{DenseMatrix, PeriodicBandMatrix};
use crate::error::{Error, Result};
use crate::factor::factorize;

/// Dense `f64` Gaussian elimination with partial pivoting; the O(n³) baseline.
pub fn dense_solve_f64(d: &DenseMatrix<f64>, y: &[f64]) -> Result<Vec<f64>> {
    let n = d.rows();
    if !d.is_square() {
        return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
    }
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    let mut a = d.entries().to_vec();
    let mut b = y.to_vec();
    for p in 0..n {
        let pivot = (p..n).max_by(|&r, &s| a[r * n + p].abs().total_cmp(&a[s * n + p].abs())).expect("nonempty range");
        if a[pivot * n + p] == 0.0 {
            return Err(Error::SingularMatrix);
        }
        if pivot != p {
            for c in 0..n {
                a.swap(p * n + c, pivot * n + c);
            }
            b.swap(p, pivot);
        }
        let (head, tail) = a.split_at_mut((p + 1) * n);
        let prow = &head[p * n..];
        for (r, row) in tail.chunks_mut(n).enumerate() {
            let factor = row[p] / prow[p];
            if factor != 0.0 {
                for c in p..n {
                    row[c] -= factor * prow[c];
                }
                b[p + 1 + r] -= factor * b[p];
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i * n + j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i * n + i];
    }
    Ok(x)
}

/// Band factorization plus one solve, in floating point.
pub fn band_factor_solve_f64(m: &PeriodicBandMatrix<f64>, y: &[f64]) -> Result<Vec<f64>> {
    Ok(factorize(m)?.solve(y)?.x)
}

/// Best of `reps` runs of `f` (at least one).
pub fn best_of<R>(reps: usize, mut f: impl FnMut() -> R) -> (Duration, R) {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = f();
        best = best.min(start.elapsed());
        last = Some(r);
    }
    (best, last.expect("ran at least once"))
}

/// `max |M·x - y| / (max |M| · max |x| + max |y|)`, zero for an exact fit.
pub fn relative_residual(m: &PeriodicBandMatrix<f64>, x: &[f64], y: &[f64]) -> Result<f64> {
    let mx = m.mul_vec(x)?;
    let inf = |v: &[f64]| v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let diff: Vec<f64> = mx.iter().zip(y).map(|(a, b)| a - b).collect();
    let scale = m.diagonals().iter().flatten().chain([m.corner_1n(), m.corner_n1()]).fold(0.0f64, |acc, v| acc.max(v.abs()));
    let denom = scale * inf(x) + inf(y);
    Ok(if denom == 0.0 { inf(&diff) } else { inf(&diff) / denom })
}
