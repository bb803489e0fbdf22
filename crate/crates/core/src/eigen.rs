//! Eigenvalues of dense symmetric matrices by cyclic Jacobi rotations.
//!
//! Slower than a tridiagonal QR for large matrices, but short, dependency
//! free and accurate for the small eigenvalues that decide a zero count.

use alloc::vec::Vec;

use crate::math;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the `dim × dim` row-major symmetric matrix `a`, ascending.
///
/// # Panics
///
/// If `a.len() != dim * dim`.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, dim: usize) -> Vec<f64> {
    assert_eq!(a.len(), dim * dim, "matrix must be dim x dim");
    let n = dim;
    let frobenius2: f64 = a.iter().map(|v| v * v).sum();
    let target = f64::EPSILON * f64::EPSILON * 1e-2 * frobenius2;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::hypot(theta, 1.0))
                } else {
                    -1.0 / (-theta + math::hypot(theta, 1.0))
                };
                let c = 1.0 / math::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}
