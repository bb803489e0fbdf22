//! Bunch–Kaufman `PAPᵀ = LDLᵀ` factorization of dense symmetric matrices.
//!
//! `D` is block diagonal with 1×1 and 2×2 blocks. By Sylvester's law of
//! inertia `A` and `D` have the same numbers of positive, negative and zero
//! eigenvalues, so the signature of `A` can be read off `D` without an
//! eigensolver. Only `D` is kept.

use alloc::vec::Vec;

use crate::math;

/// Growth-bounding pivot threshold `(1 + √17) / 8`.
const ALPHA: f64 = 0.640_388_203_202_208;

/// A diagonal block of `D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PivotBlock {
    One(f64),
    /// Symmetric 2×2 block `[[a, b], [b, c]]`.
    Two {
        a: f64,
        b: f64,
        c: f64,
    },
}

impl PivotBlock {
    /// Eigenvalues of the block (one or two of them).
    pub fn eigenvalues(&self) -> (f64, Option<f64>) {
        match *self {
            PivotBlock::One(d) => (d, None),
            PivotBlock::Two { a, b, c } => {
                let mean = 0.5 * (a + c);
                let radius = math::hypot(0.5 * (a - c), b);
                (mean + radius, Some(mean - radius))
            }
        }
    }
}

/// The block-diagonal factor of a symmetric indefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BunchKaufman {
    dim: usize,
    blocks: Vec<PivotBlock>,
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl BunchKaufman {
    /// Factors the `dim × dim` row-major symmetric matrix `a`; only the lower
    /// triangle is read.
    ///
    /// # Panics
    ///
    /// If `a.len() != dim * dim`.
    pub fn factor(mut a: Vec<f64>, dim: usize) -> Self {
        assert_eq!(a.len(), dim * dim, "matrix must be dim x dim");
        let n = dim;
        let idx = |i: usize, j: usize| if i >= j { i * n + j } else { j * n + i };
        let mut blocks = Vec::new();

        let mut k = 0;
        while k < n {
            let akk = math::abs(a[idx(k, k)]);
            let (imax, colmax) =
                (k + 1..n)
                    .map(|i| (i, math::abs(a[idx(i, k)])))
                    .fold(
                        (k, 0.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );

            if akk.max(colmax) == 0.0 {
                blocks.push(PivotBlock::One(0.0));
                k += 1;
                continue;
            }

            let (size, swap_with) = if akk >= ALPHA * colmax {
                (1, k)
            } else {
                let rowmax = (k..n)
                    .filter(|&j| j != imax)
                    .map(|j| math::abs(a[idx(imax, j)]))
                    .fold(0.0, f64::max);
                if akk * rowmax >= ALPHA * colmax * colmax {
                    (1, k)
                } else if math::abs(a[idx(imax, imax)]) >= ALPHA * rowmax {
                    (1, imax)
                } else {
                    (2, imax)
                }
            };

            let target = k + size - 1;
            if swap_with != target {
                symmetric_swap(&mut a, n, target, swap_with, k);
            }

            if size == 1 {
                let d = a[idx(k, k)];
                for j in k + 1..n {
                    let ljk = a[idx(j, k)] / d;
                    for i in j..n {
                        a[i * n + j] -= a[idx(i, k)] * ljk;
                    }
                }
                blocks.push(PivotBlock::One(d));
            } else {
                let (p, q, r) = (a[idx(k, k)], a[idx(k + 1, k)], a[idx(k + 1, k + 1)]);
                let det = p * r - q * q;
                for j in k + 2..n {
                    let (u, v) = (a[idx(j, k)], a[idx(j, k + 1)]);
                    // row j of L for this block: [u v] E⁻¹
                    let l0 = (u * r - v * q) / det;
                    let l1 = (v * p - u * q) / det;
                    for i in j..n {
                        a[i * n + j] -= l0 * a[idx(i, k)] + l1 * a[idx(i, k + 1)];
                    }
                }
                blocks.push(PivotBlock::Two { a: p, b: q, c: r });
            }
            k += size;
        }
        BunchKaufman { dim, blocks }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[PivotBlock] {
        &self.blocks
    }

    /// Inertia, treating block eigenvalues with `|λ| ≤ zero_tol` as zero.
    pub fn inertia(&self, zero_tol: f64) -> Inertia {
        let mut out = Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        let mut count = |l: f64| {
            if math::abs(l) <= zero_tol {
                out.zero += 1;
            } else if l > 0.0 {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
        };
        for block in &self.blocks {
            let (l0, l1) = block.eigenvalues();
            count(l0);
            if let Some(l1) = l1 {
                count(l1);
            }
        }
        out
    }
}

/// Swaps rows/columns `p < q` of the trailing submatrix starting at `k`,
/// touching only the stored lower triangle.
fn symmetric_swap(a: &mut [f64], n: usize, p: usize, q: usize, k: usize) {
    let (p, q) = if p < q { (p, q) } else { (q, p) };
    let idx = |i: usize, j: usize| if i >= j { i * n + j } else { j * n + i };
    // already-eliminated columns k..p share the rows p and q
    for j in k..p {
        a.swap(idx(p, j), idx(q, j));
    }
    a.swap(idx(p, p), idx(q, q));
    for j in p + 1..q {
        a.swap(idx(j, p), idx(q, j));
    }
    for i in q + 1..n {
        a.swap(idx(i, p), idx(i, q));
    }
}
