//! Shape-preservation and definiteness diagnostics.
//!
//! Shape preservation is only guaranteed asymptotically in `c`, so these
//! functions report what the operator does; they do not assert it.

use alloc::vec::Vec;

use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::grid::{DividedDifferences, NodeGrid, SampleSet};
use crate::kernel::{KernelFamily, KernelSpec};
use crate::ldl::BunchKaufman;
use crate::math;
use crate::quasi::QuasiInterpolant;

/// Derivative minima above `-SIGN_TOLERANCE` count as nonnegative.
pub const SIGN_TOLERANCE: f64 = 1e-8;

/// Eigenvalues with `|λ| ≤ INERTIA_ZERO_FACTOR · max|A|` count as zero.
pub const INERTIA_ZERO_FACTOR: f64 = 1e-10;

/// Sample points stay `h · ENDPOINT_OFFSET` away from `x_0` and `x_n`.
pub const ENDPOINT_OFFSET: f64 = 1e-3;

/// Relative slack for calling a second divided difference zero.
const ZERO_DD_FACTOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonotoneSign {
    NonNeg,
    NonPos,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvexSign {
    NonNeg,
    NonPos,
    Zero,
    Mixed,
}

impl MonotoneSign {
    pub fn name(self) -> &'static str {
        match self {
            MonotoneSign::NonNeg => "nonneg",
            MonotoneSign::NonPos => "nonpos",
            MonotoneSign::Mixed => "mixed",
        }
    }
}

impl ConvexSign {
    pub fn name(self) -> &'static str {
        match self {
            ConvexSign::NonNeg => "nonneg",
            ConvexSign::NonPos => "nonpos",
            ConvexSign::Zero => "zero",
            ConvexSign::Mixed => "mixed",
        }
    }
}

/// Sign classification of the data next to the observed derivative ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeReport {
    pub data_monotone_sign: MonotoneSign,
    pub min_d1: f64,
    pub max_d1: f64,
    pub data_convex_sign: ConvexSign,
    pub min_d2_at_nodes: f64,
    pub max_d2_at_nodes: f64,
    pub min_d2_on_grid: f64,
    pub max_d2_on_grid: f64,
    pub sample_count: usize,
}

impl ShapeReport {
    /// Whether `(Lf)'` follows the sign of the first divided differences on
    /// the sample grid; `None` when the data are not monotone.
    pub fn monotonicity_preserved(&self) -> Option<bool> {
        match self.data_monotone_sign {
            MonotoneSign::NonNeg => Some(self.min_d1 >= -SIGN_TOLERANCE),
            MonotoneSign::NonPos => Some(self.max_d1 <= SIGN_TOLERANCE),
            MonotoneSign::Mixed => None,
        }
    }

    /// Whether `(Lf)''` at the interior nodes follows the sign of the second
    /// divided differences; `None` when the data are neither convex nor concave.
    pub fn convexity_preserved_at_nodes(&self) -> Option<bool> {
        let (lo, hi) = (self.min_d2_at_nodes, self.max_d2_at_nodes);
        match self.data_convex_sign {
            ConvexSign::NonNeg => Some(lo >= -SIGN_TOLERANCE),
            ConvexSign::NonPos => Some(hi <= SIGN_TOLERANCE),
            ConvexSign::Zero => Some(lo >= -SIGN_TOLERANCE && hi <= SIGN_TOLERANCE),
            ConvexSign::Mixed => None,
        }
    }
}

/// Classifies the sign pattern of the first divided differences.
pub fn classify_monotone(samples: &SampleSet) -> MonotoneSign {
    let dd = DividedDifferences::of(samples);
    if dd.first.iter().all(|&d| d >= 0.0) {
        MonotoneSign::NonNeg
    } else if dd.first.iter().all(|&d| d <= 0.0) {
        MonotoneSign::NonPos
    } else {
        MonotoneSign::Mixed
    }
}

/// Classifies the sign pattern of the second divided differences. Entries
/// within rounding of zero (relative to the first differences) count as zero.
pub fn classify_convex(samples: &SampleSet) -> ConvexSign {
    let dd = DividedDifferences::of(samples);
    let x = samples.nodes();
    let scale = 1.0 + dd.first.iter().fold(0.0_f64, |m, &d| m.max(math::abs(d)));
    let tol = |j: usize| ZERO_DD_FACTOR * scale / (x[j + 2] - x[j]);
    let second = &dd.second;
    if second
        .iter()
        .enumerate()
        .all(|(j, &s)| math::abs(s) <= tol(j))
    {
        ConvexSign::Zero
    } else if second.iter().enumerate().all(|(j, &s)| s >= -tol(j)) {
        ConvexSign::NonNeg
    } else if second.iter().enumerate().all(|(j, &s)| s <= tol(j)) {
        ConvexSign::NonPos
    } else {
        ConvexSign::Mixed
    }
}

/// Equispaced sample abscissas on `[x_0 + δ, x_n - δ]`, `δ = h·10⁻³`.
pub fn sample_points(grid: &NodeGrid, sample_count: usize) -> Result<Vec<f64>> {
    if sample_count < 2 {
        return Err(Error::Domain("sample_count must be at least 2"));
    }
    let offset = grid.h() * ENDPOINT_OFFSET;
    let lo = grid.first() + offset;
    let hi = grid.last() - offset;
    let last = (sample_count - 1) as f64;
    Ok((0..sample_count)
        .map(|i| {
            if i + 1 == sample_count {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last
            }
        })
        .collect())
}

/// Classifies the data and records the ranges of `(Lf)'` and `(Lf)''` over
/// `sample_count` interior sample points and (for `(Lf)''`) the interior nodes.
pub fn shape_report(q: &QuasiInterpolant, sample_count: usize) -> Result<ShapeReport> {
    if q.kernel().family() == KernelFamily::Abs {
        return Err(Error::UnsupportedForAbs("shape report"));
    }
    let points = sample_points(q.grid(), sample_count)?;

    let (mut min_d1, mut max_d1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_d2_on_grid, mut max_d2_on_grid) = (f64::INFINITY, f64::NEG_INFINITY);
    for &x in &points {
        let d1 = q.eval_d1(x)?;
        let d2 = q.eval_d2(x)?;
        min_d1 = min_d1.min(d1);
        max_d1 = max_d1.max(d1);
        min_d2_on_grid = min_d2_on_grid.min(d2);
        max_d2_on_grid = max_d2_on_grid.max(d2);
    }

    let nodes = q.grid().nodes();
    let (mut min_d2_at_nodes, mut max_d2_at_nodes) = (f64::INFINITY, f64::NEG_INFINITY);
    for &x in &nodes[1..nodes.len() - 1] {
        let d2 = q.eval_d2(x)?;
        min_d2_at_nodes = min_d2_at_nodes.min(d2);
        max_d2_at_nodes = max_d2_at_nodes.max(d2);
    }

    Ok(ShapeReport {
        data_monotone_sign: classify_monotone(q.samples()),
        min_d1,
        max_d1,
        data_convex_sign: classify_convex(q.samples()),
        min_d2_at_nodes,
        max_d2_at_nodes,
        min_d2_on_grid,
        max_d2_on_grid,
        sample_count,
    })
}

/// Curvature `|y''| / (1 + y'²)^{3/2}` of the graph of `Lf` at `x`.
pub fn curvature(q: &QuasiInterpolant, x: f64) -> Result<f64> {
    let d1 = q.eval_d1(x)?;
    let d2 = q.eval_d2(x)?;
    let s = 1.0 + d1 * d1;
    Ok(math::abs(d2) / (s * math::sqrt(s)))
}

/// Counts of positive, negative and zero eigenvalues of a kernel matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InertiaResult {
    pub n_positive: usize,
    pub n_negative: usize,
    pub n_zero: usize,
}

impl InertiaResult {
    pub fn dim(&self) -> usize {
        self.n_positive + self.n_negative + self.n_zero
    }
}

/// The kernel matrix `A_ij = φ(x_i - x_j)` as a row-major vector.
pub fn gram_matrix(grid: &NodeGrid, kernel: KernelSpec) -> Vec<f64> {
    let x = grid.nodes();
    let n = x.len();
    (0..n * n)
        .map(|k| kernel.phi(x[k / n] - x[k % n]))
        .collect()
}

/// Inertia of the kernel matrix on `grid` from its eigenvalues.
/// Eigenvalues with `|λ| ≤ 10⁻¹⁰ max|A|` count as zero.
///
/// When `c` is large against the node spacing the smallest eigenvalues of
/// an RTH matrix fall below rounding level and are reported as zero.
pub fn gram_inertia(grid: &NodeGrid, kernel: KernelSpec) -> Result<InertiaResult> {
    let a = gram_matrix(grid, kernel);
    let tol = INERTIA_ZERO_FACTOR * max_abs(&a);
    let eig = symmetric_eigenvalues(a, grid.len());
    Ok(InertiaResult {
        n_positive: eig.iter().filter(|&&l| l > tol).count(),
        n_negative: eig.iter().filter(|&&l| l < -tol).count(),
        n_zero: eig.iter().filter(|&&l| math::abs(l) <= tol).count(),
    })
}

/// Inertia of the kernel matrix from a Bunch–Kaufman `LDLᵀ` factorization,
/// a single `O(n³/6)` pass instead of the iterative sweeps of [`gram_inertia`].
///
/// The signs are those of a rounding-level perturbation of `A`, so they are
/// reliable when `A` is well conditioned. The zero count compares the
/// eigenvalues of the pivot blocks of `D`, not of `A`, against the threshold.
pub fn gram_inertia_ldl(grid: &NodeGrid, kernel: KernelSpec) -> Result<InertiaResult> {
    let a = gram_matrix(grid, kernel);
    let tol = INERTIA_ZERO_FACTOR * max_abs(&a);
    let inertia = BunchKaufman::factor(a, grid.len()).inertia(tol);
    Ok(InertiaResult {
        n_positive: inertia.positive,
        n_negative: inertia.negative,
        n_zero: inertia.zero,
    })
}

fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0_f64, |m, &v| m.max(math::abs(v)))
}
