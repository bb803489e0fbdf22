//! Univariate quasi-interpolation with smooth approximants of `|x|`.
//!
//! The crate implements the Wu–Schaback quasi-interpolation operator
//!
//! ```text
//! (Lf)(x) = ½ Σ_{j=1}^{n-1} f[x_{j-1},x_j,x_{j+1}] (x_{j+1}-x_{j-1}) φ_j(x)
//!         + (f_0+f_n)/2 + ½ f[x_0,x_1](x-x_0) - ½ f[x_{n-1},x_n](x_n-x)
//! ```
//!
//! for three kernel families: the hyperbolic-tangent kernel
//! `φ_j(x) = (x-x_j) tanh((x-x_j)/c)` ([`KernelFamily::Rth`]), the
//! multiquadric `√((x-x_j)²+c²)` ([`KernelFamily::Mq`]) and the `c → 0`
//! limit `|x-x_j|` ([`KernelFamily::Abs`]).
//!
//! Besides the operator itself ([`quasi`]) the crate carries the tools used to
//! study it: accuracy of each kernel as an approximant of `|x|`
//! ([`abs_approx`]), shape diagnostics and kernel-matrix inertia ([`shape`]),
//! a bracketed scalar root finder ([`roots`]), a Jacobi eigenvalue solver
//! ([`eigen`]) and a Bunch–Kaufman `LDLᵀ` factorization for symmetric
//! indefinite matrices ([`ldl`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use rth_quasi::{KernelSpec, NodeGrid, QuasiInterpolant, SampleSet};
//!
//! let grid = NodeGrid::uniform(-1.0, 1.0, 40).unwrap();
//! let samples = SampleSet::from_fn(grid, |x| x * x);
//! let q = QuasiInterpolant::build(samples, KernelSpec::rth(0.005).unwrap()).unwrap();
//! assert!((q.eval(0.3) - 0.09).abs() < 1e-3);
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abs_approx;
pub mod eigen;
mod error;
pub mod grid;
pub mod kernel;
pub mod ldl;
mod math;
pub mod quasi;
pub mod roots;
pub mod shape;

pub use abs_approx::{
    abs_linf_error, abs_table, convergence_rates, faster_convergence_ratio,
    solve_extremum_constants, AbsErrorRow, ExtremumConstants,
};
pub use error::{Error, Result};
pub use grid::{DividedDifferences, NodeGrid, SampleSet};
pub use kernel::{Center, KernelFamily, KernelSpec};
pub use quasi::QuasiInterpolant;
pub use shape::{
    curvature, gram_inertia, gram_inertia_ldl, shape_report, ConvexSign, InertiaResult,
    MonotoneSign, ShapeReport,
};
