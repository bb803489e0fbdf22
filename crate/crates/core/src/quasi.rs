//! The Wu–Schaback quasi-interpolation operator.
//!
//! One operator, three algebraically equivalent evaluation routes:
//!
//! * [`QuasiInterpolant::eval_basis_form`]: `Σ f_j ψ_j(x)` with the four
//!   boundary functions `α_0, α_1, α_{n-1}, α_n`;
//! * [`QuasiInterpolant::eval_divided_form`]: weighted kernel sum using scaled
//!   second divided differences, plus a linear boundary part;
//! * [`QuasiInterpolant::eval_cardinal_form`]: a single cardinal sum in which
//!   `|x - x_k|` replaces the kernel at `x_0`, `x_n` and at two virtual nodes
//!   outside the interval.
//!
//! The divided form is the cheapest and is what [`QuasiInterpolant::eval`]
//! uses. Derivatives come from the divided form as well, since its boundary
//! part is linear everywhere.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{DividedDifferences, NodeGrid, SampleSet};
use crate::kernel::{KernelFamily, KernelSpec};
use crate::math;

/// Smallest node count the operator accepts (`n = 3`).
pub const MIN_NODES: usize = 4;

/// Value of the operator together with an extrapolation flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    /// `x` lies outside `[x_0, x_n]`, where linear reproduction is not guaranteed.
    pub extrapolated: bool,
}

/// An immutable, evaluation-ready quasi-interpolant.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiInterpolant {
    kernel: KernelSpec,
    samples: SampleSet,
    /// `w_j = ½ f[x_{j-1},x_j,x_{j+1}] (x_{j+1}-x_{j-1})` for `j = 1..n-1`, at index `j-1`.
    interior_weights: Vec<f64>,
    /// `(f_0 + f_n) / 2`
    boundary_constant: f64,
    /// `½ f[x_0, x_1]`
    slope_left: f64,
    /// `½ f[x_{n-1}, x_n]`
    slope_right: f64,
}

impl QuasiInterpolant {
    /// Precomputes divided differences and weights in `O(n)`.
    pub fn build(samples: SampleSet, kernel: KernelSpec) -> Result<Self> {
        let count = samples.nodes().len();
        if count < MIN_NODES {
            return Err(Error::TooFewNodes {
                required: MIN_NODES,
                found: count,
            });
        }
        if let Some(index) = samples.values().iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "value",
                index,
            });
        }

        let dd = DividedDifferences::of(&samples);
        let x = samples.nodes();
        let interior_weights = dd
            .second
            .iter()
            .enumerate()
            .map(|(k, s)| 0.5 * s * (x[k + 2] - x[k]))
            .collect();
        let f = samples.values();
        let boundary_constant = 0.5 * (f[0] + f[count - 1]);
        let slope_left = 0.5 * dd.first[0];
        let slope_right = 0.5 * dd.first[count - 2];

        Ok(QuasiInterpolant {
            kernel,
            samples,
            interior_weights,
            boundary_constant,
            slope_left,
            slope_right,
        })
    }

    pub fn kernel(&self) -> KernelSpec {
        self.kernel
    }

    pub fn samples(&self) -> &SampleSet {
        &self.samples
    }

    pub fn grid(&self) -> &NodeGrid {
        self.samples.grid()
    }

    pub fn interior_weights(&self) -> &[f64] {
        &self.interior_weights
    }

    pub fn boundary_constant(&self) -> f64 {
        self.boundary_constant
    }

    pub fn slope_left(&self) -> f64 {
        self.slope_left
    }

    pub fn slope_right(&self) -> f64 {
        self.slope_right
    }

    /// Whether `x` lies in `[x_0, x_n]`.
    pub fn contains(&self, x: f64) -> bool {
        x >= self.grid().first() && x <= self.grid().last()
    }

    /// Operator value at `x` (divided-difference route).
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.eval_divided_form(x)
    }

    pub fn eval_checked(&self, x: f64) -> Evaluation {
        Evaluation {
            value: self.eval(x),
            extrapolated: !self.contains(x),
        }
    }

    /// Evaluates at every point of `xs`; bitwise identical to calling
    /// [`eval`](Self::eval) point by point.
    pub fn eval_many(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.eval(x)).collect()
    }

    /// `½ Σ w-form + (f_0+f_n)/2 + ½f[x_0,x_1](x-x_0) - ½f[x_{n-1},x_n](x_n-x)`.
    pub fn eval_divided_form(&self, x: f64) -> f64 {
        let nodes = self.samples.nodes();
        let x0 = nodes[0];
        let xn = nodes[nodes.len() - 1];
        let interior: f64 = self
            .interior_weights
            .iter()
            .zip(&nodes[1..nodes.len() - 1])
            .map(|(w, &xj)| w * self.kernel.phi(x - xj))
            .sum();
        interior + self.boundary_constant + self.slope_left * (x - x0) - self.slope_right * (xn - x)
    }

    /// Literal `f_0α_0 + f_1α_1 + Σ_{j=2}^{n-2} f_jψ_j + f_{n-1}α_{n-1} + f_nα_n`.
    pub fn eval_basis_form(&self, x: f64) -> f64 {
        let f = self.samples.values();
        let mut sum = 0.0;
        self.visit_basis(x, |j, psi| sum += f[j] * psi);
        sum
    }

    /// Values of the cardinal functions `α_0, α_1, ψ_2, …, ψ_{n-2}, α_{n-1}, α_n` at `x`.
    pub fn basis_functions(&self, x: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.samples.nodes().len());
        self.visit_basis(x, |_, psi| out.push(psi));
        out
    }

    fn visit_basis(&self, x: f64, mut visit: impl FnMut(usize, f64)) {
        let xs = self.samples.nodes();
        let n = xs.len() - 1;
        let phi = |j: usize| self.kernel.phi(x - xs[j]);

        // left and right boundary quotients shared by α_0/α_1 and α_{n-1}/α_n
        let phi_1 = phi(1);
        let b_left = (phi_1 - (x - xs[0])) / (2.0 * (xs[1] - xs[0]));
        let phi_last = phi(n - 1);
        let b_right = ((xs[n] - x) - phi_last) / (2.0 * (xs[n] - xs[n - 1]));

        visit(0, 0.5 + b_left);

        // d_j = (φ_{j+1} - φ_j) / (2(x_{j+1} - x_j)) for j = 1..n-2
        let mut phi_j = phi_1;
        let mut d_prev = f64::NAN;
        for j in 1..=n - 2 {
            let phi_next = phi(j + 1);
            let d_j = (phi_next - phi_j) / (2.0 * (xs[j + 1] - xs[j]));
            if j == 1 {
                visit(1, d_j - b_left);
            } else {
                visit(j, d_j - d_prev);
            }
            d_prev = d_j;
            phi_j = phi_next;
        }

        visit(n - 1, b_right - d_prev);
        visit(n, 0.5 - b_right);
    }

    /// Cardinal sum `Σ_{j=0}^n f_j ψ_j(x)` with `|x - x_k|` at `k = -1, 0, n, n+1`,
    /// virtual nodes at `x_0 - margin` and `x_n + margin`.
    ///
    /// Only valid on `[x_0, x_n]`.
    pub fn eval_cardinal_form(&self, x: f64, virtual_margin: f64) -> Result<f64> {
        let xs = self.samples.nodes();
        let f = self.samples.values();
        let n = xs.len() - 1;
        let (lo, hi) = (xs[0], xs[n]);
        if !(x >= lo && x <= hi) {
            return Err(Error::OutOfDomain { x, lo, hi });
        }
        if !(virtual_margin.is_finite() && virtual_margin > 0.0) {
            return Err(Error::Domain("virtual margin must be finite and > 0"));
        }

        // extended index k = j + 1 covers j = -1..=n+1
        let node = |k: usize| match k {
            0 => lo - virtual_margin,
            k if k == n + 2 => hi + virtual_margin,
            k => xs[k - 1],
        };
        let phi = |k: usize| {
            let d = x - node(k);
            if k <= 1 || k > n {
                math::abs(d)
            } else {
                self.kernel.phi(d)
            }
        };

        let mut sum = 0.0;
        let mut phi_next = phi(1);
        let mut d_prev = (phi_next - phi(0)) / (2.0 * (node(1) - node(0)));
        for (j, &fj) in f.iter().enumerate() {
            let k = j + 1;
            let phi_k = phi_next;
            phi_next = phi(k + 1);
            let d_j = (phi_next - phi_k) / (2.0 * (node(k + 1) - node(k)));
            sum += fj * (d_j - d_prev);
            d_prev = d_j;
        }
        Ok(sum)
    }

    /// Cardinal form with the default virtual margin `h`.
    pub fn eval_cardinal(&self, x: f64) -> Result<f64> {
        self.eval_cardinal_form(x, self.grid().h())
    }

    /// `(Lf)'(x) = Σ w_j φ'_j(x) + ½f[x_0,x_1] + ½f[x_{n-1},x_n]`.
    pub fn eval_d1(&self, x: f64) -> Result<f64> {
        self.require_smooth("operator derivative")?;
        let nodes = self.samples.nodes();
        let mut sum = self.slope_left + self.slope_right;
        for (w, &xj) in self.interior_weights.iter().zip(&nodes[1..nodes.len() - 1]) {
            sum += w * self.kernel.phi_d1(x - xj)?;
        }
        Ok(sum)
    }

    /// `(Lf)''(x) = Σ w_j φ''_j(x)`.
    pub fn eval_d2(&self, x: f64) -> Result<f64> {
        self.require_smooth("operator second derivative")?;
        let nodes = self.samples.nodes();
        let mut sum = 0.0;
        for (w, &xj) in self.interior_weights.iter().zip(&nodes[1..nodes.len() - 1]) {
            sum += w * self.kernel.phi_d2(x - xj)?;
        }
        Ok(sum)
    }

    fn require_smooth(&self, op: &'static str) -> Result<()> {
        match self.kernel.family() {
            KernelFamily::Abs => Err(Error::UnsupportedForAbs(op)),
            _ => Ok(()),
        }
    }
}
