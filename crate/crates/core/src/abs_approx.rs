//! How well the kernels approximate `|x|`.
//!
//! For the hyperbolic-tangent kernel the gap `|x| - x tanh(x/c)` peaks at
//! `x = c·t*`, where `t*` solves `t(tanh t + 1) = 1`, and the peak value is
//! `c·t*(1 - tanh t*) ≈ 0.2785c`. The multiquadric gap `√(x²+c²) - |x|` is
//! largest at the origin, where it equals `c`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::NodeGrid;
use crate::kernel::{KernelFamily, KernelSpec};
use crate::math;
use crate::roots::bisect_newton;

/// Upper bound on `| |x| - x tanh(x/c) | / c`, the peak gap rounded up.
pub const RTH_GAP_BOUND: f64 = 0.278_464_542_8;

/// Half-width of the symmetric grid used for the `|x|` error tables.
pub const ABS_TABLE_HALF_WIDTH: f64 = 10.0;

/// Constants characterising the hyperbolic-tangent kernel, all scaled by `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumConstants {
    /// Root of `t(tanh t + 1) - 1`: the gap `|x| - x tanh(x/c)` peaks at `c·t_star`.
    pub t_star: f64,
    /// `t_star (1 - tanh t_star)`: the peak gap divided by `c`.
    pub err_coeff: f64,
    /// Root of `u tanh u - 1`: `φ''` changes sign at `±c·xi`.
    pub xi: f64,
}

/// Solves for [`ExtremumConstants`] with bracketed root finding.
///
/// The brackets are fixed: `s(t) = t(tanh t + 1) - 1` has `s(0) = -1` and
/// `s(1) > 0`; `u tanh u - 1` changes sign on `[1, 1.3]`.
pub fn solve_extremum_constants() -> ExtremumConstants {
    let t_star = bisect_newton(
        |t| t * (libm::tanh(t) + 1.0) - 1.0,
        |t| libm::tanh(t) + 1.0 + t * sech2(t),
        0.0,
        1.0,
    )
    .expect("s(0) < 0 < s(1)");
    let xi = bisect_newton(
        |u| u * libm::tanh(u) - 1.0,
        |u| libm::tanh(u) + u * sech2(u),
        1.0,
        1.3,
    )
    .expect("u tanh u - 1 changes sign on [1, 1.3]");
    let err_coeff = t_star * (1.0 - libm::tanh(t_star));
    ExtremumConstants {
        t_star,
        err_coeff,
        xi,
    }
}

fn sech2(u: f64) -> f64 {
    let s = 1.0 / libm::cosh(u);
    s * s
}

/// `max_i | φ(x_i) - |x_i| |` with the kernel centered at the origin.
pub fn abs_linf_error(family: KernelFamily, c: f64, points: &[f64]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::TooFewNodes {
            required: 1,
            found: 0,
        });
    }
    let kernel = KernelSpec::new(family, c)?;
    Ok(points
        .iter()
        .map(|&x| math::abs(kernel.phi(x) - math::abs(x)))
        .fold(0.0, f64::max))
}

/// Empirical convergence rates `log(E_i/E_{i-1}) / log(p_i/p_{i-1})` for a
/// sequence of `(parameter, error)` pairs with strictly decreasing positive
/// parameters. Returns one rate per consecutive pair.
pub fn convergence_rates(pairs: &[(f64, f64)]) -> Result<Vec<f64>> {
    for (i, &(p, e)) in pairs.iter().enumerate() {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::Domain("rate parameters must be finite and positive"));
        }
        if !(e.is_finite() && e > 0.0) {
            return Err(Error::Domain("errors must be positive to take logarithms"));
        }
        if i > 0 && p >= pairs[i - 1].0 {
            return Err(Error::Domain("rate parameters must be strictly decreasing"));
        }
    }
    Ok(pairs
        .windows(2)
        .map(|w| math::ln(w[1].1 / w[0].1) / math::ln(w[1].0 / w[0].0))
        .collect())
}

/// `(x tanh(x/c) - |x|) / (√(x²+c²) - |x|)`, which tends to 0 as `c → 0⁺`.
///
/// Both differences are evaluated in cancellation-free form, so the result
/// underflows cleanly to 0 instead of collapsing to rounding noise.
pub fn faster_convergence_ratio(x: f64, c: f64) -> Result<f64> {
    KernelSpec::rth(c)?;
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain("ratio is defined for finite x != 0"));
    }
    let ax = math::abs(x);
    // |x|(tanh u - 1) = -2|x| e^{-2u} / (1 + e^{-2u}), u = |x|/c
    let e = libm::exp(-2.0 * ax / c);
    let numerator = -2.0 * ax * e / (1.0 + e);
    // √(x²+c²) - |x| = c² / (√(x²+c²) + |x|)
    let denominator = c * c / (math::hypot(x, c) + ax);
    Ok(numerator / denominator)
}

/// One row of a `|x|` approximation table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbsErrorRow {
    /// Number of grid points.
    pub n: usize,
    pub c: f64,
    pub family: KernelFamily,
    pub linf_error: f64,
    /// Rate against the previous row; `None` for the first `c`.
    pub rate_rc: Option<f64>,
}

/// Error table over `n` equispaced points on `[-10, 10]` (endpoints included)
/// for each shape parameter in `cs`, which must be strictly decreasing.
///
/// A rate is `None` for the first row, and also wherever either error is 0
/// (the logarithm is undefined there).
pub fn abs_table(family: KernelFamily, n: usize, cs: &[f64]) -> Result<Vec<AbsErrorRow>> {
    if n < 2 {
        return Err(Error::TooFewNodes {
            required: 2,
            found: n,
        });
    }
    if cs.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Domain(
            "shape parameters must be strictly decreasing",
        ));
    }
    let grid = NodeGrid::uniform(-ABS_TABLE_HALF_WIDTH, ABS_TABLE_HALF_WIDTH, n - 1)?;
    let mut rows: Vec<AbsErrorRow> = Vec::with_capacity(cs.len());
    for &c in cs {
        let linf_error = abs_linf_error(family, c, grid.nodes())?;
        let rate_rc = rows.last().and_then(|prev| {
            convergence_rates(&[(prev.c, prev.linf_error), (c, linf_error)])
                .ok()
                .map(|r| r[0])
        });
        rows.push(AbsErrorRow {
            n,
            c,
            family,
            linf_error,
            rate_rc,
        });
    }
    Ok(rows)
}
