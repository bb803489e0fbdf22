//! Bracketed scalar root finding: bisection down to a fixed width, then a
//! Newton polish that is only accepted while it stays inside the final
//! bracket and lowers the residual.

use crate::error::{Error, Result};
use crate::math;

/// Bracket width at which bisection hands over to Newton.
pub const BISECTION_WIDTH: f64 = 1e-14;

const MAX_BISECTIONS: usize = 200;
const MAX_NEWTON_STEPS: usize = 8;

/// Finds a root of `f` on `[lo, hi]`, where `f(lo)` and `f(hi)` differ in sign.
///
/// `df` is the derivative of `f`, used only for the final polish.
pub fn bisect_newton<F, D>(f: F, df: D, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || (f_lo > 0.0) == (f_hi > 0.0) {
        return Err(Error::InvalidBracket { lo, hi });
    }

    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= BISECTION_WIDTH {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }

    let mut x = lo + 0.5 * (hi - lo);
    let mut fx = f(x);
    for _ in 0..MAX_NEWTON_STEPS {
        let slope = df(x);
        if fx == 0.0 || slope == 0.0 || !slope.is_finite() {
            break;
        }
        let next = x - fx / slope;
        if !(lo..=hi).contains(&next) {
            break;
        }
        let f_next = f(next);
        if math::abs(f_next) >= math::abs(fx) {
            break;
        }
        x = next;
        fx = f_next;
    }
    Ok(x)
}
