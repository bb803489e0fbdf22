//! Thin wrappers over `libm` so the rest of the crate reads like `std` code.

/// Beyond this magnitude `tanh` is ±1 and `sech²` is 0 to double precision.
pub(crate) const TANH_SATURATION: f64 = 20.0;

#[inline]
pub(crate) fn tanh(u: f64) -> f64 {
    if u >= TANH_SATURATION {
        1.0
    } else if u <= -TANH_SATURATION {
        -1.0
    } else {
        libm::tanh(u)
    }
}

/// `sech²(u)`, computed as `1/cosh²` to avoid the cancellation in `1 - tanh²`.
#[inline]
pub(crate) fn sech2(u: f64) -> f64 {
    if libm::fabs(u) >= TANH_SATURATION {
        0.0
    } else {
        let s = 1.0 / libm::cosh(u);
        s * s
    }
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}
