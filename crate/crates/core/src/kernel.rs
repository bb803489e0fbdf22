//! Kernel families and their center-shifted evaluations.
//!
//! Every kernel is a smooth (or, for [`KernelFamily::Abs`], piecewise linear)
//! approximant of `|x - x_j|`. Derivatives are analytic.

use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelFamily {
    /// Multiquadric `√((x-x_j)² + c²)`.
    Mq,
    /// Hyperbolic-tangent kernel `(x-x_j) tanh((x-x_j)/c)`.
    Rth,
    /// The shape-parameter-free limit `|x-x_j|`.
    Abs,
}

impl KernelFamily {
    pub fn name(self) -> &'static str {
        match self {
            KernelFamily::Mq => "mq",
            KernelFamily::Rth => "rth",
            KernelFamily::Abs => "abs",
        }
    }
}

impl core::fmt::Display for KernelFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for KernelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            s if s.eq_ignore_ascii_case("mq") => Ok(KernelFamily::Mq),
            s if s.eq_ignore_ascii_case("rth") => Ok(KernelFamily::Rth),
            s if s.eq_ignore_ascii_case("abs") => Ok(KernelFamily::Abs),
            _ => Err(Error::Domain(
                "unknown kernel family (expected mq, rth or abs)",
            )),
        }
    }
}

/// A kernel family together with its shape parameter.
///
/// The shape parameter is validated on construction, so every `KernelSpec`
/// in circulation is usable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    family: KernelFamily,
    c: f64,
}

impl KernelSpec {
    /// Builds a spec; `c` must be finite and positive unless `family` is `Abs`,
    /// in which case it is ignored.
    pub fn new(family: KernelFamily, c: f64) -> Result<Self> {
        match family {
            KernelFamily::Abs => Ok(KernelSpec { family, c: 0.0 }),
            _ if c.is_finite() && c > 0.0 => Ok(KernelSpec { family, c }),
            _ => Err(Error::InvalidShapeParameter(c)),
        }
    }

    pub fn mq(c: f64) -> Result<Self> {
        Self::new(KernelFamily::Mq, c)
    }

    pub fn rth(c: f64) -> Result<Self> {
        Self::new(KernelFamily::Rth, c)
    }

    pub fn abs() -> Self {
        KernelSpec {
            family: KernelFamily::Abs,
            c: 0.0,
        }
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    /// Shape parameter; `None` for the `|x|` kernel.
    pub fn shape_parameter(&self) -> Option<f64> {
        match self.family {
            KernelFamily::Abs => None,
            _ => Some(self.c),
        }
    }

    /// Kernel value at displacement `d = x - x_j`.
    #[inline]
    pub fn phi(&self, d: f64) -> f64 {
        match self.family {
            KernelFamily::Mq => math::hypot(d, self.c),
            KernelFamily::Rth => d * math::tanh(d / self.c),
            KernelFamily::Abs => math::abs(d),
        }
    }

    /// First derivative with respect to `x` at displacement `d`.
    #[inline]
    pub fn phi_d1(&self, d: f64) -> Result<f64> {
        match self.family {
            KernelFamily::Mq => Ok(d / math::hypot(d, self.c)),
            KernelFamily::Rth => {
                let u = d / self.c;
                if math::abs(u) >= math::TANH_SATURATION {
                    return Ok(math::tanh(u));
                }
                Ok(math::tanh(u) + u * math::sech2(u))
            }
            KernelFamily::Abs if d > 0.0 => Ok(1.0),
            KernelFamily::Abs if d < 0.0 => Ok(-1.0),
            KernelFamily::Abs => Err(Error::NonDifferentiablePoint { x: d }),
        }
    }

    /// Second derivative with respect to `x` at displacement `d`.
    #[inline]
    pub fn phi_d2(&self, d: f64) -> Result<f64> {
        match self.family {
            KernelFamily::Mq => {
                // c²/(c²+d²)^{3/2}, arranged so large |d| cannot overflow
                let r = math::hypot(d, self.c);
                let q = self.c / r;
                Ok(q * q / r)
            }
            KernelFamily::Rth => {
                let u = d / self.c;
                if math::abs(u) >= math::TANH_SATURATION {
                    return Ok(0.0);
                }
                Ok(2.0 / self.c * math::sech2(u) * (1.0 - u * math::tanh(u)))
            }
            KernelFamily::Abs => Err(Error::UnsupportedForAbs("second derivative")),
        }
    }

    pub fn eval(&self, center: Center, x: f64) -> f64 {
        self.phi(x - center.0)
    }

    pub fn eval_d1(&self, center: Center, x: f64) -> Result<f64> {
        self.phi_d1(x - center.0).map_err(|e| match e {
            Error::NonDifferentiablePoint { .. } => Error::NonDifferentiablePoint { x },
            e => e,
        })
    }

    pub fn eval_d2(&self, center: Center, x: f64) -> Result<f64> {
        self.phi_d2(x - center.0)
    }
}

/// Abscissa a kernel is centered on.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Center(f64);

impl Center {
    pub const ORIGIN: Center = Center(0.0);

    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() {
            Ok(Center(x))
        } else {
            Err(Error::NonFinite {
                what: "center",
                index: 0,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}
