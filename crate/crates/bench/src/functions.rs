//! The six benchmark functions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestFunction {
    /// `sinh x / (1 + cosh x)` on `[-3, 3]`.
    F1,
    /// `sin(x/2) - 2cos x + 4sin(πx)` on `[-4, 4]`.
    F2,
    /// `10e^{-x²} + x²` on `[-3, 3]`.
    F3,
    /// Runge function `1/(1+25x²)` on `[-1, 1]`.
    F4,
    /// Ramp, plateau and a drop to 0 after `x = 0.6`, on `[0, 1]`.
    F5,
    /// `sin x` left of 0, `cos x` from 0 on, on `[-1, 1]`.
    F6,
}

impl TestFunction {
    pub const ALL: [TestFunction; 6] = [
        TestFunction::F1,
        TestFunction::F2,
        TestFunction::F3,
        TestFunction::F4,
        TestFunction::F5,
        TestFunction::F6,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TestFunction::F1 => "f1",
            TestFunction::F2 => "f2",
            TestFunction::F3 => "f3",
            TestFunction::F4 => "f4",
            TestFunction::F5 => "f5",
            TestFunction::F6 => "f6",
        }
    }

    pub fn domain(self) -> (f64, f64) {
        match self {
            TestFunction::F1 | TestFunction::F3 => (-3.0, 3.0),
            TestFunction::F2 => (-4.0, 4.0),
            TestFunction::F4 | TestFunction::F6 => (-1.0, 1.0),
            TestFunction::F5 => (0.0, 1.0),
        }
    }

    /// Jump discontinuities inside the domain.
    pub fn jumps(self) -> &'static [f64] {
        match self {
            TestFunction::F5 => &[0.6],
            TestFunction::F6 => &[0.0],
            _ => &[],
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestFunction::F1 => x.sinh() / (1.0 + x.cosh()),
            TestFunction::F2 => (0.5 * x).sin() - 2.0 * x.cos() + 4.0 * (PI * x).sin(),
            TestFunction::F3 => 10.0 * (-x * x).exp() + x * x,
            TestFunction::F4 => 1.0 / (1.0 + 25.0 * x * x),
            // the plateau owns both of its endpoints
            TestFunction::F5 if x < 0.3 => 10.0 * x / 3.0,
            TestFunction::F5 if x <= 0.6 => 1.0,
            TestFunction::F5 => 0.0,
            // x = 0 takes the right limit
            TestFunction::F6 if x < 0.0 => x.sin(),
            TestFunction::F6 => x.cos(),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TestFunction {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        TestFunction::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                BenchError::Config(format!("unknown function id {s:?} (expected f1..f6)"))
            })
    }
}
