//! Node grids, sampled data and divided differences.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Relative slack allowed when checking that `(b - a) / h` is an integer.
const SPACING_SLACK: f64 = 1e-9;

/// Strictly increasing abscissas `x_0 < x_1 < … < x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeGrid {
    nodes: Vec<f64>,
    h: f64,
}

impl NodeGrid {
    /// Validates `nodes` (finite, strictly increasing, at least two) and
    /// computes the mesh size `h = max (x_j - x_{j-1})`.
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::TooFewNodes {
                required: 2,
                found: nodes.len(),
            });
        }
        if let Some(index) = nodes.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite {
                what: "node",
                index,
            });
        }
        let mut h = 0.0_f64;
        for index in 1..nodes.len() {
            let gap = nodes[index] - nodes[index - 1];
            if gap == 0.0 {
                return Err(Error::DuplicateNode {
                    index,
                    value: nodes[index],
                });
            }
            if gap < 0.0 {
                return Err(Error::UnsortedNodes { index });
            }
            h = h.max(gap);
        }
        Ok(NodeGrid { nodes, h })
    }

    /// `intervals + 1` equispaced nodes on `[a, b]`, both endpoints included.
    pub fn uniform(a: f64, b: f64, intervals: usize) -> Result<Self> {
        if intervals == 0 {
            return Err(Error::InvalidGrid("at least one interval is required"));
        }
        if !(a.is_finite() && b.is_finite()) || b <= a {
            return Err(Error::InvalidGrid("interval must be finite with a < b"));
        }
        let width = b - a;
        let n = intervals as f64;
        let nodes = (0..=intervals)
            .map(|i| {
                if i == intervals {
                    b
                } else {
                    a + width * (i as f64) / n
                }
            })
            .collect();
        Self::new(nodes)
    }

    /// Uniform grid `a, a+h, …, b`. Rejects `h` that does not divide `b - a`.
    pub fn with_spacing(a: f64, b: f64, h: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidGrid("spacing must be finite and > 0"));
        }
        Self::uniform(a, b, intervals_for_spacing(a, b, h)?)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Largest gap between consecutive nodes.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Number of nodes, `n + 1`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the last node, `n`.
    pub fn last_index(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn first(&self) -> f64 {
        self.nodes[0]
    }

    pub fn last(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }
}

/// Number of intervals of width `h` covering `[a, b]` exactly.
pub fn intervals_for_spacing(a: f64, b: f64, h: f64) -> Result<usize> {
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::InvalidGrid("interval must be finite with a < b"));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidGrid("spacing must be finite and > 0"));
    }
    let ratio = (b - a) / h;
    let rounded = libm::round(ratio);
    if rounded < 1.0 || math::abs(ratio - rounded) > SPACING_SLACK * rounded.max(1.0) {
        return Err(Error::InvalidGrid("(b - a) / h must be a positive integer"));
    }
    Ok(rounded as usize)
}

/// A grid paired with data values `f_0..f_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    grid: NodeGrid,
    values: Vec<f64>,
}

impl SampleSet {
    pub fn new(grid: NodeGrid, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::LengthMismatch {
                nodes: grid.len(),
                values: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "value",
                index,
            });
        }
        Ok(SampleSet { grid, values })
    }

    /// Samples `f` at every node. Non-finite samples are kept, so the result
    /// should go through [`SampleSet::new`] when `f` may misbehave.
    pub fn from_fn(grid: NodeGrid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        SampleSet { grid, values }
    }

    pub fn grid(&self) -> &NodeGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn nodes(&self) -> &[f64] {
        self.grid.nodes()
    }
}

/// First and second order divided differences of a [`SampleSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct DividedDifferences {
    /// `f[x_j, x_{j+1}]` for `j = 0..n-1`.
    pub first: Vec<f64>,
    /// `f[x_{j-1}, x_j, x_{j+1}]` for `j = 1..n-1`, stored at index `j - 1`.
    pub second: Vec<f64>,
}

impl DividedDifferences {
    pub fn of(samples: &SampleSet) -> Self {
        let x = samples.nodes();
        let f = samples.values();
        let first: Vec<f64> = x
            .windows(2)
            .zip(f.windows(2))
            .map(|(x, f)| (f[1] - f[0]) / (x[1] - x[0]))
            .collect();
        let second = (1..x.len().saturating_sub(1))
            .map(|j| (first[j] - first[j - 1]) / (x[j + 1] - x[j - 1]))
            .collect();
        DividedDifferences { first, second }
    }
}
