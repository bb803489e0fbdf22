//! Error sweeps, rate studies and the Gibbs/Runge experiments.
//!
//! Every experiment samples a function on a uniform node grid with spacing
//! `h` and measures `|Lf - f|` on `m + 1` equispaced evaluation points
//! `a + i(b-a)/m`, `i = 0..=m`, so both endpoints are included.

use rayon::prelude::*;
use rth_quasi::{
    convergence_rates, KernelFamily, KernelSpec, NodeGrid, QuasiInterpolant, SampleSet,
};

use crate::error::{BenchError, Result};
use crate::functions::TestFunction;

/// Default number of evaluation intervals (`m + 1 = 201` points).
pub const DEFAULT_EVAL_INTERVALS: usize = 200;

/// Errors below this are at the rounding floor; rates built on them are noise.
pub const RELIABLE_ERROR_FLOOR: f64 = 1e-13;

/// The Gibbs overshoot window is `jump ± GIBBS_WINDOW_STEPS · h`.
pub const GIBBS_WINDOW_STEPS: f64 = 5.0;

/// The Runge end region is `|x| ≥ RUNGE_END_REGION`.
pub const RUNGE_END_REGION: f64 = 0.8;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub function: TestFunction,
    pub kernel: KernelFamily,
    pub cs: Vec<f64>,
    pub hs: Vec<f64>,
    /// Number of evaluation intervals.
    pub m: usize,
}

impl ExperimentConfig {
    pub fn new(function: TestFunction, kernel: KernelFamily, hs: Vec<f64>, cs: Vec<f64>) -> Self {
        ExperimentConfig {
            function,
            kernel,
            cs,
            hs,
            m: DEFAULT_EVAL_INTERVALS,
        }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = m;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.kernel == KernelFamily::Abs {
            return Err(config(
                "experiments need a kernel with a shape parameter (mq or rth)",
            ));
        }
        validate_m(self.m)?;
        validate_positive("c", &self.cs)?;
        validate_positive("h", &self.hs)?;
        let (a, b) = self.function.domain();
        for &h in &self.hs {
            NodeGrid::with_spacing(a, b, h)?;
        }
        Ok(())
    }
}

fn config(message: impl Into<String>) -> BenchError {
    BenchError::Config(message.into())
}

fn validate_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(config(format!("m must be at least 2, got {m}")));
    }
    Ok(())
}

fn validate_positive(name: &str, values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(config(format!("at least one {name} value is required")));
    }
    if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(config(format!(
            "{name} values must be finite and > 0, got {v}"
        )));
    }
    Ok(())
}

/// The `m + 1` evaluation points on `[a, b]`.
pub fn evaluation_points(a: f64, b: f64, m: usize) -> Result<Vec<f64>> {
    validate_m(m)?;
    Ok(NodeGrid::uniform(a, b, m)?.nodes().to_vec())
}

/// Samples `f` with spacing `h` on its domain and builds the operator.
pub fn build_operator(
    function: TestFunction,
    kernel: KernelSpec,
    h: f64,
) -> Result<QuasiInterpolant> {
    let (a, b) = function.domain();
    let grid = NodeGrid::with_spacing(a, b, h)?;
    let samples = SampleSet::new(
        grid.clone(),
        grid.nodes().iter().map(|&x| function.eval(x)).collect(),
    )?;
    Ok(QuasiInterpolant::build(samples, kernel)?)
}

/// `max |Lf - f|` over the evaluation points.
pub fn linf_error(q: &QuasiInterpolant, f: impl Fn(f64) -> f64, points: &[f64]) -> f64 {
    points
        .iter()
        .map(|&x| (q.eval(x) - f(x)).abs())
        .fold(0.0, f64::max)
}

/// One cell of an error table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRecord {
    pub kernel: KernelFamily,
    pub function: TestFunction,
    pub h: f64,
    pub c: f64,
    pub m: usize,
    pub linf_error: f64,
}

/// Errors for every `(h, c)` pair, `h`-major in the order given.
pub fn run_error_sweep(config: &ExperimentConfig) -> Result<Vec<ErrorRecord>> {
    config.validate()?;
    let (a, b) = config.function.domain();
    let points = evaluation_points(a, b, config.m)?;
    let pairs: Vec<(f64, f64)> = config
        .hs
        .iter()
        .flat_map(|&h| config.cs.iter().map(move |&c| (h, c)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(h, c)| {
            let q = build_operator(config.function, KernelSpec::new(config.kernel, c)?, h)?;
            Ok(ErrorRecord {
                kernel: config.kernel,
                function: config.function,
                h,
                c,
                m: config.m,
                linf_error: linf_error(&q, |x| config.function.eval(x), &points),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateRow {
    pub h: f64,
    pub linf_error: f64,
    /// `ln(E_i/E_{i-1}) / ln(h_i/h_{i-1})`; absent on the first row and when
    /// either error is exactly 0.
    pub r_h: Option<f64>,
    /// Both errors behind `r_h` are at least [`RELIABLE_ERROR_FLOOR`].
    pub reliable: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateTable {
    pub c: f64,
    pub rows: Vec<RateRow>,
}

impl RateTable {
    /// The defined rates in row order.
    pub fn rates(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.r_h).collect()
    }
}

/// Rate study for a single `c` over a strictly decreasing `h` ladder.
pub fn run_rate_study(config: &ExperimentConfig) -> Result<RateTable> {
    let c = match config.cs.as_slice() {
        [c] => *c,
        _ => return Err(self::config("a rate study takes exactly one c")),
    };
    let kernel = KernelSpec::new(config.kernel, c)?;
    config.validate()?;
    let function = config.function;
    rate_study(
        |x| function.eval(x),
        function.domain(),
        kernel,
        &config.hs,
        config.m,
    )
}

/// Rate study for an arbitrary function on `domain`.
pub fn rate_study(
    f: impl Fn(f64) -> f64 + Sync,
    domain: (f64, f64),
    kernel: KernelSpec,
    hs: &[f64],
    m: usize,
) -> Result<RateTable> {
    validate_positive("h", hs)?;
    if hs.windows(2).any(|w| w[1] >= w[0]) {
        return Err(config("h values must be strictly decreasing"));
    }
    let (a, b) = domain;
    let points = evaluation_points(a, b, m)?;
    let errors = hs
        .par_iter()
        .map(|&h| {
            let grid = NodeGrid::with_spacing(a, b, h)?;
            let samples =
                SampleSet::new(grid.clone(), grid.nodes().iter().map(|&x| f(x)).collect())?;
            let q = QuasiInterpolant::build(samples, kernel)?;
            Ok(linf_error(&q, &f, &points))
        })
        .collect::<Result<Vec<f64>>>()?;

    let mut rows: Vec<RateRow> = Vec::with_capacity(hs.len());
    for (&h, &e) in hs.iter().zip(&errors) {
        let (r_h, reliable) = match rows.last() {
            None => (None, e >= RELIABLE_ERROR_FLOOR),
            Some(prev) => {
                let rate = convergence_rates(&[(prev.h, prev.linf_error), (h, e)])
                    .ok()
                    .map(|r| r[0]);
                (rate, prev.linf_error.min(e) >= RELIABLE_ERROR_FLOOR)
            }
        };
        rows.push(RateRow {
            h,
            linf_error: e,
            r_h,
            reliable,
        });
    }
    Ok(RateTable {
        c: kernel.shape_parameter().unwrap_or(0.0),
        rows,
    })
}

/// One evaluation point of a pointwise error series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseRow {
    pub x: f64,
    pub f: f64,
    pub lf: f64,
    pub abs_err: f64,
    /// `|Lf - f| / max|f|`, the maximum taken over the evaluation points.
    pub rel_err: f64,
}

/// `(x, f, Lf, |Lf-f|, |Lf-f|/max|f|)` at every evaluation point.
pub fn pointwise_series(
    q: &QuasiInterpolant,
    f: impl Fn(f64) -> f64,
    points: &[f64],
) -> Vec<PointwiseRow> {
    let values: Vec<(f64, f64, f64)> = points.iter().map(|&x| (x, f(x), q.eval(x))).collect();
    let scale = values.iter().map(|v| v.1.abs()).fold(0.0, f64::max);
    values
        .into_iter()
        .map(|(x, f, lf)| {
            let abs_err = (lf - f).abs();
            let rel_err = if scale > 0.0 {
                abs_err / scale
            } else {
                abs_err
            };
            PointwiseRow {
                x,
                f,
                lf,
                abs_err,
                rel_err,
            }
        })
        .collect()
}

/// Overshoot of `Lf` at one jump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overshoot {
    pub jump: f64,
    /// `max Lf - max f` over the evaluation points within `±5h` of the jump.
    pub overshoot: f64,
    /// `max |Lf - f|` over the same window.
    pub window_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GibbsSeries {
    pub function: TestFunction,
    pub h: f64,
    pub c: f64,
    pub rows: Vec<PointwiseRow>,
    pub overshoots: Vec<Overshoot>,
}

/// RTH approximation of `f5` or `f6` for each `c`.
pub fn run_gibbs_study(
    function: TestFunction,
    h: f64,
    cs: &[f64],
    m: usize,
) -> Result<Vec<GibbsSeries>> {
    if function.jumps().is_empty() {
        return Err(config(format!(
            "gibbs study needs f5 or f6, got {function}"
        )));
    }
    let config = ExperimentConfig::new(function, KernelFamily::Rth, vec![h], cs.to_vec()).with_m(m);
    config.validate()?;
    let (a, b) = function.domain();
    let points = evaluation_points(a, b, m)?;
    cs.par_iter()
        .map(|&c| {
            let q = build_operator(function, KernelSpec::rth(c)?, h)?;
            let rows = pointwise_series(&q, |x| function.eval(x), &points);
            let overshoots = function
                .jumps()
                .iter()
                .map(|&jump| overshoot(&rows, jump, h))
                .collect();
            Ok(GibbsSeries {
                function,
                h,
                c,
                rows,
                overshoots,
            })
        })
        .collect()
}

fn overshoot(rows: &[PointwiseRow], jump: f64, h: f64) -> Overshoot {
    let half_width = GIBBS_WINDOW_STEPS * h;
    let window = rows.iter().filter(|r| (r.x - jump).abs() <= half_width);
    let (max_lf, max_f, window_error) = window.fold(
        (f64::NEG_INFINITY, f64::NEG_INFINITY, 0.0_f64),
        |(l, f, e), r| (l.max(r.lf), f.max(r.f), e.max(r.abs_err)),
    );
    Overshoot {
        jump,
        overshoot: max_lf - max_f,
        window_error,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RungeSeries {
    pub h: f64,
    pub c: f64,
    pub rows: Vec<PointwiseRow>,
    pub linf_error: f64,
    /// `max |Lf - f|` over evaluation points with `|x| ≥ 0.8`.
    pub end_region_error: f64,
}

/// RTH approximation of the Runge function `f4` for each `h`.
pub fn run_runge_study(hs: &[f64], c: f64, m: usize) -> Result<Vec<RungeSeries>> {
    let function = TestFunction::F4;
    let config = ExperimentConfig::new(function, KernelFamily::Rth, hs.to_vec(), vec![c]).with_m(m);
    config.validate()?;
    let (a, b) = function.domain();
    let points = evaluation_points(a, b, m)?;
    hs.par_iter()
        .map(|&h| {
            let q = build_operator(function, KernelSpec::rth(c)?, h)?;
            let rows = pointwise_series(&q, |x| function.eval(x), &points);
            let linf_error = rows.iter().map(|r| r.abs_err).fold(0.0, f64::max);
            let end_region_error = rows
                .iter()
                .filter(|r| r.x.abs() >= RUNGE_END_REGION)
                .map(|r| r.abs_err)
                .fold(0.0, f64::max);
            Ok(RungeSeries {
                h,
                c,
                rows,
                linf_error,
                end_region_error,
            })
        })
        .collect()
}
