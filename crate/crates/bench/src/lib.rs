//! Benchmark problems and experiment drivers for `rth-quasi`.
//!
//! The `rthq` binary wraps these functions; everything it prints or writes
//! can also be produced directly from this library.

pub mod error;
pub mod experiments;
pub mod functions;
pub mod input;
pub mod output;

pub use error::{BenchError, Result};
pub use experiments::{
    build_operator, evaluation_points, linf_error, pointwise_series, rate_study, run_error_sweep,
    run_gibbs_study, run_rate_study, run_runge_study, ErrorRecord, ExperimentConfig, GibbsSeries,
    Overshoot, PointwiseRow, RateRow, RateTable, RungeSeries, DEFAULT_EVAL_INTERVALS,
};
pub use functions::TestFunction;
pub use output::{emit_csv, write_csv, write_table, CsvRecord};
