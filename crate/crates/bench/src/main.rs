use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rth_quasi::{
    abs_table, curvature, gram_inertia, shape_report, solve_extremum_constants, AbsErrorRow,
    KernelFamily, KernelSpec, NodeGrid, QuasiInterpolant, SampleSet,
};
use rth_quasi_bench::experiments::{self, ExperimentConfig, DEFAULT_EVAL_INTERVALS};
use rth_quasi_bench::output::sci;
use rth_quasi_bench::{emit_csv, input, write_table, BenchError, CsvRecord, Result, TestFunction};

/// Quasi-interpolation benchmarks: error tables, rate studies and diagnostics.
#[derive(Debug, Parser)]
#[command(name = "rthq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Errors of the kernels as approximants of |x| on [-10, 10].
    AbsTable {
        /// Number of grid points.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Strictly decreasing shape parameters.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.1,0.05,0.025,0.0125,0.00625"
        )]
        cs: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "mq,rth")]
        kernels: Vec<KernelFamily>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// L-infinity errors over a grid of (h, c) pairs.
    Sweep {
        #[arg(long = "fn")]
        function: TestFunction,
        #[arg(long)]
        kernel: KernelFamily,
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<f64>,
        /// Evaluation intervals (m + 1 points, endpoints included).
        #[arg(long, default_value_t = DEFAULT_EVAL_INTERVALS)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Convergence rates in h for a fixed c.
    Rates {
        #[arg(long = "fn")]
        function: TestFunction,
        #[arg(long, default_value = "rth")]
        kernel: KernelFamily,
        #[arg(long)]
        c: f64,
        /// Strictly decreasing spacings.
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_EVAL_INTERVALS)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Pointwise errors and overshoot near the jumps of f5 or f6.
    Gibbs {
        #[arg(long = "fn")]
        function: TestFunction,
        #[arg(long)]
        h: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_EVAL_INTERVALS)]
        m: usize,
        /// Directory for one pointwise CSV per c.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pointwise errors for the Runge function f4.
    Runge {
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<f64>,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = DEFAULT_EVAL_INTERVALS)]
        m: usize,
        /// Directory for one pointwise CSV per h.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shape diagnostics of the operator built from (x, f) samples.
    Shape {
        /// CSV file with columns x,f (x strictly increasing).
        #[arg(long = "fn-data")]
        fn_data: PathBuf,
        #[arg(long, default_value = "rth")]
        kernel: KernelFamily,
        #[arg(long)]
        c: f64,
        /// Sample points for the derivative ranges.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Inertia of the kernel matrix: "positive,negative,zero".
    Inertia {
        /// A CSV file of nodes, or `uniform <a> <b> <n>` for n equispaced nodes.
        #[arg(long, num_args = 1..=4, allow_negative_numbers = true, required = true)]
        nodes: Vec<String>,
        #[arg(long, default_value = "rth")]
        kernel: KernelFamily,
        #[arg(long)]
        c: f64,
    },
    /// The constants t_star, err_coeff and xi of the tanh kernel.
    Constants,
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Write CSV to this file instead of printing a table.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print CSV instead of an aligned table.
    #[arg(long, conflicts_with = "out")]
    csv: bool,
}

impl OutArgs {
    fn emit<R: CsvRecord>(&self, records: &[R]) -> Result<()> {
        match &self.out {
            Some(path) => emit_csv(records, path),
            None if self.csv => {
                rth_quasi_bench::write_csv(records, io::stdout().lock()).map_err(|source| {
                    BenchError::Csv {
                        path: "<stdout>".into(),
                        source,
                    }
                })
            }
            None => write_table(records, io::stdout().lock()).map_err(stdout_error),
        }
    }
}

fn create_out_dir(dir: Option<&Path>) -> Result<()> {
    match dir {
        Some(dir) => std::fs::create_dir_all(dir).map_err(|source| BenchError::Io {
            path: dir.to_path_buf(),
            source,
        }),
        None => Ok(()),
    }
}

fn stdout_error(source: io::Error) -> BenchError {
    BenchError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rthq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    let mut stdout = io::stdout().lock();
    match command {
        Command::AbsTable {
            n,
            cs,
            kernels,
            out,
        } => {
            let mut rows: Vec<AbsErrorRow> = Vec::new();
            for family in kernels {
                if family == KernelFamily::Abs {
                    return Err(BenchError::Config(
                        "abs-table compares mq and rth only".into(),
                    ));
                }
                rows.extend(abs_table(family, n, &cs)?);
            }
            out.emit(&rows)
        }
        Command::Sweep {
            function,
            kernel,
            h,
            c,
            m,
            out,
        } => {
            let config = ExperimentConfig::new(function, kernel, h, c).with_m(m);
            out.emit(&experiments::run_error_sweep(&config)?)
        }
        Command::Rates {
            function,
            kernel,
            c,
            h,
            m,
            out,
        } => {
            let config = ExperimentConfig::new(function, kernel, h, vec![c]).with_m(m);
            let table = experiments::run_rate_study(&config)?;
            out.emit(&table.rows)?;
            for row in table.rows.iter().filter(|r| r.r_h.is_some() && !r.reliable) {
                eprintln!(
                    "rthq: rate at h={} uses errors below 1e-13 and is unreliable",
                    sci(row.h)
                );
            }
            Ok(())
        }
        Command::Gibbs {
            function,
            h,
            c,
            m,
            out,
        } => {
            let series = experiments::run_gibbs_study(function, h, &c, m)?;
            create_out_dir(out.as_deref())?;
            writeln!(stdout, "c,jump,overshoot,window_error").map_err(stdout_error)?;
            for s in &series {
                for o in &s.overshoots {
                    writeln!(
                        stdout,
                        "{},{},{},{}",
                        sci(s.c),
                        sci(o.jump),
                        sci(o.overshoot),
                        sci(o.window_error)
                    )
                    .map_err(stdout_error)?;
                }
                if let Some(dir) = &out {
                    emit_csv(&s.rows, &series_path(dir, function, s.h, s.c))?;
                }
            }
            Ok(())
        }
        Command::Runge { h, c, m, out } => {
            let series = experiments::run_runge_study(&h, c, m)?;
            create_out_dir(out.as_deref())?;
            writeln!(stdout, "h,linf_error,end_region_error").map_err(stdout_error)?;
            for s in &series {
                writeln!(
                    stdout,
                    "{},{},{}",
                    sci(s.h),
                    sci(s.linf_error),
                    sci(s.end_region_error)
                )
                .map_err(stdout_error)?;
                if let Some(dir) = &out {
                    emit_csv(&s.rows, &series_path(dir, TestFunction::F4, s.h, s.c))?;
                }
            }
            Ok(())
        }
        Command::Shape {
            fn_data,
            kernel,
            c,
            samples,
        } => {
            let (x, f) = input::read_samples(&fn_data)?;
            let data = SampleSet::new(NodeGrid::new(x)?, f)?;
            let q = QuasiInterpolant::build(data, KernelSpec::new(kernel, c)?)?;
            let r = shape_report(&q, samples)?;
            let nodes = q.grid().nodes();
            let mid = 0.5 * (nodes[nodes.len() / 2 - 1] + nodes[nodes.len() / 2]);
            let verdict = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
            let lines = [
                (
                    "data_monotone_sign",
                    r.data_monotone_sign.name().to_string(),
                ),
                ("min_d1", sci(r.min_d1)),
                ("max_d1", sci(r.max_d1)),
                (
                    "monotonicity_preserved",
                    verdict(r.monotonicity_preserved()),
                ),
                ("data_convex_sign", r.data_convex_sign.name().to_string()),
                ("min_d2_at_nodes", sci(r.min_d2_at_nodes)),
                ("max_d2_at_nodes", sci(r.max_d2_at_nodes)),
                ("min_d2_on_grid", sci(r.min_d2_on_grid)),
                ("max_d2_on_grid", sci(r.max_d2_on_grid)),
                (
                    "convexity_preserved_at_nodes",
                    verdict(r.convexity_preserved_at_nodes()),
                ),
                ("curvature_mid_x", sci(mid)),
                ("curvature_mid", sci(curvature(&q, mid)?)),
                ("sample_count", r.sample_count.to_string()),
            ];
            for (k, v) in lines {
                writeln!(stdout, "{k}={v}").map_err(stdout_error)?;
            }
            Ok(())
        }
        Command::Inertia { nodes, kernel, c } => {
            let grid = parse_nodes(&nodes)?;
            let i = gram_inertia(&grid, KernelSpec::new(kernel, c)?)?;
            writeln!(stdout, "{},{},{}", i.n_positive, i.n_negative, i.n_zero).map_err(stdout_error)
        }
        Command::Constants => {
            let k = solve_extremum_constants();
            writeln!(
                stdout,
                "t_star={:.16}\nerr_coeff={:.16}\nxi={:.16}",
                k.t_star, k.err_coeff, k.xi
            )
            .map_err(stdout_error)
        }
    }
}

fn series_path(dir: &Path, function: TestFunction, h: f64, c: f64) -> PathBuf {
    dir.join(format!("{function}_h{h}_c{c}.csv"))
}

fn parse_nodes(spec: &[String]) -> Result<NodeGrid> {
    match spec {
        [path] => Ok(NodeGrid::new(input::read_nodes(Path::new(path))?)?),
        [kind, a, b, n] if kind == "uniform" => {
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| BenchError::Config(format!("{s:?} is not a number")))
            };
            let n: usize = n
                .parse()
                .map_err(|_| BenchError::Config(format!("node count {n:?} is not an integer")))?;
            if n < 2 {
                return Err(BenchError::Config(
                    "uniform grids need at least 2 nodes".into(),
                ));
            }
            Ok(NodeGrid::uniform(num(a)?, num(b)?, n - 1)?)
        }
        _ => Err(BenchError::Config(
            "--nodes takes a CSV path or `uniform <a> <b> <n>`".into(),
        )),
    }
}
