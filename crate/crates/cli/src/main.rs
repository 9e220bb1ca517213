use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use slq_core::combinatorics::{OracleLimits, ORACLE_LIMIT_ENV};
use slq_core::minmax::{GradientMode, SearchConfig, StepMode};
use slq_core::report::{self, BoundSelection, GraphSource, MatrixKind, OutputFormat, RunConfig};
use slq_core::validate::{self, ValidateConfig};
use slq_core::Exec;

/// Signless Laplacian spread: bound tables, validation and gradient traces.
///
/// Graph sources: path:5, cycle:6, complete:4, star:4, kbip:3,3, kn1uk1:6,
/// regular:N,K, rand:n=40,m=634,seed=1, randbip:n=12,m=20,seed=3, file:PATH.
#[derive(Parser, Debug)]
#[command(name = "slq", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Bound columns: a comma list of catalog names, `default` or `all`.
    #[arg(long, global = true, default_value = "default")]
    bounds: String,
    /// Vertex cap for the exact oracles (alpha, vb, eb).
    #[arg(long, global = true, env = ORACLE_LIMIT_ENV)]
    oracle_limit: Option<usize>,
    /// Gradient-search iterations.
    #[arg(long, global = true, default_value_t = 10)]
    iters: usize,
    /// Gradient-search step length.
    #[arg(long, global = true, default_value_t = 0.1)]
    step: f64,
    #[arg(long, global = true, value_enum, default_value_t = StepArg::Constant)]
    step_mode: StepArg,
    #[arg(long, global = true, value_enum, default_value_t = GradientArg::Analytic)]
    gradient: GradientArg,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Default seed for random sources without `seed=`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Decimals in text output.
    #[arg(long, global = true, default_value_t = 2)]
    precision: usize,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One row of bounds per graph.
    Table {
        #[arg(required = true)]
        sources: Vec<String>,
        /// Leave out the alpha/vb/eb columns.
        #[arg(long)]
        no_oracles: bool,
    },
    /// Run the invariant suites; the standard corpus when no source is given.
    Validate {
        sources: Vec<String>,
        /// Largest order for the named families of the standard corpus.
        #[arg(long, default_value_t = 12)]
        max_named: usize,
        /// Random graphs in the standard corpus.
        #[arg(long, default_value_t = 400)]
        random: usize,
        /// Largest order of the random graphs.
        #[arg(long, default_value_t = 60)]
        max_random_n: usize,
        /// Random unit vectors per graph.
        #[arg(long, default_value_t = 1000)]
        vectors: usize,
        /// Skip the fixed equality and regime fixtures.
        #[arg(long)]
        no_fixtures: bool,
    },
    /// f value per gradient-search iteration.
    Trace { source: String },
    /// Eigenvalues, one per line, descending.
    Spectrum {
        source: String,
        #[arg(long, value_enum, default_value_t = MatrixArg::Q)]
        matrix: MatrixArg,
    },
    /// n, m, degrees, M1 and the exact oracle invariants.
    Invariants { source: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StepArg {
    Constant,
    Decreasing,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GradientArg {
    Analytic,
    Numerical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixArg {
    A,
    L,
    Q,
}

impl Opts {
    fn search(&self) -> Result<SearchConfig> {
        let cfg = SearchConfig {
            iterations: self.iters,
            step: self.step,
            step_mode: match self.step_mode {
                StepArg::Constant => StepMode::Constant,
                StepArg::Decreasing => StepMode::Decreasing,
            },
            gradient_mode: match self.gradient {
                GradientArg::Analytic => GradientMode::Analytic,
                GradientArg::Numerical => GradientMode::Numerical,
            },
            ..SearchConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn limits(&self) -> OracleLimits {
        self.oracle_limit.map(OracleLimits::uniform).unwrap_or_default()
    }

    fn format(&self) -> OutputFormat {
        match self.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Text => OutputFormat::Text,
        }
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn source(&self, s: &str) -> Result<GraphSource> {
        let src: GraphSource = s.parse()?;
        Ok(src.with_default_seed(self.seed))
    }
}

/// Exit status 1: a bound violation or a failed check.
enum Status {
    Clean,
    Failed,
}

fn run(cli: Cli) -> Result<Status> {
    let o = &cli.opts;
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Table { sources, no_oracles } => {
            let cfg = RunConfig {
                sources: sources.iter().map(|s| o.source(s)).collect::<Result<_>>()?,
                bounds: o.bounds.parse::<BoundSelection>()?,
                limits: o.limits(),
                search: o.search()?,
                oracle_columns: !no_oracles,
                format: o.format(),
                precision: o.precision,
                seed: o.seed,
                exec: o.exec(),
            };
            let table = report::run_table(&cfg)?;
            out.write_all(table.rendered.as_bytes())?;
            for row in table.rows.iter().filter(|r| r.unflagged_violation) {
                eprintln!("violation: {} [{}]", row.id, row.violations.join(";"));
            }
            Ok(if table.has_violation { Status::Failed } else { Status::Clean })
        }
        Command::Validate { sources, max_named, random, max_random_n, vectors, no_fixtures } => {
            let graphs: Vec<GraphSource> = if sources.is_empty() {
                validate::standard_corpus(*max_named, *random, *max_random_n, o.seed)
            } else {
                sources.iter().map(|s| o.source(s)).collect::<Result<_>>()?
            };
            let cfg = ValidateConfig {
                graphs,
                limits: o.limits(),
                search: o.search()?,
                random_vectors: *vectors,
                seed: o.seed,
                exec: o.exec(),
                fixtures: !no_fixtures,
            };
            let rep = validate::run_validate(&cfg)?;
            out.write_all(rep.render().as_bytes())?;
            Ok(if rep.passed() { Status::Clean } else { Status::Failed })
        }
        Command::Trace { source } => {
            let text = report::run_trace(&o.source(source)?, &o.search()?, o.format(), o.precision)?;
            out.write_all(text.as_bytes())?;
            Ok(Status::Clean)
        }
        Command::Spectrum { source, matrix } => {
            let kind = match matrix {
                MatrixArg::A => MatrixKind::Adjacency,
                MatrixArg::L => MatrixKind::Laplacian,
                MatrixArg::Q => MatrixKind::Signless,
            };
            out.write_all(report::spectrum_dump(&o.source(source)?, kind)?.as_bytes())?;
            Ok(Status::Clean)
        }
        Command::Invariants { source } => {
            let text = report::invariants_report(&o.source(source)?, o.limits(), o.exec())?;
            out.write_all(text.as_bytes())?;
            Ok(Status::Clean)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Clean) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e.root_cause());
            ExitCode::from(2)
        }
    }
}
