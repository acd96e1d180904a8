use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use spray::{
    knight_closed_walks_in, parse_in, run_walk, Backend, FormatOptions, MultiIndex, SparsePoly,
    SprayError, WalkConfig,
};

/// Sparse multivariate Laurent polynomial toolkit.
#[derive(Parser)]
#[command(name = "spray", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polyform expression at a point.
    Eval {
        /// Expression such as "x*y^3 + 2*x^2*y^2".
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        arity: usize,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Count closed knight walks in `dim` dimensions.
    Knight {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        moves: u32,
        /// Allow the knight to stay put as one of its moves.
        #[arg(long)]
        pause: bool,
        #[arg(long, env = "SPRAY_BACKEND", value_parser = parse_backend)]
        backend: Option<Backend>,
    },
    /// Survival probability of a trapped walk on a periodic lattice.
    Walk {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 17)]
        side: i64,
        #[arg(long, default_value_t = 100)]
        steps: u32,
        /// Starting node, e.g. "10,10".
        #[arg(long, default_value = "10,10", allow_hyphen_values = true)]
        initial: String,
        /// Trap nodes, e.g. "2,3;3,5". Empty for none.
        #[arg(long, default_value = "2,3;3,5")]
        traps: String,
        #[arg(long, env = "SPRAY_BACKEND", value_parser = parse_backend)]
        backend: Option<Backend>,
    },
    /// Time knight powers under each backend (CSV on stdout).
    Bench {
        #[arg(long, value_enum, default_value_t = BenchOp::Power)]
        op: BenchOp,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        moves: u32,
        /// Only report this backend; both are still computed for the equality check.
        #[arg(long, value_parser = parse_backend)]
        backend: Option<Backend>,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchOp {
    /// One product knight^ceil(m/2) * knight^floor(m/2).
    Mul,
    /// knight^m by iterated multiplication.
    Power,
}

impl BenchOp {
    fn name(self) -> &'static str {
        match self {
            BenchOp::Mul => "mul",
            BenchOp::Power => "power",
        }
    }
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse().map_err(|e: SprayError| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Spray(SprayError),
    BackendMismatch,
}

impl From<SprayError> for CliError {
    fn from(e: SprayError) -> Self {
        CliError::Spray(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Spray(e) => match e {
                SprayError::Parse { .. } | SprayError::Name(_) => 4,
                SprayError::OracleCapacity { .. } | SprayError::Overflow(_) => 5,
                _ => 3,
            },
            CliError::BackendMismatch => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Spray(e) => write!(f, "{e}"),
            CliError::BackendMismatch => f.write_str("backends disagree on the result"),
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid {what} `{}`", s.trim())))
        })
        .collect()
}

fn parse_traps(text: &str) -> Result<Vec<MultiIndex>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_list::<i32>(s, "trap coordinate").map(MultiIndex::from))
        .collect()
}

/// `value` rounded to `digits` significant digits.
fn significant(value: f64, digits: i32) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value:.*}", (digits - 1) as usize);
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort();
    times[times.len() / 2]
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { expr, arity, at } => {
            let point: Vec<f64> = parse_list(&at, "coordinate")?;
            let p = parse_in(&expr, arity, &FormatOptions::default(), Backend::default())?;
            println!("{}", p.evaluate(&point)?);
        }
        Command::Knight {
            dim,
            moves,
            pause,
            backend,
        } => {
            let backend = backend.unwrap_or_default();
            let start = Instant::now();
            let count = knight_closed_walks_in(dim, moves, pause, backend)?;
            eprintln!("{backend} backend: {:.3}s", start.elapsed().as_secs_f64());
            println!("{count:.0}");
        }
        Command::Walk {
            dim,
            side,
            steps,
            initial,
            traps,
            backend,
        } => {
            let cfg = WalkConfig {
                d: dim,
                n: side,
                traps: parse_traps(&traps)?,
                kernel: SparsePoly::walk_kernel(dim)?.into_backend(backend.unwrap_or_default()),
                initial: MultiIndex::from(parse_list::<i32>(&initial, "initial coordinate")?),
                steps,
            };
            let start = Instant::now();
            let outcome = run_walk(&cfg)?;
            eprintln!(
                "{} terms after {steps} steps in {:.3}s",
                outcome.final_state.num_terms(),
                start.elapsed().as_secs_f64()
            );
            println!("{}", significant(outcome.survival, 7));
        }
        Command::Bench {
            op,
            dim,
            moves,
            backend,
            repeat,
        } => {
            if repeat == 0 {
                return Err(CliError::Usage("--repeat must be at least 1".into()));
            }
            // returns the result and the time spent in the measured operation
            let workload = |b: Backend| -> Result<(SparsePoly, Duration), SprayError> {
                let k = SparsePoly::knight(dim)?.into_backend(b);
                match op {
                    BenchOp::Power => {
                        let start = Instant::now();
                        let out = k.pow(i64::from(moves))?;
                        Ok((out, start.elapsed()))
                    }
                    BenchOp::Mul => {
                        let hi = k.pow(i64::from(moves.div_ceil(2)))?;
                        let lo = k.pow(i64::from(moves / 2))?;
                        let start = Instant::now();
                        let out = hi.try_mul(&lo)?;
                        Ok((out, start.elapsed()))
                    }
                }
            };
            let (ordered, _) = workload(Backend::Ordered)?;
            let (hashed, _) = workload(Backend::Hashed)?;
            if ordered != hashed {
                return Err(CliError::BackendMismatch);
            }
            eprintln!("constant term: {}", hashed.constant());
            println!("backend,op,size,median_seconds");
            for b in Backend::ALL
                .into_iter()
                .filter(|&b| backend.is_none_or(|want| want == b))
            {
                let times = (0..repeat)
                    .map(|_| workload(b).map(|(_, t)| t))
                    .collect::<Result<Vec<_>, _>>()?;
                println!(
                    "{b},{},{},{:.6}",
                    op.name(),
                    hashed.num_terms(),
                    median(times).as_secs_f64()
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
