mod cache;
mod commands;
mod error;
mod output;
mod verify;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use toricrep::coxeter::BuildOptions;
use toricrep::RootSystem;

use cache::ComplexCache;
use commands::{Context, Family};
use error::{CliError, CliResult};
use output::{Format, Record};

const MISMATCH_EXIT: u8 = 3;

/// Rational homology of real toric varieties of Weyl chambers and
/// nestohedra, with symmetric and hyperoctahedral group decompositions.
#[derive(Parser, Debug)]
#[command(name = "toricrep", version, about, term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Directory for cached Coxeter complexes
    #[arg(long, global = true, env = "TORICREP_CACHE")]
    cache_dir: Option<PathBuf>,

    /// Ignore the cache directory
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads (default: one per core)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Allow enumerating Weyl groups above the default size limit (E8)
    #[arg(long, global = true)]
    allow_huge: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of the real toric variety of a root system
    Betti {
        #[arg(long)]
        root_system: RootSystem,
    },
    /// h-vector (mod 2 Betti numbers) from parabolic indices
    Hvector {
        #[arg(long)]
        root_system: RootSystem,
    },
    /// Euler characteristic from parabolic indices
    Euler {
        #[arg(long)]
        root_system: RootSystem,
    },
    /// Weyl group orbits on the row space of the characteristic matrix
    Orbits {
        #[arg(long)]
        root_system: RootSystem,
        /// Also compute reduced Betti numbers of one full subcomplex per orbit
        #[arg(long)]
        betti: bool,
    },
    /// Decompose a homology group into irreducible representations
    Decompose {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Top homology of the real toric variety of the nestohedron B_{n,k}
    Nestohedron {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Betti numbers of a real toric space given by files
    Custom {
        /// JSON `{"n_vertices": m, "facets": [[..], ..]}`
        #[arg(long)]
        complex: PathBuf,
        /// Text matrix, one row of 0/1 characters per line
        #[arg(long)]
        lambda: PathBuf,
        /// JSON `{"degree": m, "generators": [[..], ..]}` of vertex permutations
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Recompute the reference tables and report pass/fail per item
    Verify {
        /// Skip E6 homology
        #[arg(long)]
        quick: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Betti { .. } => "betti",
            Command::Hvector { .. } => "hvector",
            Command::Euler { .. } => "euler",
            Command::Orbits { .. } => "orbits",
            Command::Decompose { .. } => "decompose",
            Command::Nestohedron { .. } => "nestohedron",
            Command::Custom { .. } => "custom",
            Command::Verify { .. } => "verify",
        }
    }
}

fn dispatch(command: &Command, ctx: &Context) -> CliResult<output::Outcome> {
    match command {
        Command::Betti { root_system } => commands::betti(ctx, root_system),
        Command::Hvector { root_system } => commands::hvector(root_system),
        Command::Euler { root_system } => commands::euler(root_system),
        Command::Orbits { root_system, betti } => commands::orbits(ctx, root_system, *betti),
        Command::Decompose { family, n, degree } => commands::decompose(*family, *n, *degree),
        Command::Nestohedron { n, k } => commands::nestohedron(*n, *k),
        Command::Custom {
            complex,
            lambda,
            group,
        } => commands::custom(complex, lambda, group.as_deref()),
        Command::Verify { quick } => verify::verify(ctx, *quick),
    }
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    let cache = if cli.no_cache {
        ComplexCache::disabled()
    } else {
        ComplexCache::new(cli.cache_dir.clone())
    };
    let options = if cli.allow_huge {
        BuildOptions {
            max_group_order: u128::MAX,
        }
    } else {
        BuildOptions::default()
    };
    let ctx = Context { cache, options };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0) as usize)
        .build()
        .map_err(|e| CliError::Output(e.to_string()))?;

    let start = Instant::now();
    let outcome = pool.install(|| dispatch(&cli.command, &ctx))?;
    let wall_time_ms = start.elapsed().as_millis() as u64;

    let record = Record::new(cli.command.name(), &outcome, wall_time_ms);
    output::emit(
        cli.format,
        &record,
        &outcome.table,
        &mut io::stdout().lock(),
    )?;

    for c in outcome.failed_checks() {
        eprintln!(
            "check failed: {}{}",
            c.name,
            c.detail
                .as_ref()
                .map(|d| format!(" ({d})"))
                .unwrap_or_default()
        );
    }
    Ok(ExitCode::from(exit_status(&outcome)))
}

/// 0 when every check passed, otherwise the mismatch code.
fn exit_status(outcome: &output::Outcome) -> u8 {
    if outcome.failed_checks().is_empty() {
        0
    } else {
        MISMATCH_EXIT
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
