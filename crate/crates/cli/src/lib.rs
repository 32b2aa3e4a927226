//! The `ec` command line tool.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or routes
//! disagree (the report is still written), 2 when the tool could not run as
//! asked: bad flags, unreadable config, unwritable output.

mod cluster;
mod config;
mod ec;
pub mod report;
mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ec_core::symfunc::Basis;
use ec_core::Exec;

pub use report::{CheckRecord, Status, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "ec",
    version,
    about = "EC-polynomials, symmetric function expansions and rank-2 cluster variables"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, env = "EC_JOBS")]
    jobs: Option<usize>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Allow EC_n with n > 8.
    #[arg(long, global = true)]
    force: bool,
    /// Include wall times in reports (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    /// No progress on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// key=value file with defaults for the flags above.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
}

fn basis_arg(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: ec_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print EC_n in canonical form, or its expansion in one basis.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = basis_arg)]
        basis: Option<Basis>,
    },
    /// Expand EC_n in a symmetric function basis with sign classes.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = basis_arg, default_value = "schur")]
        basis: Basis,
    },
    /// Check that EC_n is symmetric for each n up to --max-n.
    VerifySymmetry {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Check sign coherency of EC_n in the given bases.
    VerifyCoherency {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Comma-separated bases (m, s, e, h, p or full names).
        #[arg(long, value_parser = basis_arg, value_delimiter = ',', default_value = "m,s,e,h,p")]
        basis: Vec<Basis>,
    },
    /// Check that every coefficient of EC_n is an integer.
    VerifyIntegrality {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Randomized sweeps of the binomial and derivative identities.
    VerifyIdentities {
        #[arg(long, default_value_t = 500)]
        binomial_samples: usize,
        #[arg(long, default_value_t = 200)]
        series_samples: usize,
    },
    /// Rank-2 cluster variables and quiver Grassmannian Euler characteristics.
    Cluster {
        #[command(subcommand)]
        command: cluster::ClusterCommand,
    },
}

/// Resolved global settings.
#[derive(Clone, Debug)]
pub(crate) struct Settings {
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub force: bool,
    pub timings: bool,
    pub quiet: bool,
    pub exec: Exec,
}

pub(crate) const DEFAULT_SEED: u64 = 20_100_809;

/// What went wrong, and which exit code it maps to.
#[derive(Debug)]
pub(crate) enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 2.
    Io(String),
    /// A computation raised an error after validation; exit 1.
    Compute(ec_core::Error),
}

impl From<ec_core::Error> for Failure {
    fn from(e: ec_core::Error) -> Self {
        Failure::Compute(e)
    }
}

/// Rendered output plus whether every check passed.
pub(crate) struct Rendered {
    pub body: String,
    pub ok: bool,
}

fn settings(g: GlobalArgs) -> Result<Settings, Failure> {
    let file = match &g.config {
        Some(p) => config::load(p).map_err(Failure::Io)?,
        None => Default::default(),
    };
    let usage = |e: String| Failure::Usage(format!("config: {e}"));
    let format = match (g.format, file.get("format")) {
        (Some(f), _) => f,
        (None, Some(v)) => Format::from_str(v, true).map_err(|_| usage(format!("unknown format `{v}`")))?,
        (None, None) => Format::Text,
    };
    let output = g.output.or_else(|| file.get("output").map(PathBuf::from));
    let jobs = match (g.jobs, file.get("jobs")) {
        (Some(j), _) => Some(j),
        (None, Some(v)) => Some(
            v.parse()
                .map_err(|_| usage(format!("`jobs` expects a number, got `{v}`")))?,
        ),
        (None, None) => None,
    };
    let seed = match (g.seed, file.get("seed")) {
        (Some(s), _) => s,
        (None, Some(v)) => v
            .parse()
            .map_err(|_| usage(format!("`seed` expects a number, got `{v}`")))?,
        (None, None) => DEFAULT_SEED,
    };
    let flag = |cli: bool, key: &str| -> Result<bool, Failure> {
        match (cli, file.get(key)) {
            (true, _) => Ok(true),
            (false, Some(v)) => config::parse_bool(key, v).map_err(usage),
            (false, None) => Ok(false),
        }
    };
    let exec = match jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(1) => Exec::Sequential,
        Some(j) => {
            // a second run in the same process keeps the first pool
            let _ = ec_core::exec::init_pool(j);
            if !cfg!(feature = "parallel") && !g.quiet {
                eprintln!("note: built without the parallel feature; running sequentially");
            }
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    Ok(Settings {
        format,
        output,
        seed,
        force: flag(g.force, "force")?,
        timings: flag(g.timings, "timings")?,
        quiet: g.quiet,
        exec,
    })
}

fn dispatch(cmd: Command, s: &Settings) -> Result<Rendered, Failure> {
    match cmd {
        Command::Compute { n, basis } => ec::compute(n, basis, s),
        Command::Expand { n, basis } => ec::expand(n, basis, s),
        Command::VerifySymmetry { min_n, max_n } => ec::verify_symmetry(min_n, max_n, s),
        Command::VerifyCoherency { min_n, max_n, basis } => ec::verify_coherency(min_n, max_n, &basis, s),
        Command::VerifyIntegrality { min_n, max_n } => ec::verify_integrality(min_n, max_n, s),
        Command::VerifyIdentities {
            binomial_samples,
            series_samples,
        } => sweep::verify_identities(binomial_samples, series_samples, s),
        Command::Cluster { command } => cluster::run(command, s),
    }
}

fn emit(body: &str, s: &Settings) -> Result<(), Failure> {
    match &s.output {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Io(format!("cannot write standard output: {e}")))
        }
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = settings(cli.global).and_then(|s| {
        let r = dispatch(cli.command, &s)?;
        emit(&r.body, &s)?;
        Ok(r.ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}
