//! fracvib: analysis of vibrators with variable-order fractional forces.
//!
//! Exit codes: 0 success, 1 config/usage error, 2 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fracvib_cli::commands::{self, ResponseKind};
use fracvib_cli::config::{self, SweepConfig};
use fracvib_cli::figures;
use fracvib_cli::svg;

#[derive(Parser)]
#[command(
    name = "fracvib",
    about = "Effective parameters, responses, and transfer functions of variable-order fractional vibrators",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON configuration file
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG chart next to the CSV (requires --out)
    #[arg(long)]
    svg: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Free,
    Impulse,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the effective mass, damping, and stiffness over the frequency grid
    Effective(SweepArgs),
    /// Sweep the restricted damping ratio, natural frequencies, and frequency ratio
    Restricted(SweepArgs),
    /// Free or impulse time response at the config's response frequency
    Response {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Sweep the frequency transfer function
    Transfer(SweepArgs),
    /// Sweep the generalized Rayleigh damping decomposition (requires c = 0)
    Rayleigh(SweepArgs),
    /// Regenerate the sweep data behind a cataloged figure panel
    Figure {
        /// Panel id, e.g. 3.1e or 6.2a
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: bool,
    },
    /// Run the verification suite and write its report
    Verify {
        /// Seed for the random-spec families
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
}

#[derive(Debug, thiserror::Error)]
enum MainError {
    #[error(transparent)]
    Command(#[from] commands::CommandError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("--svg needs --out to know where to put the chart")]
    SvgNeedsOut,
}

fn write_out(path: &Path, text: &str) -> Result<(), MainError> {
    std::fs::write(path, text).map_err(|source| MainError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Emit CSV to --out or stdout, plus the optional SVG chart.
fn emit(
    csv: &str,
    out: Option<&Path>,
    want_svg: bool,
    title: &str,
    y_column: &str,
) -> Result<(), MainError> {
    match out {
        Some(path) => write_out(path, csv)?,
        None => print!("{csv}"),
    }
    if want_svg {
        let out = out.ok_or(MainError::SvgNeedsOut)?;
        if let Some(chart) = svg::chart_from_csv(title, csv, y_column) {
            write_out(&out.with_extension("svg"), &chart)?;
        }
    }
    Ok(())
}

fn load(args: &SweepArgs) -> Result<SweepConfig, MainError> {
    Ok(config::load(&args.config)?)
}

/// Output path precedence: --out flag, then the config's `out` key.
fn out_path<'a>(args: &'a SweepArgs, cfg: &'a SweepConfig) -> Option<&'a Path> {
    args.out.as_deref().or(cfg.out.as_deref())
}

fn run(cli: Cli) -> Result<ExitCode, MainError> {
    match cli.command {
        Command::Effective(args) => {
            let cfg = load(&args)?;
            let csv = commands::cmd_effective(&cfg);
            emit(
                &csv,
                out_path(&args, &cfg),
                args.svg,
                "effective parameters",
                "m_eff",
            )?;
        }
        Command::Restricted(args) => {
            let cfg = load(&args)?;
            let csv = commands::cmd_restricted(&cfg);
            emit(
                &csv,
                out_path(&args, &cfg),
                args.svg,
                "restricted parameters",
                "zeta_eff",
            )?;
        }
        Command::Response { kind, sweep: args } => {
            let cfg = load(&args)?;
            let (kind, column) = match kind {
                KindArg::Free => (ResponseKind::Free, "x"),
                KindArg::Impulse => (ResponseKind::Impulse, "h"),
            };
            let csv = commands::cmd_response(&cfg, kind)?;
            emit(
                &csv,
                out_path(&args, &cfg),
                args.svg,
                "time response",
                column,
            )?;
        }
        Command::Transfer(args) => {
            let cfg = load(&args)?;
            let csv = commands::cmd_transfer(&cfg);
            emit(
                &csv,
                out_path(&args, &cfg),
                args.svg,
                "transfer function",
                "amplitude",
            )?;
        }
        Command::Rayleigh(args) => {
            let cfg = load(&args)?;
            let csv = commands::cmd_rayleigh(&cfg);
            emit(
                &csv,
                out_path(&args, &cfg),
                args.svg,
                "Rayleigh decomposition",
                "c_gray",
            )?;
        }
        Command::Figure { id, out, svg } => {
            let csv = commands::cmd_figure(&id)?;
            let featured = figures::panel(&id).expect("id resolved above").featured;
            emit(&csv, out.as_deref(), svg, &format!("figure {id}"), featured)?;
        }
        Command::Verify { seed, out, format } => {
            let outcome = commands::cmd_verify(seed);
            let report = match format {
                FormatArg::Csv => commands::verify_report_csv(&outcome.reports),
                FormatArg::Json => commands::verify_report_json(&outcome.reports),
            };
            match out.as_deref() {
                Some(path) => write_out(path, &report)?,
                None => print!("{report}"),
            }
            for r in &outcome.reports {
                eprintln!(
                    "[{}] {} (worst error {:e}, threshold {:e})",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.worst_error,
                    r.threshold
                );
            }
            if !outcome.pass {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version output is a successful exit
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
