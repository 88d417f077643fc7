use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fanoverify::chow::BlowupModel;
use fanoverify::report::{self, CheckRecord, Format, ReportError, RunConfig};

const CONFIG_ERROR: u8 = 64;

#[derive(Parser)]
#[command(name = "fanoverify", version, about = "Exact checks for the genus 8 Fano threefold construction")]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check
    VerifyAll {
        /// Flat TOML run configuration
        #[arg(long)]
        config: Option<PathBuf>,
        /// Exit with 2 when a check is undetermined
        #[arg(long)]
        strict: bool,
    },
    /// Quintic identity and the degree of the tangent plane locus
    Quintic,
    /// Mori and effective cone checks
    Cones,
    /// Intersection numbers on the blow-up and after the flops
    Numerology,
    /// Picard lattice checks on the flopped quadric surface
    Surface,
    /// Chart sampling over F_p and a seeded search for a general pair
    Sample {
        /// Odd prime for the field
        #[arg(long)]
        prime: u64,
        /// Number of random charts
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Trial cap for the pair search
        #[arg(long, default_value_t = 200)]
        budget: u64,
    },
    /// Conditions (i)-(iv) for a cubic pair read from a file
    Generality {
        /// Pair file: a `prime p` or `rationals` header, then ten rows of coefficients
        #[arg(long)]
        input: PathBuf,
        /// Exit with 2 when a condition is undetermined
        #[arg(long)]
        strict: bool,
    },
    /// Dimension count of the moduli space
    Dimension,
}

/// The records for a subcommand, with the config it ran under.
fn collect(command: &Command) -> Result<(RunConfig, Vec<CheckRecord>), ReportError> {
    let model = BlowupModel::default();
    let mut cfg = RunConfig::default();
    let records = match command {
        Command::VerifyAll { config, strict } => {
            if let Some(path) = config {
                cfg = RunConfig::load(path)?;
            }
            cfg.strict |= *strict;
            report::run_all(&cfg)?
        }
        Command::Quintic => report::quintic_records(),
        Command::Cones => report::cone_records(&model),
        Command::Numerology => report::numerology_records(&model),
        Command::Surface => report::surface_records(),
        Command::Sample {
            prime,
            trials,
            seed,
            budget,
        } => report::sampling_records(*prime, *trials, *seed, *budget)?,
        Command::Generality { input, strict } => {
            cfg.strict = *strict;
            report::input_records(input)?
        }
        Command::Dimension => report::dimension_records(),
    };
    Ok((cfg, records))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut cfg, records) = match collect(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("fanoverify: {e}");
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    match cli.format {
        Some(FormatArg::Text) => cfg.format = Format::Text,
        Some(FormatArg::Structured) => cfg.format = Format::Structured,
        None => {}
    }
    if cli.out.is_some() {
        cfg.output = cli.out;
    }
    match report::emit_report(&records, &cfg, &mut io::stdout().lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fanoverify: {e}");
            ExitCode::from(CONFIG_ERROR)
        }
    }
}
