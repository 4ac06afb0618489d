//! Command-line surface for the Brauer complex engine.

pub mod report;
pub mod verify;

use std::io::Write;

use brauer_core::brauer::DEFAULT_MAX_SUBALCOVES;
use brauer_core::census::{self, GroupConfig};
use brauer_core::{AffineDatum, Error};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "brauer",
    version,
    about = "Brauer complex enumeration and semisimple class census"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root system, extended diagram and fundamental group data.
    Info {
        #[arg(long = "type", value_name = "TYPE")]
        label: String,
    },
    /// Census of F-stable semisimple classes.
    Census {
        #[arg(long = "type", value_name = "TYPE")]
        label: String,
        /// `sc`, `ad`, or `sub:<nodes>` such as `sub:alpha1`.
        #[arg(long, default_value = "sc")]
        isogeny: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        twisted: bool,
        /// Order-3 twist of D4; implies `--twisted`.
        #[arg(long)]
        triality: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBALCOVES)]
        max_subalcoves: usize,
    },
    /// Runs a verification suite and prints one line per check.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: verify::Suite,
        #[arg(long)]
        max_q: Option<u64>,
        /// Comma-separated types, e.g. `A2,C3,G2`.
        #[arg(long)]
        types: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBALCOVES)]
        max_subalcoves: usize,
    },
}

fn parse_suite(s: &str) -> Result<verify::Suite, String> {
    s.parse()
}

/// Maps library errors onto exit codes.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidType(_) | Error::InvalidInput(_) => EXIT_USAGE,
        Error::Invariant(_) => EXIT_INVARIANT,
        Error::Resource(_) => EXIT_RESOURCE,
    }
}

/// Executes a parsed command, writing the payload to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn execute(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Resource(format!("write failed: {e}"));
    match cli.command {
        Command::Info { label } => {
            let aff = AffineDatum::from_label(&label)?;
            let report = report::info(&aff)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{text}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Census {
            label,
            isogeny,
            q,
            twisted,
            triality,
            format,
            max_subalcoves,
        } => {
            let config = GroupConfig::from_parts(&label, &isogeny, q, twisted, triality)?;
            let result = census::run(&config, max_subalcoves)?;
            let report = report::census(&config, &result);
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
                Format::Tsv => report::census_tsv(&report),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_q,
            types,
            max_subalcoves,
        } => {
            let bounds = verify::Bounds {
                max_q,
                types: types.as_deref().map(verify::parse_types).transpose()?,
                max_subalcoves,
            };
            let checks = verify::run(suite, &bounds);
            let mut failed = 0;
            for c in &checks {
                writeln!(out, "{c}").map_err(io)?;
                if c.pass == Some(false) {
                    failed += 1;
                }
            }
            let passed = checks.iter().filter(|c| c.pass == Some(true)).count();
            writeln!(out, "SUMMARY\t{suite}\t{passed} passed\t{failed} failed").map_err(io)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_INVARIANT })
        }
    }
}
