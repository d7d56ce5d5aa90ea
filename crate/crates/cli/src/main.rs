//! `etakit` command-line front end.

mod commands;
mod output;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{Command, UnitArg};
use output::{Format, Style};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "etakit",
    version,
    about = "Growth rates, network entropy and graph metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Significant digits for numbers
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
    /// Time unit for displayed rates (each command has its own default)
    #[arg(long, global = true, value_enum)]
    unit: Option<UnitArg>,
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let run = match commands::execute(&cli.command, cli.unit.map(Into::into)) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("etakit {}: {e}", cli.command.name());
            return ExitCode::from(EXIT_DATA);
        }
    };
    let style = Style {
        format: cli.format,
        digits: usize::from(cli.digits),
        color: cli.format == Format::Table && color_enabled(),
    };
    let text = output::render(&run.output, &style);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(EXIT_DATA);
    }
    if run.mismatch {
        eprintln!("etakit reproduce: some checks failed");
        return ExitCode::from(EXIT_MISMATCH);
    }
    ExitCode::SUCCESS
}
