use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use sentilex_cli::cli::{Cli, Command};
use sentilex_cli::commands::{run_classify, run_evaluate, run_lexicon_info};
use sentilex_cli::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    match &cli.command {
        Command::Classify(args) => run_classify(args, &mut out, &mut err),
        Command::Evaluate(args) => run_evaluate(args, &mut out, &mut err),
        Command::LexiconInfo(args) => run_lexicon_info(args, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_ok =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if usage_ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
