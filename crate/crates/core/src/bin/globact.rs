use std::process::ExitCode;

use clap::Parser;
use globact::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors count as invalid input.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = run(&cli);
    if !cli.quiet {
        if let Some(report) = &outcome.report {
            print!("{report}");
        }
        if let Some(error) = &outcome.error {
            eprintln!("{error}");
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
