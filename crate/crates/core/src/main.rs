use std::process::ExitCode;

use clap::Parser;
use qforms::cli::{self, CliConfig, CliError};

fn main() -> ExitCode {
    let cfg = CliConfig::parse();
    let result = cli::run(&cfg);
    let (text, code) = match result {
        Ok(text) => (text, 0),
        // The report is the useful output of a failed check, so it still goes
        // where the caller asked for output.
        Err(CliError::Mismatch(report)) => {
            eprintln!("error: verification mismatch");
            (report, 1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        let e = CliError::from(e);
        eprintln!("error: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    ExitCode::from(code)
}
