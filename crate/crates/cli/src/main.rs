use std::process::ExitCode;

use clap::Parser;
use sc_cli::Cli;

fn main() -> ExitCode {
    match sc_cli::run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sc: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
