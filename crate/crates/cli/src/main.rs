use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;
use rcomp_cli::args::Cli;
use rcomp_cli::error::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    match rcomp_cli::run(&cli, BufWriter::new(stdout)) {
        Ok(()) => ExitCode::SUCCESS,
        // downstream closed early, e.g. `| head`
        Err(CliError::Io(msg)) if msg.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rcomp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
