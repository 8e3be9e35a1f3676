//! Command implementations behind the `rcomp` binary.

pub mod args;
pub mod commands;
pub mod error;
pub mod oeis_check;
pub mod output;
pub mod verify;

use std::io::Write;

use args::{Cli, Command};
use error::CliResult;
use output::Sink;

pub fn run<W: Write>(cli: &Cli, out: W) -> CliResult {
    let mut sink = Sink::new(cli.format, out);
    match &cli.command {
        Command::Count(a) => commands::count(a, &mut sink)?,
        Command::Enumerate(a) => commands::enumerate(a, &mut sink)?,
        Command::Series(a) => commands::series(a, &mut sink)?,
        Command::Diagonal(a) => commands::diagonal(a, &mut sink)?,
        Command::Verify(a) => verify::verify(a, &mut sink)?,
        Command::OeisCheck(a) => oeis_check::oeis_check(a, &mut sink)?,
    }
    sink.finish()
}
