use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliResult;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    JsonLines,
    Csv,
}

/// Writes one record per call in the selected format. Plain text is
/// supplied by the caller since each command has its own layout.
pub enum Sink<W: Write> {
    Plain(W),
    JsonLines(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> Sink<W> {
    pub fn new(format: OutputFormat, out: W) -> Self {
        match format {
            OutputFormat::Plain => Sink::Plain(out),
            OutputFormat::JsonLines => Sink::JsonLines(out),
            OutputFormat::Csv => Sink::Csv(Box::new(csv::Writer::from_writer(out))),
        }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Sink::Plain(_))
    }

    /// Emit `record`; in plain mode emit `plain` as a line instead, if given.
    pub fn record<T: Serialize>(&mut self, record: &T, plain: Option<&str>) -> CliResult {
        match self {
            Sink::Plain(w) => {
                if let Some(line) = plain {
                    writeln!(w, "{line}")?;
                }
            }
            Sink::JsonLines(w) => {
                serde_json::to_writer(&mut *w, record)?;
                writeln!(w)?;
            }
            Sink::Csv(w) => w.serialize(record)?,
        }
        Ok(())
    }

    /// A line that only appears in plain output.
    pub fn plain_line(&mut self, line: &str) -> CliResult {
        if let Sink::Plain(w) = self {
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn finish(self) -> CliResult {
        match self {
            Sink::Plain(mut w) | Sink::JsonLines(mut w) => w.flush()?,
            Sink::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}
