use std::io::{self, Write};

use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    /// Bad flags, unparsable input or violated parameter constraints.
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] dbhom::Error),
    /// The input was well formed but failed a check.
    #[error("{0}")]
    Rejected(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Rejected(_) => 1,
            _ => 2,
        }
    }
}

/// One unit of output: printed as `lines` in text mode, or as a JSON object
/// `{command, params, sequence, report}`.
pub struct Record {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub sequence: Option<String>,
    pub report: Map<String, Value>,
    pub lines: Vec<String>,
}

impl Record {
    pub fn new(command: &'static str, params: Map<String, Value>) -> Self {
        Self { command, params, sequence: None, report: Map::new(), lines: Vec::new() }
    }
}

pub struct Out<'a> {
    sink: &'a mut dyn Write,
    json: bool,
}

impl<'a> Out<'a> {
    pub fn new(sink: &'a mut dyn Write, json: bool) -> Self {
        Self { sink, json }
    }

    pub fn emit(&mut self, record: Record) -> io::Result<()> {
        if self.json {
            let value = json!({
                "command": record.command,
                "params": record.params,
                "sequence": record.sequence,
                "report": record.report,
            });
            writeln!(self.sink, "{value}")
        } else {
            for line in &record.lines {
                writeln!(self.sink, "{line}")?;
            }
            Ok(())
        }
    }
}
