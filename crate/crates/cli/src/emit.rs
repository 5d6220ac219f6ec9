use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::Value;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// Lines after the main table whose every record starts with `tag`.
pub struct Block {
    pub tag: &'static str,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub blocks: Vec<Block>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            blocks: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .flexible(true)
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        for block in &self.blocks {
            w.write_record(std::iter::once(block.tag.to_string()).chain(block.header.iter().cloned()))?;
            for row in &block.rows {
                w.write_record(std::iter::once(block.tag.to_string()).chain(row.iter().cloned()))?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

pub struct Output {
    pub table: Table,
    pub json: Value,
}

/// Wraps a command's payload with the schema version and command name.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("schema_version".into(), SCHEMA_VERSION.into());
    map.insert("command".into(), command.into());
    if let Value::Object(fields) = payload {
        map.extend(fields);
    } else {
        map.insert("data".into(), payload);
    }
    Value::Object(map)
}

pub fn write(output: &Output, format: Format, path: Option<&Path>) -> Result<()> {
    let mut sink: Box<dyn Write> = match path {
        Some(p) => Box::new(io::BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => output.table.write_csv(&mut sink)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, &output.json)?;
            sink.write_all(b"\n")?;
        }
    }
    sink.flush()?;
    Ok(())
}
