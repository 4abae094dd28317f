//! Output modes shared by every subcommand.
//!
//! Human mode prints `key: value` lines, machine mode prints
//! `key<TAB>value`, json mode prints one object per record. A Record is
//! an ordered list of fields so all three modes agree on field order.

use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Human,
    Machine,
    Json,
}

/// One output record: ordered key/value pairs.
#[derive(Debug, Default)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Record {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    /// Writes the record in the given mode. Json emits a single line;
    /// numeric-looking values still go out as strings, which keeps big
    /// integers exact.
    pub fn emit(&self, mode: Mode, out: &mut impl Write) -> std::io::Result<()> {
        match mode {
            Mode::Human => {
                for (k, v) in &self.fields {
                    if v.contains('\n') {
                        writeln!(out, "{k}:")?;
                        writeln!(out, "{v}")?;
                    } else {
                        writeln!(out, "{k}: {v}")?;
                    }
                }
            }
            Mode::Machine => {
                for (k, v) in &self.fields {
                    writeln!(out, "{k}\t{}", v.replace('\n', "\\n"))?;
                }
            }
            Mode::Json => {
                let mut map = serde_json::Map::new();
                for (k, v) in &self.fields {
                    map.insert(k.clone(), serde_json::Value::String(v.clone()));
                }
                writeln!(out, "{}", serde_json::Value::Object(map))?;
            }
        }
        Ok(())
    }
}
