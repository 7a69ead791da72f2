use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use zagreb_core::scalar::Scalar;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// A rendered document ready to be written.
pub struct Document(pub String);

impl Document {
    pub fn json<T: Serialize + ?Sized>(value: &T) -> Self {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        Document(s)
    }

    pub fn csv(header: &[&str], rows: &[Vec<String>]) -> Self {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).expect("in-memory write");
        for row in rows {
            w.write_record(row).expect("in-memory write");
        }
        Document(String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"))
    }

    pub fn write_to(&self, path: Option<&Path>) -> Result<(), CliError> {
        match path {
            Some(p) => {
                let mut f = File::create(p)
                    .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display())))?;
                f.write_all(self.0.as_bytes())
                    .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display())))
            }
            None => {
                let mut out = io::stdout().lock();
                out.write_all(self.0.as_bytes())?;
                out.flush()?;
                Ok(())
            }
        }
    }
}

/// `p/q` for exact values, empty for approximations.
pub fn exact(s: &Scalar) -> String {
    match s {
        Scalar::Approx(_) => String::new(),
        other => other.to_string(),
    }
}

/// Shortest round-trip decimal.
pub fn approx(s: &Scalar) -> String {
    s.to_f64().to_string()
}

/// Six-decimal rendering for reading.
pub fn decimal(s: &Scalar) -> String {
    format!("{:.6}", s.to_f64())
}

/// Columns padded to their widest cell.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (cell, w) in cells.zip(&widths) {
            s.push_str(cell);
            s.push_str(&" ".repeat(w - cell.chars().count() + 2));
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}
