use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Header plus rows of preformatted cells.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> io::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }

    /// Right-aligned columns separated by two spaces.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

/// A command result in all three formats.
pub struct Output {
    pub json: String,
    pub csv: Table,
    pub text: String,
    /// Bypasses formatting entirely (plot data).
    pub raw: Option<String>,
}

impl Output {
    /// Text form is the preface lines followed by the aligned table.
    pub fn new(json: serde_json::Value, table: Table, preface: &[String]) -> Self {
        let json = serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n";
        Self::with_json_text(json, table, preface)
    }

    pub fn with_json_text(json: String, table: Table, preface: &[String]) -> Self {
        let mut text: String = preface.iter().map(|l| format!("{l}\n")).collect();
        if !table.headers.is_empty() {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&table.to_text());
        }
        Output { json, csv: table, text, raw: None }
    }

    pub fn raw(text: String) -> Self {
        Output { json: String::new(), csv: Table::default(), text: String::new(), raw: Some(text) }
    }

    pub fn render(&self, format: Format) -> io::Result<String> {
        if let Some(raw) = &self.raw {
            return Ok(raw.clone());
        }
        Ok(match format {
            Format::Json => self.json.clone(),
            Format::Csv => self.csv.to_csv()?,
            Format::Table => self.text.clone(),
        })
    }
}

/// Writes to stdout, or to `path` through a temporary file in the same
/// directory renamed into place.
pub fn emit(path: Option<&Path>, contents: &str) -> io::Result<()> {
    match path {
        None => {
            let mut out = io::stdout().lock();
            out.write_all(contents.as_bytes())?;
            out.flush()
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(contents.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_renders_csv_and_text() {
        let mut t = Table::new(["n", "value"]);
        t.push(vec!["1".into(), "10".into()]);
        t.push(vec!["12".into(), "3".into()]);
        assert_eq!(t.to_csv().unwrap(), "n,value\n1,10\n12,3\n");
        assert_eq!(t.to_text(), " n  value\n 1     10\n12      3\n");
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.txt");
        std::fs::write(&path, "old").unwrap();
        emit(Some(&path), "new\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "new\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
