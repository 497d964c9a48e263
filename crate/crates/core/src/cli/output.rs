use std::fmt::Display;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Records,
    Csv,
    Svg,
}

/// Ordered `key = value` pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(String, String)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.0.push((key.to_owned(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.0.push((key.to_owned(), value.to_string()));
    }
}

/// Result of one command, before formatting.
#[derive(Debug, Default)]
pub struct Rendered {
    pub records: Vec<Record>,
    /// Replaces the default text rendering of `records`.
    pub text: Option<String>,
    pub csv: Option<String>,
    pub svg: Option<String>,
    /// A verification ran and found a violation.
    pub failed: bool,
}

impl Rendered {
    pub fn one(r: Record) -> Self {
        Self {
            records: vec![r],
            ..Self::default()
        }
    }

    pub fn many(records: Vec<Record>) -> Self {
        Self {
            records,
            ..Self::default()
        }
    }

    /// Render in `format`, or `None` if this command has no such output.
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Text => Some(self.text.clone().unwrap_or_else(|| text(&self.records))),
            Format::Records => Some(records(&self.records)),
            Format::Csv => Some(self.csv.clone().unwrap_or_else(|| csv(&self.records))),
            Format::Svg => self.svg.clone(),
        }
    }
}

fn text(records: &[Record]) -> String {
    if let [Record(fields)] = records {
        if let [(_, v)] = fields.as_slice() {
            return format!("{v}\n");
        }
    }
    let blocks: Vec<String> = records
        .iter()
        .map(|r| r.0.iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
        .collect();
    blocks.join("\n")
}

fn records(records: &[Record]) -> String {
    let blocks: Vec<String> = records
        .iter()
        .map(|r| r.0.iter().map(|(k, v)| format!("{k}={v}\n")).collect())
        .collect();
    blocks.join("\n")
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_owned()
    }
}

fn csv(records: &[Record]) -> String {
    let Some(first) = records.first() else {
        return String::new();
    };
    let mut s: String = first
        .0
        .iter()
        .map(|(k, _)| csv_field(k))
        .collect::<Vec<_>>()
        .join(",");
    s.push('\n');
    for r in records {
        let row: Vec<String> = r.0.iter().map(|(_, v)| csv_field(v)).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Comma-joined list.
pub fn list<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
