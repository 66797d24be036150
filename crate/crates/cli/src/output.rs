use std::str::FromStr;

use epslab_core::rational::{approx_f64, to_fraction_string};
use num_rational::BigRational;
use serde_json::Value;

pub const SEQUENCE_HEADER: [&str; 8] = [
    "family",
    "n",
    "m",
    "k",
    "length",
    "naive",
    "finite_diff",
    "richardson",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown output format '{other}' (csv, md, json)")),
        }
    }
}

/// A rational cell: `p/q` text plus its value for the markdown decimal
/// column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Empty,
    Text(String),
    Ratio(BigRational),
}

impl Cell {
    pub fn text(s: impl ToString) -> Self {
        Cell::Text(s.to_string())
    }

    pub fn opt<T: ToString>(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Cell::text)
    }

    pub fn ratio(r: &BigRational) -> Self {
        Cell::Ratio(r.clone())
    }

    pub fn opt_ratio(r: Option<&BigRational>) -> Self {
        r.map_or(Cell::Empty, Cell::ratio)
    }

    fn exact(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Ratio(r) => to_fraction_string(r),
        }
    }

    fn markdown(&self) -> String {
        match self {
            Cell::Ratio(r) => format!("{} (≈{:.6})", to_fraction_string(r), approx_f64(r)),
            other => other.exact().replace('|', "\\|"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, header: &[&str]) -> Self {
        Table {
            title: title.into(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn sequences(title: impl Into<String>) -> Self {
        Table::new(title, &SEQUENCE_HEADER)
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub tables: Vec<Table>,
    /// Summary lines: stderr for csv, bullets in markdown, a `notes` array in json.
    pub notes: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Md => self.markdown(),
            Format::Json => {
                let mut json = self.json.clone();
                if let (Value::Object(map), false) = (&mut json, self.notes.is_empty()) {
                    map.insert("notes".into(), self.notes.clone().into());
                }
                let mut s = serde_json::to_string_pretty(&json).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }

    /// Tables sharing a header are written under a single header line.
    fn csv(&self) -> String {
        let mut out = Vec::new();
        let mut current: Option<&Vec<String>> = None;
        for table in &self.tables {
            if current != Some(&table.header) {
                if current.is_some() {
                    out.push(b'\n');
                }
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(&table.header).expect("in-memory write");
                w.flush().expect("in-memory write");
                current = Some(&table.header);
            }
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut out);
            for row in &table.rows {
                w.write_record(row.iter().map(Cell::exact)).expect("in-memory write");
            }
            w.flush().expect("in-memory write");
        }
        String::from_utf8(out).expect("csv output is utf-8")
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        for table in &self.tables {
            out.push_str(&format!("### {}\n\n", table.title));
            out.push_str(&format!("| {} |\n", table.header.join(" | ")));
            out.push_str(&format!("|{}\n", "---|".repeat(table.header.len())));
            for row in &table.rows {
                let cells: Vec<String> = row.iter().map(Cell::markdown).collect();
                out.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str(&format!("- {note}\n"));
        }
        out
    }
}

pub fn json_ratio(r: &BigRational) -> Value {
    Value::String(to_fraction_string(r))
}

pub fn json_opt_ratio(r: Option<&BigRational>) -> Value {
    r.map_or(Value::Null, json_ratio)
}
