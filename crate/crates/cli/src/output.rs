//! Output records and their three renderings.

use std::fmt::Write as _;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// A grid coordinate such as `t0`; printed in exponent form in tables.
    Key(f64),
    Num(f64),
    Int(u64),
    Text(String),
    Missing,
}

impl Cell {
    fn table(&self) -> String {
        match self {
            Cell::Key(x) => format!("{x:e}"),
            Cell::Num(x) => format!("{x:.4}"),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => "-".into(),
        }
    }

    fn machine(&self) -> String {
        match self {
            Cell::Key(x) | Cell::Num(x) => format!("{x:.16e}"),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Key(x) | Cell::Num(x) if x.is_finite() => format!("{x:.16e}"),
            Cell::Key(_) | Cell::Num(_) | Cell::Missing => "null".into(),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => quote(s),
        }
    }

    fn sort_key(&self) -> f64 {
        match self {
            Cell::Key(x) | Cell::Num(x) => *x,
            Cell::Int(n) => *n as f64,
            _ => 0.0,
        }
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputRecord {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Stable ascending sort on the first column.
    pub fn sort_by_key(&mut self) {
        self.rows
            .sort_by(|a, b| a[0].sort_key().total_cmp(&b[0].sort_key()));
    }

    fn metadata_json(&self) -> String {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{}:{}", quote(k), quote(v)))
            .collect();
        let columns: Vec<String> = self.columns.iter().map(|c| quote(c)).collect();
        format!(
            "{{\"schema_version\":{},\"command\":{},\"inputs\":{{{}}},\"columns\":[{}]}}",
            quote(self.schema_version),
            quote(&self.command),
            inputs.join(","),
            columns.join(",")
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::table).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].len())
                    .chain([self.columns[j].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, items: &[String]| {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&mut out, &self.columns);
        for row in &cells {
            line(&mut out, row);
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.metadata_json(), self.columns.join(","));
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::machine).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    fn render_json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let fields: Vec<String> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("{}:{}", quote(c), v.json()))
                    .collect();
                format!("{{{}}}", fields.join(","))
            })
            .collect();
        let meta = self.metadata_json();
        format!(
            "{},\"rows\":[{}]}}\n",
            &meta[..meta.len() - 1],
            rows.join(",")
        )
    }
}
