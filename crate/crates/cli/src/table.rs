//! Rendering of result tables as text, CSV or JSON.

use serde_json::{Map, Number, Value};

use crate::{CliError, Format};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    /// An exact integer of any size, kept as decimal text.
    Int(String),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    pub fn int(v: impl ToString) -> Cell {
        Cell::Int(v.to_string())
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(s) | Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(s) => s.parse::<Number>().map(Value::Number).unwrap_or_else(|_| Value::String(s.clone())),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// JSON nests the rows under `key`, next to the entries of `meta`.
    pub fn render(&self, format: Format, key: &str, meta: Map<String, Value>) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Csv => self.csv(),
            Format::Json => {
                let mut top = meta;
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect()))
                    .collect();
                top.insert(key.to_string(), Value::Array(rows));
                Ok(serde_json::to_string_pretty(&Value::Object(top))? + "\n")
            }
        }
    }

    fn text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| cells.iter().map(|r| r[c].len()).chain([self.columns[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |row: &[String]| {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.columns);
        for r in &cells {
            out += &line(r);
        }
        out
    }

    fn csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::plain))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["n", "count", "ok"]);
        t.push(vec![Cell::int(7), Cell::int("115640460115640460115640460"), Cell::Bool(true)]);
        t
    }

    #[test]
    fn big_integers_stay_numbers() {
        let s = sample().render(Format::Json, "rows", Map::new()).unwrap();
        assert!(s.contains("\"count\": 115640460115640460115640460"));
    }

    #[test]
    fn csv_and_text() {
        let t = sample();
        assert_eq!(
            t.render(Format::Csv, "rows", Map::new()).unwrap(),
            "n,count,ok\n7,115640460115640460115640460,true\n"
        );
        let text = t.render(Format::Text, "rows", Map::new()).unwrap();
        assert_eq!(text.lines().count(), 2);
    }
}
