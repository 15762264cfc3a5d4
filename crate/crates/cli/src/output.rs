//! Tabular output as CSV or aligned text.
//!
//! Numbers are formatted the same way in both: integers as integers,
//! magnitudes of 10⁵ and above (or below 10⁻³) in shortest scientific form,
//! anything else in shortest round-trip decimal. Output is a pure function of
//! the rows, so identical runs give identical bytes.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Text(String),
    Int(i128),
    Float(f64),
    Bool(bool),
    Empty,
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(x: $t) -> Self {
                Value::Int(x as i128)
            }
        }
    )*};
}
int_value!(u32, u64, usize, i64);

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(x: Option<T>) -> Self {
        x.map_or(Value::Empty, Into::into)
    }
}

pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "NaN".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    // ten significant digits hide accumulated rounding noise
    let x: f64 = format!("{x:.9e}").parse().expect("formatted float parses");
    let a = x.abs();
    if !(1e-3..1e5).contains(&a) {
        format!("{x:e}")
    } else if x.fract() == 0.0 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Text(s) => f.write_str(s),
            Value::Int(i) if i.unsigned_abs() >= 100_000 => f.write_str(&format_number(*i as f64)),
            Value::Int(i) => write!(f, "{i}"),
            Value::Float(x) => f.write_str(&format_number(*x)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Empty => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Csv,
    #[default]
    Text,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Index of a column by header.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("writing to memory");
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string())).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for r in &cells {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |r: &[String]| {
            let mut s = r
                .iter()
                .zip(&width)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        let mut out = line(&self.headers);
        out.push_str(&line(&width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
        for r in &cells {
            out.push_str(&line(r));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formats() {
        assert_eq!(format_number(30.0), "30");
        assert_eq!(format_number(99999.0), "99999");
        assert_eq!(format_number(2_097_152.0), "2.097152e6");
        assert_eq!(format_number(-1e5), "-1e5");
        assert_eq!(format_number(0.0125), "0.0125");
        assert_eq!(format_number(0.0023357440000000003), "0.002335744");
        assert_eq!(format_number(1.0 / 3.0), "0.3333333333");
        assert_eq!(format_number(7e-4), "7e-4");
        assert_eq!(Value::from(123_456u64).to_string(), "1.23456e5");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["code", "p"]);
        t.push(vec!["[[7,1,3]]".into(), 0.5.into()]);
        assert_eq!(t.to_csv(), "code,p\n\"[[7,1,3]]\",0.5\n");
    }

    #[test]
    fn text_aligns() {
        let mut t = Table::new(&["a", "long"]);
        t.push(vec!["xyz".into(), 1u32.into()]);
        assert_eq!(t.to_text(), "a    long\n---  ----\nxyz  1\n");
    }
}
