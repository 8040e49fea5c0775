//! Record parsing for the CLI.
//!
//! One record per line, either CSV (`a,b,c` or `id,a,b,c`) or JSON lines
//! (`{"id": "x", "a": 1, "b": 2, "c": 3}`, `id` optional). The format is
//! detected from the first line that is neither blank nor a `#` comment and
//! applies to the whole input.

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;

use crate::error::TfnError;
use crate::number::Tfn;

/// An input record: a TFN with an optional label.
#[derive(Debug, Clone, PartialEq)]
pub struct TfnRecord {
    pub id: Option<String>,
    pub value: Tfn,
}

impl TfnRecord {
    pub fn new(id: Option<String>, value: Tfn) -> Self {
        TfnRecord { id, value }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    JsonLines,
}

/// A malformed or invalid input line. Line numbers start at 1.
#[derive(Debug, Clone, PartialEq)]
pub enum InputError {
    Parse { line: usize, message: String },
    Validation { line: usize, source: TfnError },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse { line, message } => write!(f, "line {line}: parse error: {message}"),
            InputError::Validation { line, source } => write!(f, "line {line}: {source}"),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Deserialize)]
struct JsonRecord {
    #[serde(default)]
    id: Option<String>,
    a: f64,
    b: f64,
    c: f64,
}

fn is_skipped(line: &str) -> bool {
    let line = line.trim();
    line.is_empty() || line.starts_with('#')
}

/// Format of the first significant line, `None` for inputs without one.
pub fn detect_format(text: &str) -> Option<InputFormat> {
    text.lines().find(|l| !is_skipped(l)).map(|l| {
        if l.trim_start().starts_with('{') {
            InputFormat::JsonLines
        } else {
            InputFormat::Csv
        }
    })
}

/// Parses every record in `text`.
pub fn parse_input(text: &str) -> Result<Vec<TfnRecord>, InputError> {
    let Some(format) = detect_format(text) else {
        return Ok(Vec::new());
    };
    let mut records = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        if is_skipped(raw) {
            continue;
        }
        let record = match format {
            InputFormat::Csv => parse_csv_line(raw.trim(), line)?,
            InputFormat::JsonLines => parse_json_line(raw.trim(), line)?,
        };
        if let Some(id) = &record.id {
            if let Some(first) = seen.insert(id.clone(), line) {
                return Err(InputError::Validation {
                    line,
                    source: TfnError::Validation(format!(
                        "duplicate id '{id}' (first used on line {first})"
                    )),
                });
            }
        }
        records.push(record);
    }
    Ok(records)
}

fn parse_number(field: &str, line: usize) -> Result<f64, InputError> {
    field.parse().map_err(|_| InputError::Parse {
        line,
        message: format!("'{field}' is not a number"),
    })
}

fn validated(id: Option<String>, a: f64, b: f64, c: f64, line: usize) -> Result<TfnRecord, InputError> {
    Tfn::new(a, b, c)
        .map(|value| TfnRecord::new(id, value))
        .map_err(|source| InputError::Validation { line, source })
}

fn parse_csv_line(text: &str, line: usize) -> Result<TfnRecord, InputError> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let (id, numbers) = match fields.as_slice() {
        [a, b, c] => (None, [*a, *b, *c]),
        [id, a, b, c] => {
            if id.is_empty() {
                return Err(InputError::Parse { line, message: "empty id".into() });
            }
            (Some((*id).to_owned()), [*a, *b, *c])
        }
        other => {
            return Err(InputError::Parse {
                line,
                message: format!("expected 3 or 4 comma-separated fields, found {}", other.len()),
            })
        }
    };
    let [a, b, c] = numbers;
    validated(id, parse_number(a, line)?, parse_number(b, line)?, parse_number(c, line)?, line)
}

fn parse_json_line(text: &str, line: usize) -> Result<TfnRecord, InputError> {
    let record: JsonRecord = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line,
        message: format!("invalid JSON record: {e}"),
    })?;
    validated(record.id, record.a, record.b, record.c, line)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: f64, b: f64, c: f64) -> Tfn {
        Tfn::new(a, b, c).unwrap()
    }

    #[test]
    fn csv_without_ids() {
        let records = parse_input("1,2,3\n0,1,2").unwrap();
        assert_eq!(
            records,
            vec![TfnRecord::new(None, t(1.0, 2.0, 3.0)), TfnRecord::new(None, t(0.0, 1.0, 2.0))]
        );
    }

    #[test]
    fn csv_with_ids_comments_and_blanks() {
        let text = "# header\n\nx,1,2,3\n  # indented comment\ny, -1.5 , 0 ,2e3\n";
        let records = parse_input(text).unwrap();
        assert_eq!(records[0], TfnRecord::new(Some("x".into()), t(1.0, 2.0, 3.0)));
        assert_eq!(records[1], TfnRecord::new(Some("y".into()), t(-1.5, 0.0, 2000.0)));
    }

    #[test]
    fn json_lines() {
        let text = "# data\n{\"id\":\"p\",\"a\":0,\"b\":1,\"c\":2}\n{\"a\":-1,\"b\":0,\"c\":1}\n";
        assert_eq!(detect_format(text), Some(InputFormat::JsonLines));
        let records = parse_input(text).unwrap();
        assert_eq!(records[0], TfnRecord::new(Some("p".into()), t(0.0, 1.0, 2.0)));
        assert_eq!(records[1], TfnRecord::new(None, t(-1.0, 0.0, 1.0)));
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_input("").unwrap(), vec![]);
        assert_eq!(parse_input("# nothing\n\n").unwrap(), vec![]);
        assert_eq!(detect_format("\n#x\n"), None);
    }

    #[test]
    fn validation_errors_carry_line_numbers() {
        let err = parse_input("3,2,1").unwrap_err();
        assert!(matches!(err, InputError::Validation { line: 1, .. }));
        assert_eq!(err.to_string(), "line 1: validation error: expected a <= b <= c, got (3, 2, 1)");

        let err = parse_input("# c\n0,0,0\nnan,1,2\n").unwrap_err();
        assert!(matches!(err, InputError::Validation { line: 3, .. }));

        let err = parse_input("x,0,0,0\nx,1,1,1\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 2: validation error: duplicate id 'x' (first used on line 1)"
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_input("1,2,3\n1,2\n").unwrap_err().to_string(),
            "line 2: parse error: expected 3 or 4 comma-separated fields, found 2"
        );
        assert_eq!(
            parse_input("1,two,3").unwrap_err().to_string(),
            "line 1: parse error: 'two' is not a number"
        );
        assert_eq!(
            parse_input(",1,2,3").unwrap_err().to_string(),
            "line 1: parse error: empty id"
        );
        assert!(matches!(
            parse_input("{\"a\":1}\n").unwrap_err(),
            InputError::Parse { line: 1, .. }
        ));
        // JSON is chosen for the whole file
        assert!(matches!(
            parse_input("{\"a\":1,\"b\":2,\"c\":3}\n1,2,3\n").unwrap_err(),
            InputError::Parse { line: 2, .. }
        ));
    }
}
