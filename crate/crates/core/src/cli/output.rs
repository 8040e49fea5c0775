//! Rendering of CLI results as CSV or JSON lines.

use crate::format::{format_significant, DISPLAY_DIGITS, EXACT_DIGITS};
use crate::interval::Interval;
use crate::number::Tfn;
use crate::order::SignClass;

use super::input::TfnRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Output format plus number precision.
#[derive(Debug, Clone, Copy)]
pub struct Renderer {
    pub format: OutputFormat,
    pub exact: bool,
}

impl Renderer {
    pub fn new(format: OutputFormat, exact: bool) -> Self {
        Renderer { format, exact }
    }

    pub fn number(&self, x: f64) -> String {
        format_significant(x, if self.exact { EXACT_DIGITS } else { DISPLAY_DIGITS })
    }

    fn json_id(id: &Option<String>) -> String {
        match id {
            Some(id) => format!("\"id\":{},", serde_json::to_string(id).expect("strings serialize")),
            None => String::new(),
        }
    }

    fn csv_id(id: &Option<String>) -> String {
        id.as_ref().map(|id| format!("{id},")).unwrap_or_default()
    }

    pub fn tfn(&self, value: &Tfn) -> String {
        self.record(&TfnRecord::new(None, *value))
    }

    pub fn record(&self, record: &TfnRecord) -> String {
        let (a, b, c) = record.value.components();
        let (a, b, c) = (self.number(a), self.number(b), self.number(c));
        match self.format {
            OutputFormat::Csv => format!("{}{a},{b},{c}", Self::csv_id(&record.id)),
            OutputFormat::Json => {
                format!("{{{}\"a\":{a},\"b\":{b},\"c\":{c}}}", Self::json_id(&record.id))
            }
        }
    }

    pub fn sign(&self, id: &Option<String>, sign: SignClass) -> String {
        match self.format {
            OutputFormat::Csv => format!("{}{}", Self::csv_id(id), sign.as_str()),
            OutputFormat::Json => format!("{{{}\"sign\":\"{}\"}}", Self::json_id(id), sign.as_str()),
        }
    }

    pub fn cut(&self, id: &Option<String>, alpha: f64, cut: &Interval) -> String {
        let (lo, hi) = (self.number(cut.lo()), self.number(cut.hi()));
        match self.format {
            OutputFormat::Csv => format!("{}[{lo},{hi}]", Self::csv_id(id)),
            OutputFormat::Json => format!(
                "{{{}\"alpha\":{},\"lo\":{lo},\"hi\":{hi}}}",
                Self::json_id(id),
                self.number(alpha)
            ),
        }
    }

    pub fn verdict(&self, property: &str, holds: bool, trials: usize, detail: Option<String>) -> String {
        match self.format {
            OutputFormat::Csv => match detail {
                None => format!("{property}: holds ({trials} trials)"),
                Some(detail) => format!("{property}: counterexample: {detail}"),
            },
            OutputFormat::Json => {
                let detail = detail
                    .map(|d| format!(",\"counterexample\":{}", serde_json::to_string(&d).expect("strings serialize")))
                    .unwrap_or_default();
                format!("{{\"property\":\"{property}\",\"holds\":{holds},\"trials\":{trials}{detail}}}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_records() {
        let csv = Renderer::new(OutputFormat::Csv, false);
        let json = Renderer::new(OutputFormat::Json, false);
        let rec = TfnRecord::new(Some("q\"1".into()), Tfn::new(-0.5, 1.0, 1e20).unwrap());
        assert_eq!(csv.record(&rec), "q\"1,-0.5,1,1e+20");
        assert_eq!(json.record(&rec), "{\"id\":\"q\\\"1\",\"a\":-0.5,\"b\":1,\"c\":1e+20}");
        let value: serde_json::Value = serde_json::from_str(&json.record(&rec)).unwrap();
        assert_eq!(value["c"], 1e20);
    }

    #[test]
    fn exact_precision() {
        let x = Tfn::new(0.1 + 0.2, 1.0, 1.0).unwrap();
        assert_eq!(Renderer::new(OutputFormat::Csv, false).tfn(&x), "0.3,1,1");
        assert_eq!(Renderer::new(OutputFormat::Csv, true).tfn(&x), "0.30000000000000004,1,1");
    }

    #[test]
    fn cuts_and_signs() {
        let csv = Renderer::new(OutputFormat::Csv, false);
        let cut = Interval::new(0.5, 1.5).unwrap();
        assert_eq!(csv.cut(&None, 0.5, &cut), "[0.5,1.5]");
        assert_eq!(csv.cut(&Some("x".into()), 0.5, &cut), "x,[0.5,1.5]");
        assert_eq!(csv.sign(&None, SignClass::Zero), "zero");
        let json = Renderer::new(OutputFormat::Json, false);
        assert_eq!(json.cut(&None, 0.5, &cut), "{\"alpha\":0.5,\"lo\":0.5,\"hi\":1.5}");
        assert_eq!(json.sign(&Some("k".into()), SignClass::Negative), "{\"id\":\"k\",\"sign\":\"negative\"}");
    }
}
