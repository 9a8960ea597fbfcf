use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::residual::Residual;

/// What a run prints and how it exits.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    /// Printed on stderr; set only for errors.
    pub error: Option<String>,
}

impl Outcome {
    pub fn error(e: &Error) -> Self {
        let code = if matches!(e, Error::NotSymmetric) { 3 } else { 2 };
        Outcome { code, text: String::new(), error: Some(e.to_string()) }
    }

    /// A plain data command: compact JSON or the given text.
    /// Serializes `value` directly so struct and map order is kept.
    pub fn data<T: Serialize + ?Sized>(json: bool, value: &T, text: String) -> Self {
        let text = if json { format!("{}\n", serde_json::to_string(value).expect("data serializes")) } else { text };
        Outcome { code: 0, text, error: None }
    }
}

/// Result of a residual check. Only nonzero residuals are listed.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<Residual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Report {
    pub fn from_residuals(command: String, residuals: &[Residual], data: Option<Value>) -> Self {
        let failures: Vec<Residual> = residuals.iter().filter(|r| !r.is_zero()).cloned().collect();
        Report { command, pass: failures.is_empty(), checked: residuals.len(), failures, data }
    }

    pub fn to_table(&self) -> String {
        let mut s = format!(
            "{}: {} ({} checked, {} nonzero)\n",
            self.command,
            if self.pass { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        );
        let width = self.failures.iter().map(|r| r.relation.chars().count()).max().unwrap_or(0);
        for r in &self.failures {
            s.push_str(&format!("  {:<width$}  {}\n", r.relation, r.residual));
        }
        s
    }

    pub fn into_outcome(self, json: bool) -> Outcome {
        let code = if self.pass { 0 } else { 1 };
        let text = if json {
            format!("{}\n", serde_json::to_string(&self).expect("report serializes"))
        } else {
            self.to_table()
        };
        Outcome { code, text, error: None }
    }
}
