//! Step-by-step verification records.

use std::fmt::{self, Display};

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::exactmath::Matrix;

/// One verified computation: what was checked, the expected and the actual
/// value, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(rename = "step")]
    pub description: String,
    pub check: bool,
    pub expected: String,
    pub actual: String,
}

/// A unital standard isotope `base^(φ,φ)` built along the way, together with
/// the element `g` for which `φ R_g = I`.
#[derive(Clone, Debug)]
pub struct IsotopeRecord {
    pub label: String,
    pub base: Algebra,
    pub phi: Matrix,
    pub g: Element,
}

#[derive(Clone, Debug, Serialize)]
struct NamedValue {
    name: String,
    value: String,
}

/// Ordered list of checks. The verdict is their conjunction; an empty
/// certificate is never accepted.
#[derive(Clone, Debug, Default)]
pub struct Certificate {
    pub title: String,
    pub steps: Vec<Step>,
    values: Vec<NamedValue>,
    pub isotopes: Vec<IsotopeRecord>,
}

impl Certificate {
    pub fn new(title: impl Into<String>) -> Self {
        Certificate {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn verdict(&self) -> bool {
        !self.steps.is_empty() && self.steps.iter().all(|s| s.check)
    }

    /// Records a step with explicit outcome.
    pub fn record(
        &mut self,
        description: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
        check: bool,
    ) -> bool {
        self.steps.push(Step {
            description: description.into(),
            check,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
        check
    }

    /// Records `expected == actual`.
    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        description: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> bool {
        let ok = expected == actual;
        self.record(description, expected, actual, ok)
    }

    /// Records `Some(expected) == actual`, showing `none` for a missing value.
    pub fn check_some<T: PartialEq + Display>(
        &mut self,
        description: impl Into<String>,
        expected: &T,
        actual: Option<&T>,
    ) -> bool {
        let shown = actual.map_or("none".to_string(), ToString::to_string);
        self.record(description, expected, shown, actual == Some(expected))
    }

    /// Records a boolean predicate expected to hold.
    pub fn check(&mut self, description: impl Into<String>, holds: bool) -> bool {
        self.record(description, true, holds, holds)
    }

    /// Named output value, e.g. a computed parameter.
    pub fn set_value(&mut self, name: impl Into<String>, value: impl Display) {
        let name = name.into();
        let value = value.to_string();
        match self.values.iter_mut().find(|v| v.name == name) {
            Some(v) => v.value = value,
            None => self.values.push(NamedValue { name, value }),
        }
    }

    pub fn value(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.value.as_str())
    }

    pub fn values(&self) -> impl Iterator<Item = (&str, &str)> {
        self.values
            .iter()
            .map(|v| (v.name.as_str(), v.value.as_str()))
    }

    /// Appends every step, value and isotope of `sub`, prefixing step
    /// descriptions with its title.
    pub fn absorb(&mut self, sub: Certificate) {
        for s in sub.steps {
            self.steps.push(Step {
                description: format!("[{}] {}", sub.title, s.description),
                ..s
            });
        }
        for v in sub.values {
            self.set_value(format!("{}.{}", sub.title, v.name), v.value);
        }
        self.isotopes.extend(sub.isotopes);
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| !s.check)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "title": self.title,
            "verdict": self.verdict(),
            "steps": self.steps,
            "values": self.values,
        })
    }
}

impl Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for (i, s) in self.steps.iter().enumerate() {
            let mark = if s.check { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {:>2}. {}", i + 1, s.description)?;
            if s.expected != "true" || !s.check {
                writeln!(f, "         expected: {}", s.expected)?;
                writeln!(f, "         actual:   {}", s.actual)?;
            }
        }
        for v in &self.values {
            writeln!(f, "  {} = {}", v.name, v.value)?;
        }
        write!(
            f,
            "verdict: {}",
            if self.verdict() { "VERIFIED" } else { "FAILED" }
        )
    }
}
