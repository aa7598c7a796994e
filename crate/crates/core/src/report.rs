//! Structured verification reports: one entry per checked identity, with a
//! witness basis index on failure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tensor::MultiMap;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis multi-index where the two sides differ, e.g. `[x1] <- [g, x0]`.
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report { subject: subject.into(), items: Vec::new() }
    }

    /// Record whether two maps agree exactly.
    pub fn equal(&mut self, name: impl Into<String>, lhs: &MultiMap, rhs: &MultiMap) -> bool {
        let witness = if crate::tensor::check_shape(lhs.domain(), rhs.domain()).is_err()
            || crate::tensor::check_shape(lhs.codomain(), rhs.codomain()).is_err()
        {
            Some(Witness { index: "shape".into(), lhs: format!("{} legs", lhs.domain().len()), rhs: format!("{} legs", rhs.domain().len()) })
        } else {
            lhs.first_difference(rhs).map(|(k, a, b)| Witness { index: lhs.describe_key(&k), lhs: a.to_string(), rhs: b.to_string() })
        };
        let passed = witness.is_none();
        self.items.push(CheckItem { name: name.into(), passed, witness, note: None });
        passed
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, note: Option<String>) -> bool {
        self.items.push(CheckItem { name: name.into(), passed, witness: None, note });
        passed
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Append another report's items, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut it in other.items {
            it.name = format!("{prefix}{}", it.name);
            self.items.push(it);
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn sorted(mut self) -> Report {
        self.items.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.items.iter().filter(|i| i.passed).count();
        writeln!(f, "{}: {}/{} checks passed", self.subject, ok, self.items.len())?;
        for it in &self.items {
            write!(f, "  [{}] {}", if it.passed { "pass" } else { "FAIL" }, it.name)?;
            if let Some(n) = &it.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
            if let Some(w) = &it.witness {
                writeln!(f, "      at {}: {} vs {}", w.index, w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}
