//! Pass/fail records for identity checks.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Whether an identity is expected to hold or is a negative control that
/// must fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// Short name of the relation being checked.
    pub anchor: String,
    pub holds: bool,
    pub expect: Expect,
    /// Serialized defect when the identity does not hold.
    pub defect: Option<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        match self.expect {
            Expect::Holds => self.holds,
            Expect::Fails => !self.holds,
        }
    }

    pub fn is_negative_control(&self) -> bool {
        self.expect == Expect::Fails
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    /// Records an identity expected to hold. `defect` is `None` when it does.
    pub fn record(&mut self, id: impl Into<String>, anchor: &str, defect: Option<String>) {
        self.checks.push(Check { id: id.into(), anchor: anchor.to_string(), holds: defect.is_none(), expect: Expect::Holds, defect });
    }

    /// Records a negative control; it passes when `defect` is present.
    pub fn record_negative(&mut self, id: impl Into<String>, anchor: &str, defect: Option<String>) {
        self.checks.push(Check { id: id.into(), anchor: anchor.to_string(), holds: defect.is_none(), expect: Expect::Fails, defect });
    }

    pub fn record_bool(&mut self, id: impl Into<String>, anchor: &str, holds: bool, detail: impl FnOnce() -> String) {
        let defect = if holds { None } else { Some(detail()) };
        self.record(id, anchor, defect);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}
