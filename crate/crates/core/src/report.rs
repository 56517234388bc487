//! Report records shared by the identity checks.

use serde::Serialize;

/// One disagreement between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of checking an identity over a finite set of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub key: String,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, key: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            key: key.into(),
            checked: 0,
            mismatches: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Records one comparison.
    pub fn compare<T: PartialEq + ToString>(&mut self, at: impl Into<String>, lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.mismatches.push(Mismatch {
                at: at.into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
    }
}
