use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Shift the violation belongs to, if any.
    pub k: Option<usize>,
    pub detail: String,
}

impl Violation {
    pub fn at(k: usize, detail: impl Into<String>) -> Self {
        Violation {
            k: Some(k),
            detail: detail.into(),
        }
    }

    pub fn general(detail: impl Into<String>) -> Self {
        Violation {
            k: None,
            detail: detail.into(),
        }
    }
}

/// Result of running one family of checks; violations keep case order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub cases: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds `other` into `self`, keeping this report's name.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
    }
}
