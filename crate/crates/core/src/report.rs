//! Verification reports: one row per checked property.
//!
//! The text form is one line per case; the CSV form has the columns
//! `suite,case_id,status,witness`.

use std::fmt;
use std::io;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded but never fails a run, e.g. commutativity of the constructed product.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub suite: String,
    pub case_id: String,
    pub status: Status,
    pub witness: String,
    /// Instances examined; text report only.
    pub checked: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        suite: &str,
        case_id: impl Into<String>,
        status: Status,
        witness: impl Into<String>,
        checked: u64,
    ) {
        self.cases.push(Case {
            suite: suite.to_owned(),
            case_id: case_id.into(),
            status,
            witness: witness.into(),
            checked,
        });
    }

    /// Pass when `failure` is `None`, otherwise fail with its witness.
    pub fn record(&mut self, suite: &str, case_id: &str, checked: u64, failure: Option<String>) {
        match failure {
            None => self.push(suite, case_id, Status::Pass, "", checked),
            Some(w) => self.push(suite, case_id, Status::Fail, w, checked),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.failures().next()
    }

    pub fn case(&self, case_id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.case_id == case_id)
    }

    /// Folds reports case by case: counts add up, the first failure in
    /// order wins, and case order follows first appearance.
    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Report {
        let mut merged = Report::new();
        for case in reports.into_iter().flat_map(|r| r.cases) {
            let slot = merged.cases.iter_mut().find(|c| c.suite == case.suite && c.case_id == case.case_id);
            match slot {
                None => merged.cases.push(case),
                Some(c) => {
                    c.checked += case.checked;
                    if c.status == Status::Pass && case.status == Status::Fail {
                        c.status = Status::Fail;
                        c.witness = case.witness;
                    }
                }
            }
        }
        merged
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["suite", "case_id", "status", "witness"])?;
        for c in &self.cases {
            w.write_record([&c.suite, &c.case_id, &c.status.to_string(), &c.witness])?;
        }
        w.flush()?;
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "[{}] {}/{} (checked {})", c.status, c.suite, c.case_id, c.checked)?;
            if !c.witness.is_empty() {
                write!(f, ": {}", c.witness)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
