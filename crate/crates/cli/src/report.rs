use std::time::Duration;

use serde_json::{json, Value};
use supersphere::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct Record {
    pub name: String,
    pub n: Option<u32>,
    pub sign: Option<Sign>,
    pub status: Status,
    /// Serialized evidence for a failure.
    pub witness: Option<Value>,
    pub elapsed: Duration,
}

impl Record {
    fn key(&self) -> (&str, Option<u32>, Option<Sign>) {
        (&self.name, self.n, self.sign)
    }

    fn label(&self) -> String {
        let mut s = self.name.clone();
        if let Some(n) = self.n {
            s.push_str(&format!(" n={n}"));
        }
        if let Some(sign) = self.sign {
            s.push_str(&format!(" {sign}"));
        }
        s
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "n": self.n,
            "sign": self.sign.map(Sign::name),
            "status": self.status.word(),
            "witness": self.witness,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
        })
    }
}

/// All records of one `verify` run, sorted by `(name, n, sign)`.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn new(mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.key().cmp(&b.key()));
        VerificationReport { records }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&Record> {
        self.records.iter().find(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": if self.passed() { "pass" } else { "fail" },
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {} ({:.1} ms)\n", r.label(), r.elapsed.as_secs_f64() * 1e3));
            if let Some(w) = &r.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        out.push_str(&format!(
            "{} checks, {} passed, {failed} failed\n",
            self.records.len(),
            self.records.len() - failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(name: &str, n: Option<u32>, status: Status) -> Record {
        Record {
            name: name.into(),
            n,
            sign: None,
            status,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    #[test]
    fn records_are_sorted_and_status_is_conjunctive() {
        let r = VerificationReport::new(vec![
            rec("b", Some(2), Status::Pass),
            rec("a", None, Status::Pass),
            rec("b", Some(1), Status::Fail),
        ]);
        let names: Vec<_> = r.records.iter().map(|x| (x.name.as_str(), x.n)).collect();
        assert_eq!(names, vec![("a", None), ("b", Some(1)), ("b", Some(2))]);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().n, Some(1));
        assert_eq!(r.to_json()["status"], "fail");
    }
}
