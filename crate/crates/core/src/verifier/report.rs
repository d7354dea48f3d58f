//! Check reports and their text, JSON and JUnit renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::exactnum::{compare_with, BoundExpr, CompareError, CompareOptions};

/// Outcome of one checked point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Agrees with a printed value only up to one unit in its last printed place.
    Approx,
    Fail,
    Undecidable,
    /// Recorded for reference; not a judgement.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Approx => "approx",
            Status::Fail => "fail",
            Status::Undecidable => "undecidable",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckPoint {
    pub input: String,
    pub status: Status,
    /// Certified value (interval or exact) of the left side or the recomputed cell.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    /// Certified value of the right side or the printed cell.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckPoint {
    pub fn new(input: impl Into<String>, status: Status) -> CheckPoint {
        CheckPoint {
            input: input.into(),
            status,
            left: None,
            right: None,
            note: None,
        }
    }

    pub fn values(mut self, left: impl Into<String>, right: impl Into<String>) -> CheckPoint {
        self.left = Some(left.into());
        self.right = Some(right.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> CheckPoint {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub approx: usize,
    pub fail: usize,
    pub undecidable: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub target: String,
    pub domain: String,
    pub points: Vec<CheckPoint>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(target: impl Into<String>, domain: impl Into<String>, points: Vec<CheckPoint>) -> CheckReport {
        let mut summary = Summary::default();
        for p in &points {
            match p.status {
                Status::Pass => summary.pass += 1,
                Status::Approx => summary.approx += 1,
                Status::Fail => summary.fail += 1,
                Status::Undecidable => summary.undecidable += 1,
                Status::Info => summary.info += 1,
            }
        }
        CheckReport {
            target: target.into(),
            domain: domain.into(),
            points,
            summary,
        }
    }

    /// Failing points with their inputs and values.
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckPoint> {
        self.points.iter().filter(|p| p.status == Status::Fail)
    }

    pub fn undecided(&self) -> impl Iterator<Item = &CheckPoint> {
        self.points.iter().filter(|p| p.status == Status::Undecidable)
    }

    /// No failures and no undecidable points.
    pub fn is_clean(&self) -> bool {
        self.summary.fail == 0 && self.summary.undecidable == 0
    }

    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "{} [{}]: {} pass, {} approx, {} fail, {} undecidable, {} info\n",
            self.target, self.domain, s.pass, s.approx, s.fail, s.undecidable, s.info
        );
        for p in self.points.iter().filter(|p| p.status != Status::Pass) {
            let _ = write!(out, "  {:<11} {}", p.status.as_str(), p.input);
            if let (Some(l), Some(r)) = (&p.left, &p.right) {
                let _ = write!(out, ": {l} vs {r}");
            }
            if let Some(n) = &p.note {
                let _ = write!(out, " ({n})");
            }
            out.push('\n');
        }
        out
    }
}

/// Render reports as a JSON array.
pub fn reports_json(reports: &[CheckReport]) -> serde_json::Value {
    serde_json::to_value(reports).unwrap_or(serde_json::Value::Null)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// JUnit-style XML: one test suite per report, one test case per point.
pub fn reports_junit(reports: &[CheckReport]) -> String {
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<testsuites>\n");
    for r in reports {
        let _ = writeln!(
            out,
            "  <testsuite name=\"{}\" tests=\"{}\" failures=\"{}\" errors=\"{}\">",
            xml_escape(&r.target),
            r.points.len(),
            r.summary.fail,
            r.summary.undecidable
        );
        for p in &r.points {
            let _ = write!(out, "    <testcase classname=\"{}\" name=\"{}\"", xml_escape(&r.target), xml_escape(&p.input));
            let detail = format!(
                "{} vs {}{}",
                p.left.as_deref().unwrap_or("-"),
                p.right.as_deref().unwrap_or("-"),
                p.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
            );
            match p.status {
                Status::Fail => {
                    let _ = writeln!(out, "><failure message=\"{}\"/></testcase>", xml_escape(&detail));
                }
                Status::Undecidable => {
                    let _ = writeln!(out, "><error message=\"{}\"/></testcase>", xml_escape(&detail));
                }
                Status::Info | Status::Approx => {
                    let _ = writeln!(out, "><system-out>{}</system-out></testcase>", xml_escape(&detail));
                }
                Status::Pass => out.push_str("/>\n"),
            }
        }
        out.push_str("  </testsuite>\n");
    }
    out.push_str("</testsuites>\n");
    out
}

/// Certify `lhs <= rhs` and turn the outcome into a point.
pub fn check_le(input: String, lhs: &BoundExpr, rhs: &BoundExpr, opts: &CompareOptions) -> CheckPoint {
    let (l, r) = (lhs.simplify(), rhs.simplify());
    if l == r {
        return CheckPoint::new(input, Status::Pass).note("identical sides");
    }
    match compare_with(&l, &r, 1, opts) {
        Ok(c) => {
            let status = if c.ordering == std::cmp::Ordering::Greater {
                Status::Fail
            } else {
                Status::Pass
            };
            let mut p = CheckPoint::new(input, status);
            if status == Status::Fail {
                p = p.values(side(&l, c.left.as_ref()), side(&r, c.right.as_ref()));
                if c.log_domain {
                    p = p.note("values are natural logarithms");
                }
            }
            p
        }
        Err(CompareError::Undecidable { left, right, .. }) => {
            CheckPoint::new(input, Status::Undecidable).values(left, right)
        }
        Err(CompareError::Domain(m)) => CheckPoint::new(input, Status::Undecidable).note(m),
    }
}

/// Certify `lhs > rhs`, used for probes below a lemma's threshold.
pub fn check_gt(lhs: &BoundExpr, rhs: &BoundExpr, opts: &CompareOptions) -> Result<bool, CompareError> {
    Ok(compare_with(lhs, rhs, 1, opts)?.ordering == std::cmp::Ordering::Greater)
}

fn side(e: &BoundExpr, iv: Option<&crate::exactnum::RealInterval>) -> String {
    match iv {
        Some(iv) => iv.to_string(),
        None => crate::exactnum::exact_value(e, 1)
            .map(|v| v.to_string())
            .unwrap_or_else(|| "?".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_renderings() {
        let opts = CompareOptions::default();
        let pts = vec![
            check_le("a".into(), &BoundExpr::int(2), &BoundExpr::int(3), &opts),
            check_le("b".into(), &BoundExpr::int(4), &BoundExpr::int(3), &opts),
            CheckPoint::new("c", Status::Info).note("x<y"),
        ];
        let r = CheckReport::new("demo", "toy", pts);
        assert_eq!(r.summary.pass, 1);
        assert_eq!(r.summary.fail, 1);
        assert!(!r.is_clean());
        let cx: Vec<_> = r.counterexamples().collect();
        assert_eq!(cx[0].left.as_deref(), Some("4"));
        assert_eq!(cx[0].right.as_deref(), Some("3"));
        assert!(r.to_text().contains("fail        b: 4 vs 3"));
        let xml = reports_junit(std::slice::from_ref(&r));
        assert!(xml.contains("failures=\"1\""));
        assert!(xml.contains("x&lt;y"));
        assert_eq!(reports_json(&[r])[0]["summary"]["fail"], 1);
    }
}
