//! Check reports: per-check case counts, failures with minimal
//! counterexamples, and deterministic text/summary rendering.

use std::fmt::Write;
use std::time::{Duration, Instant};

/// A failed case with a rendering of the smallest witness at hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub message: String,
}

/// Outcome of one suite run. A suite passes only with zero failures and a
/// nonzero case count for every declared check (zero cases would mean a
/// vacuous run).
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub suite: String,
    counts: Vec<(String, u64)>,
    failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn counts(&self) -> &[(String, u64)] {
        &self.counts
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn cases(&self) -> u64 {
        self.counts.iter().map(|(_, n)| n).sum()
    }

    pub fn count_of(&self, check: &str) -> u64 {
        self.counts
            .iter()
            .find(|(label, _)| label == check)
            .map(|(_, n)| *n)
            .unwrap_or(0)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.counts.iter().all(|(_, n)| *n > 0)
    }

    /// Human-readable rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        for (label, n) in &self.counts {
            let status = if *n == 0 { "  [NO CASES]" } else { "" };
            let _ = writeln!(out, "  {label}: {n} cases{status}");
        }
        if self.failures.is_empty() {
            out.push_str("result: ok\n");
        } else {
            let _ = writeln!(out, "result: {} failures", self.failures.len());
            for f in &self.failures {
                let _ = writeln!(out, "  FAIL {}: {}", f.check, f.message);
            }
        }
        out
    }

    /// Machine-readable key=value summary.
    pub fn render_summary(&self) -> String {
        format!(
            "suite={}\ncases={}\nfailures={}\nseconds={:.3}\n",
            self.suite,
            self.cases(),
            self.failures.len() + self.counts.iter().filter(|(_, n)| *n == 0).count(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Accumulates cases and failures in a fixed declaration order so reruns
/// produce identical reports.
#[derive(Debug)]
pub struct Recorder {
    suite: String,
    counts: Vec<(String, u64)>,
    failures: Vec<Failure>,
    started: Instant,
}

impl Recorder {
    pub fn new(suite: impl Into<String>) -> Self {
        Recorder {
            suite: suite.into(),
            counts: Vec::new(),
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Registers a check up front so it appears (and is coverage-guarded)
    /// even if no case ever reaches it.
    pub fn declare(&mut self, check: &str) {
        if !self.counts.iter().any(|(label, _)| label == check) {
            self.counts.push((check.to_string(), 0));
        }
    }

    fn bump(&mut self, check: &str) {
        match self.counts.iter_mut().find(|(label, _)| label == check) {
            Some((_, n)) => *n += 1,
            None => self.counts.push((check.to_string(), 1)),
        }
    }

    /// Records one case; on failure keeps the rendered counterexample.
    pub fn case(&mut self, check: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.bump(check);
        if !ok {
            self.failures.push(Failure {
                check: check.to_string(),
                message: witness(),
            });
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            suite: self.suite,
            counts: self.counts,
            failures: self.failures,
            elapsed: self.started.elapsed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_case_checks_fail_the_report() {
        let mut rec = Recorder::new("demo");
        rec.declare("vacuous");
        rec.case("real", true, String::new);
        let report = rec.finish();
        assert!(!report.passed());
        assert_eq!(report.count_of("real"), 1);
        assert!(report.render_text().contains("[NO CASES]"));
    }

    #[test]
    fn failures_keep_their_witness() {
        let mut rec = Recorder::new("demo");
        rec.case("law", false, || "a=1 b=2".to_string());
        let report = rec.finish();
        assert!(!report.passed());
        assert_eq!(report.failures()[0].message, "a=1 b=2");
        assert!(report.render_summary().starts_with("suite=demo\ncases=1\nfailures=1\n"));
    }
}
