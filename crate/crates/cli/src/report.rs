//! Verification reports: per-check records with exact values on both
//! sides, plus summary counts. A check passes iff the two rationals are
//! equal, so `failed == 0` is the whole exit-code story.

use std::collections::BTreeMap;

use serde::Serialize;

use gkp_core::rational::format_rational;
use gkp_core::Rational;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub spec: String,
    pub n: usize,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct CheckCounts {
    pub passed: u64,
    pub failed: u64,
}

impl CheckCounts {
    pub fn total(&self) -> u64 {
        self.passed + self.failed
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    /// Pass/fail tallies per check id, alphabetically keyed.
    pub by_id: BTreeMap<String, CheckCounts>,
    /// Every failing check, in generation order (suite, spec, n, k).
    pub failures: Vec<CheckRecord>,
    /// Recorded observations that are reported, not asserted.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, trials: usize, n_max: usize) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            trials,
            n_max,
            checks: 0,
            passed: 0,
            failed: 0,
            by_id: BTreeMap::new(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Tally for one check id; zero counts if the id never ran.
    pub fn counts(&self, id: &str) -> CheckCounts {
        self.by_id.get(id).copied().unwrap_or_default()
    }

    /// Exact equality check between two rationals.
    pub fn check(&mut self, id: &str, spec: &str, n: usize, k: usize, lhs: &Rational, rhs: &Rational) {
        let pass = lhs == rhs;
        self.tally(id, pass, || CheckRecord {
            id: id.to_string(),
            spec: spec.to_string(),
            n,
            k,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
            pass,
        });
    }

    /// Check with preformatted sides (counts, step strings, ...).
    pub fn check_display(
        &mut self,
        id: &str,
        spec: &str,
        n: usize,
        k: usize,
        pass: bool,
        lhs: impl std::fmt::Display,
        rhs: impl std::fmt::Display,
    ) {
        self.tally(id, pass, || CheckRecord {
            id: id.to_string(),
            spec: spec.to_string(),
            n,
            k,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
    }

    fn tally(&mut self, id: &str, pass: bool, record: impl FnOnce() -> CheckRecord) {
        self.checks += 1;
        let counts = self.by_id.entry(id.to_string()).or_default();
        if pass {
            self.passed += 1;
            counts.passed += 1;
        } else {
            self.failed += 1;
            counts.failed += 1;
            self.failures.push(record());
        }
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// One summary line plus notes and a capped failure listing.
    pub fn render_text(&self, max_failures: usize) -> String {
        let mut out = String::new();
        let verdict = if self.all_pass() { "ok" } else { "FAILED" };
        out.push_str(&format!(
            "suite {}: {}/{} checks passed [{}] (seed={}, trials={}, nmax={})\n",
            self.suite, self.passed, self.checks, verdict, self.seed, self.trials, self.n_max
        ));
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        for f in self.failures.iter().take(max_failures) {
            out.push_str(&format!(
                "  FAIL {} spec={} n={} k={}: {} != {}\n",
                f.id, f.spec, f.n, f.k, f.lhs, f.rhs
            ));
        }
        if self.failures.len() > max_failures {
            out.push_str(&format!(
                "  ... and {} more failures\n",
                self.failures.len() - max_failures
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gkp_core::rational::rat;

    #[test]
    fn tallies_and_failures() {
        let mut rep = SuiteReport::new("demo", 1, 2, 3);
        rep.check("demo/eq", "s", 1, 0, &rat(4), &rat(4));
        rep.check("demo/eq", "s", 2, 1, &rat(4), &rat(5));
        rep.check_display("demo/other", "s", 0, 0, true, "a", "a");

        assert!(!rep.all_pass());
        assert_eq!((rep.checks, rep.passed, rep.failed), (3, 2, 1));
        assert_eq!(rep.counts("demo/eq").failed, 1);
        assert_eq!(rep.counts("demo/other").total(), 1);
        assert_eq!(rep.counts("demo/missing").total(), 0);
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].rhs, "5");

        let text = rep.render_text(10);
        assert!(text.contains("suite demo: 2/3 checks passed [FAILED]"));
        assert!(text.contains("FAIL demo/eq spec=s n=2 k=1: 4 != 5"));
    }
}
