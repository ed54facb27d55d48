//! Executable checks of structural statements about transversals, run over
//! a catalog of `(G, H)` pairs and over small primes and moduli.
//!
//! Implication-form statements are checked only as implications: a report is
//! `vacuous` when the hypothesis fails, and `fail` always carries a
//! counterexample in its details.

mod catalog;
mod checks;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::transversal::DEFAULT_ENUMERATION_CAP;

pub use catalog::{default_catalog, parse_catalog, CatalogEntry, ExpectedFacts, ResolvedEntry};
pub use checks::{resolve_check, CheckInfo, Scope, CHECKS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("catalog entry `{label}`: {message}")]
    Entry { label: String, message: String },
    #[error("catalog entry `{label}`: enumeration would yield {count} transversals, above the cap of {cap}")]
    CapExceeded { label: String, count: u128, cap: u128 },
    #[error("invalid catalog: {0}")]
    Catalog(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0} is not an odd prime")]
    BadPrime(usize),
    #[error("modulus {0} is out of range")]
    BadModulus(usize),
}

impl SuiteError {
    fn entry(e: &CatalogEntry, err: impl std::fmt::Display) -> Self {
        SuiteError::Entry { label: e.label.clone(), message: err.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub label: String,
    pub verdict: Verdict,
    pub summary: String,
    pub details: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub checks: Vec<&'static CheckInfo>,
    pub primes: Vec<usize>,
    pub moduli: Vec<usize>,
    pub cap: u128,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { checks: CHECKS.iter().collect(), primes: vec![3, 5, 7], moduli: (3..=10).collect(), cap: DEFAULT_ENUMERATION_CAP }
    }
}

enum Task<'a> {
    Entry(&'static CheckInfo, &'a ResolvedEntry),
    Prime(&'static CheckInfo, usize),
    Modulus(&'static CheckInfo, usize),
}

/// One report per (check, applicable subject), ordered by check then subject.
pub fn run_suite(catalog: &[CatalogEntry], opts: &SuiteOptions) -> Result<Vec<CheckReport>, SuiteError> {
    for &p in &opts.primes {
        if p == 2 || !crate::arith::is_prime(p) {
            return Err(SuiteError::BadPrime(p));
        }
    }
    if let Some(&n) = opts.moduli.iter().find(|&&n| !(2..=crate::zn_b::MAX_MODULUS).contains(&n)) {
        return Err(SuiteError::BadModulus(n));
    }
    let needs_entries = opts.checks.iter().any(|c| c.scope == Scope::Entry);
    let entries: Vec<ResolvedEntry> = if needs_entries {
        catalog.par_iter().map(|e| ResolvedEntry::resolve(e, opts.cap)).collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let mut tasks = Vec::new();
    for &c in &opts.checks {
        match c.scope {
            Scope::Entry => tasks.extend(entries.iter().map(|e| Task::Entry(c, e))),
            Scope::Prime => tasks.extend(opts.primes.iter().map(|&p| Task::Prime(c, p))),
            Scope::Modulus => tasks.extend(opts.moduli.iter().map(|&n| Task::Modulus(c, n))),
        }
    }
    Ok(tasks
        .par_iter()
        .map(|t| match *t {
            Task::Entry(c, e) => checks::run_entry_check(c, e),
            Task::Prime(c, p) => checks::run_prime_check(c, p),
            Task::Modulus(c, n) => checks::run_modulus_check(c, n),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes_and_is_deterministic() {
        let opts = SuiteOptions::default();
        let catalog = default_catalog();
        let a = run_suite(&catalog, &opts).unwrap();
        let failures: Vec<&CheckReport> = a.iter().filter(|r| r.verdict == Verdict::Fail).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        let b = run_suite(&catalog, &opts).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn rejects_bad_subjects() {
        let mut opts = SuiteOptions { checks: vec![resolve_check("thm4.2").unwrap()], ..Default::default() };
        opts.primes = vec![9];
        assert_eq!(run_suite(&[], &opts), Err(SuiteError::BadPrime(9)));
        let bad = CatalogEntry { label: "bad".into(), group: "sym:9".into(), subgroup: "".into(), expected: Default::default() };
        let opts = SuiteOptions { checks: vec![resolve_check("prop3.3").unwrap()], ..Default::default() };
        assert!(matches!(run_suite(&[bad], &opts), Err(SuiteError::Entry { .. })));
    }
}
