//! Computational verification of subsequence recurrence identities over
//! parameter ranges.
//!
//! Every check evaluates both sides exactly and reports counterexamples with
//! the evaluated values, so a report can be re-checked independently. Checks
//! report; they never presume an identity true.

use crate::sequences::{fib_terms, gibonacci_terms, lucas, GapSpec, GibonacciSpec};
use crate::{BigInt, Natural};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Tags for the identities this crate can check. The serialized names match
/// the CLI `verify` subcommand names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentityName {
    #[serde(rename = "2gap")]
    TwoGap,
    #[serde(rename = "samples")]
    SampleRecurrences,
    #[serde(rename = "gap")]
    GapRecurrence,
    #[serde(rename = "gibonacci")]
    GibonacciCombination,
    #[serde(rename = "gap-gibonacci")]
    GapGibonacciRecurrence,
    #[serde(rename = "seed")]
    PlrsSeed,
    #[serde(rename = "gf")]
    Multisection,
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            IdentityName::TwoGap => "2gap",
            IdentityName::SampleRecurrences => "samples",
            IdentityName::GapRecurrence => "gap",
            IdentityName::GibonacciCombination => "gibonacci",
            IdentityName::GapGibonacciRecurrence => "gap-gibonacci",
            IdentityName::PlrsSeed => "seed",
            IdentityName::Multisection => "gf",
        };
        f.write_str(tag)
    }
}

/// One counterexample: the parameter tuple and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over a parameter range.
/// `passed` is true exactly when `failures` is empty.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityName,
    pub range: String,
    pub failures: Vec<IdentityFailure>,
    pub passed: bool,
}

impl IdentityReport {
    pub(crate) fn from_failures(
        identity: IdentityName,
        range: String,
        failures: Vec<IdentityFailure>,
    ) -> Self {
        let passed = failures.is_empty();
        IdentityReport {
            identity,
            range,
            failures,
            passed,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization is infallible")
    }

    /// Merges several reports of the same identity into one (used for
    /// randomized parameter sweeps). Failures keep their order.
    pub fn merge(identity: IdentityName, range: String, reports: Vec<IdentityReport>) -> Self {
        let failures = reports.into_iter().flat_map(|r| r.failures).collect();
        Self::from_failures(identity, range, failures)
    }
}

fn params<const N: usize>(entries: [(&str, String); N]) -> BTreeMap<String, String> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// F(0..=max) as a table, built by the plain iterative recurrence.
fn fib_table(max_index: u64) -> Vec<Natural> {
    fib_terms().take(max_index as usize + 1).collect()
}

/// The trailing coefficient of the stride-`step` recurrence: (−1)^(step−1),
/// so +1 for odd strides and −1 for even strides.
pub fn trailing_sign(step: u64) -> i8 {
    if step % 2 == 1 {
        1
    } else {
        -1
    }
}

fn signed(n: &Natural) -> BigInt {
    BigInt::from(n.clone())
}

/// Verifies F(3k+2) = 4·F(3(k−1)+2) + F(3(k−2)+2) for k in [2, k_max].
pub fn check_two_gap(k_max: u64) -> IdentityReport {
    assert!(k_max >= 2);
    let table = fib_table(3 * k_max + 2);
    let mut failures = Vec::new();
    for k in 2..=k_max {
        let lhs = &table[(3 * k + 2) as usize];
        let rhs = 4u32 * &table[(3 * (k - 1) + 2) as usize] + &table[(3 * (k - 2) + 2) as usize];
        if *lhs != rhs {
            failures.push(IdentityFailure {
                params: params([("k", k.to_string())]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    IdentityReport::from_failures(IdentityName::TwoGap, format!("k in [2, {k_max}]"), failures)
}

/// Verifies the four offset-2 sample recurrences
/// F(dk+2) = L(d)·F(d(k−1)+2) + (−1)^(d−1)·F(d(k−2)+2) for d in 4..=7
/// (coefficients 7, 11, 18, 29 with signs −, +, −, +) and k in [2, k_max].
pub fn check_sample_recurrences(k_max: u64) -> IdentityReport {
    assert!(k_max >= 2);
    let table = fib_table(7 * k_max + 2);
    let mut failures = Vec::new();
    for step in 4..=7u64 {
        let coeff = signed(&lucas(step));
        let sign = BigInt::from(trailing_sign(step));
        for k in 2..=k_max {
            let lhs = signed(&table[(step * k + 2) as usize]);
            let rhs = &coeff * signed(&table[(step * (k - 1) + 2) as usize])
                + &sign * signed(&table[(step * (k - 2) + 2) as usize]);
            if lhs != rhs {
                failures.push(IdentityFailure {
                    params: params([("d", step.to_string()), ("k", k.to_string())]),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    IdentityReport::from_failures(
        IdentityName::SampleRecurrences,
        format!("d in [4, 7], k in [2, {k_max}]"),
        failures,
    )
}

/// Verifies F(dk+m) = L(d)·F(d(k−1)+m) + (−1)^(d−1)·F(d(k−2)+m) for
/// k in [2, k_max], where d and m come from `spec`.
pub fn check_gap_recurrence(spec: &GapSpec, k_max: u64) -> IdentityReport {
    assert!(k_max >= 2);
    let (d, m) = (spec.step(), spec.offset());
    let table = fib_table(d * k_max + m);
    let coeff = signed(&lucas(d));
    let sign = BigInt::from(trailing_sign(d));
    let mut failures = Vec::new();
    for k in 2..=k_max {
        let lhs = signed(&table[(d * k + m) as usize]);
        let rhs = &coeff * signed(&table[(d * (k - 1) + m) as usize])
            + &sign * signed(&table[(d * (k - 2) + m) as usize]);
        if lhs != rhs {
            failures.push(IdentityFailure {
                params: params([
                    ("d", d.to_string()),
                    ("m", m.to_string()),
                    ("k", k.to_string()),
                ]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    IdentityReport::from_failures(
        IdentityName::GapRecurrence,
        format!("d={d}, m={m}, k in [2, {k_max}]"),
        failures,
    )
}

/// Verifies G(n) = F(n−2)·G(1) + F(n−1)·G(2) for n in [3, n_max].
pub fn check_gibonacci_combination(spec: &GibonacciSpec, n_max: u64) -> IdentityReport {
    assert!(n_max >= 3);
    let fibs = fib_table(n_max - 1);
    let gibs: Vec<Natural> = gibonacci_terms(spec).take(n_max as usize).collect();
    let mut failures = Vec::new();
    for n in 3..=n_max {
        let lhs = &gibs[n as usize - 1];
        let rhs = &fibs[(n - 2) as usize] * spec.g1() + &fibs[(n - 1) as usize] * spec.g2();
        if *lhs != rhs {
            failures.push(IdentityFailure {
                params: params([
                    ("g1", spec.g1().to_string()),
                    ("g2", spec.g2().to_string()),
                    ("n", n.to_string()),
                ]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    IdentityReport::from_failures(
        IdentityName::GibonacciCombination,
        format!("g1={}, g2={}, n in [3, {n_max}]", spec.g1(), spec.g2()),
        failures,
    )
}

/// Verifies G(dk+m) = L(d)·G(d(k−1)+m) + (−1)^(d−1)·G(d(k−2)+m) for
/// k in [2, k_max]. Gibonacci terms are 1-based, so for offset 0 the check
/// starts at k = 3 (k = 2 would reference the undefined G(0)).
pub fn check_gap_gibonacci_recurrence(
    gib: &GibonacciSpec,
    gap: &GapSpec,
    k_max: u64,
) -> IdentityReport {
    assert!(k_max >= 2);
    let (d, m) = (gap.step(), gap.offset());
    let k_start = if m == 0 { 3 } else { 2 };
    let terms: Vec<Natural> = gibonacci_terms(gib).take((d * k_max + m) as usize).collect();
    let term = |index: u64| signed(&terms[index as usize - 1]); // G(index), 1-based
    let coeff = signed(&lucas(d));
    let sign = BigInt::from(trailing_sign(d));
    let mut failures = Vec::new();
    for k in k_start..=k_max {
        let lhs = term(d * k + m);
        let rhs = &coeff * term(d * (k - 1) + m) + &sign * term(d * (k - 2) + m);
        if lhs != rhs {
            failures.push(IdentityFailure {
                params: params([
                    ("g1", gib.g1().to_string()),
                    ("g2", gib.g2().to_string()),
                    ("d", d.to_string()),
                    ("m", m.to_string()),
                    ("k", k.to_string()),
                ]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    IdentityReport::from_failures(
        IdentityName::GapGibonacciRecurrence,
        format!(
            "g1={}, g2={}, d={d}, m={m}, k in [{k_start}, {k_max}]",
            gib.g1(),
            gib.g2()
        ),
        failures,
    )
}

/// Evaluates both sides of the claimed seed identity
/// F(2n+1) = L(n)·F(n+1) + 2 for odd n in [3, n_max] and reports every n
/// where it fails, together with the signed discrepancy lhs − rhs.
///
/// The claim fails as written (first at n = 3: 13 vs 14), so the failure
/// list is the expected output; this checker reports, it does not presume.
pub fn check_plrs_seed_identity(n_max: u64) -> IdentityReport {
    assert!(n_max >= 3);
    let table = fib_table(2 * n_max + 1);
    let mut failures = Vec::new();
    for n in (3..=n_max).step_by(2) {
        let lhs = signed(&table[(2 * n + 1) as usize]);
        let rhs = signed(&lucas(n)) * signed(&table[(n + 1) as usize]) + 2;
        if lhs != rhs {
            let discrepancy = &lhs - &rhs;
            failures.push(IdentityFailure {
                params: params([
                    ("n", n.to_string()),
                    ("discrepancy", discrepancy.to_string()),
                ]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    IdentityReport::from_failures(
        IdentityName::PlrsSeed,
        format!("odd n in [3, {n_max}]"),
        failures,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fib;

    #[test]
    fn two_gap_worked_values() {
        // F(8) = 21 = 4·5 + 1 and F(11) = 89 = 4·21 + 5.
        assert_eq!(fib(8), 4u32 * fib(5) + fib(2));
        assert_eq!(fib(11), 4u32 * fib(8) + fib(5));
        assert!(check_two_gap(2).passed);
        assert!(check_two_gap(3).passed);
        assert!(check_two_gap(100).passed);
    }

    #[test]
    fn sample_recurrences_worked_values() {
        // F(10) = 55 = 7·F(6) − F(2) and F(12) = 144 = 11·F(7) + F(2).
        assert_eq!(fib(10), 7u32 * fib(6) - fib(2));
        assert_eq!(fib(12), 11u32 * fib(7) + fib(2));
        assert!(check_sample_recurrences(60).passed);
    }

    #[test]
    fn gap_recurrence_small_cases() {
        let spec = GapSpec::new(3, 2).unwrap();
        assert!(check_gap_recurrence(&spec, 2).passed); // 21 = 4·5 + 1
        let spec = GapSpec::new(4, 2).unwrap();
        assert!(check_gap_recurrence(&spec, 2).passed); // F(10) = 7·F(6) − F(2)
    }

    #[test]
    fn gap_recurrence_full_sweep() {
        for d in 2..=12 {
            for m in 0..d {
                let spec = GapSpec::new(d, m).unwrap();
                let report = check_gap_recurrence(&spec, 100);
                assert!(report.passed, "failed at d={d}, m={m}: {report:?}");
            }
        }
    }

    #[test]
    fn gibonacci_combination_examples() {
        let spec = GibonacciSpec::new(Natural::from(1u32), Natural::from(3u32)).unwrap();
        assert!(check_gibonacci_combination(&spec, 3).passed); // 4 = 1·1 + 1·3
        let fib_seeds = GibonacciSpec::fibonacci();
        assert!(check_gibonacci_combination(&fib_seeds, 10).passed); // 55 = 21 + 34
    }

    #[test]
    fn gap_gibonacci_reduces_to_gap_for_fibonacci_seeds() {
        let fib_seeds = GibonacciSpec::fibonacci();
        for d in 2..=6 {
            for m in 0..d {
                let gap = GapSpec::new(d, m).unwrap();
                let general = check_gap_gibonacci_recurrence(&fib_seeds, &gap, 30);
                let plain = check_gap_recurrence(&gap, 30);
                assert_eq!(general.failures, plain.failures, "d={d}, m={m}");
                assert!(general.passed);
            }
        }
    }

    #[test]
    fn gap_gibonacci_random_style_case() {
        let gib = GibonacciSpec::new(Natural::from(2u32), Natural::from(1u32)).unwrap();
        let gap = GapSpec::new(3, 1).unwrap();
        assert!(check_gap_gibonacci_recurrence(&gib, &gap, 2).passed);
    }

    #[test]
    fn seed_identity_reports_documented_discrepancies() {
        let report = check_plrs_seed_identity(9);
        assert!(!report.passed);
        let first = &report.failures[0];
        assert_eq!(first.params["n"], "3");
        assert_eq!(first.lhs, "13");
        assert_eq!(first.rhs, "14");
        assert_eq!(first.params["discrepancy"], "-1");
        let second = &report.failures[1];
        assert_eq!(second.params["n"], "5");
        assert_eq!(second.lhs, "89");
        assert_eq!(second.rhs, "90");
    }

    #[test]
    fn trailing_sign_alternates() {
        for d in 2..=12u64 {
            assert_eq!(trailing_sign(d) == 1, d % 2 == 1);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = GapSpec::new(5, 3).unwrap();
        let a = check_gap_recurrence(&spec, 40);
        let b = check_gap_recurrence(&spec, 40);
        assert_eq!(a.to_json(), b.to_json());
    }
}
