//! Brute-force representation enumeration over finite base prefixes.
//!
//! This is the audit side of the crate: exact counts of digit strings
//! representing each N under a digit bound and a legality predicate, used to
//! confirm or refute existence, uniqueness, and digit-bound claims at desk
//! scale. Findings are data; nothing here asserts a claim.

use crate::decomp::{
    classic_rule_violation, even_rule_violation, greedy_digits, validate_digit_vector,
    DecompScheme,
};
use crate::{Error, Natural, Result};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Which legality filter representation counting applies. The digit bound is
/// always enforced by the enumeration itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LegalityPredicate {
    /// No filter beyond the digit bound.
    #[serde(rename = "none")]
    None,
    /// Digits in {0, 1}, no two adjacent nonzero digits.
    #[serde(rename = "classic-rule")]
    ClassicRule,
    /// Digits in {0, 1, 2}, a 0 between any two 2s.
    #[serde(rename = "even-rule")]
    EvenRule,
    /// Only the (explicitly supplied) digit bound.
    #[serde(rename = "bound-only")]
    BoundOnly,
}

impl fmt::Display for LegalityPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            LegalityPredicate::None => "none",
            LegalityPredicate::ClassicRule => "classic-rule",
            LegalityPredicate::EvenRule => "even-rule",
            LegalityPredicate::BoundOnly => "bound-only",
        };
        f.write_str(tag)
    }
}

fn vector_satisfies(legality: LegalityPredicate, digits: &[Natural]) -> bool {
    match legality {
        LegalityPredicate::ClassicRule => classic_rule_violation(digits).is_none(),
        LegalityPredicate::EvenRule => even_rule_violation(digits).is_none(),
        LegalityPredicate::None | LegalityPredicate::BoundOnly => true,
    }
}

struct Search<'a> {
    base: &'a [Natural],
    bound: &'a Natural,
    legality: LegalityPredicate,
}

impl Search<'_> {
    /// Counts assignments for `base[..open]` with `remainder` left to cover.
    /// Scans most-significant-first; the digit at each position is capped at
    /// remainder / element (remainder pruning) and at the bound. Legality is
    /// enforced incrementally through (prev_nonzero, two_pending).
    fn count(&self, open: usize, remainder: &Natural, prev_nonzero: bool, two_pending: bool) -> u64 {
        if open == 0 {
            return u64::from(remainder.is_zero());
        }
        let element = &self.base[open - 1];
        let one = Natural::one();
        let two = Natural::from(2u32);
        let cap = remainder / element;
        let cap = if cap < *self.bound { cap } else { self.bound.clone() };
        let mut total = 0;
        let mut digit = Natural::zero();
        let mut rest = remainder.clone();
        loop {
            let admissible = match self.legality {
                LegalityPredicate::ClassicRule => {
                    digit <= one && !(digit.is_one() && prev_nonzero)
                }
                LegalityPredicate::EvenRule => digit <= two && !(digit == two && two_pending),
                LegalityPredicate::None | LegalityPredicate::BoundOnly => true,
            };
            if admissible {
                let pending = if digit == two {
                    true
                } else if digit.is_zero() {
                    false
                } else {
                    two_pending
                };
                total += self.count(open - 1, &rest, !digit.is_zero(), pending);
            }
            if digit == cap {
                break;
            }
            digit += 1u32;
            rest -= element;
        }
        total
    }
}

fn representable_prefix<'a>(n: &Natural, base: &'a [Natural]) -> &'a [Natural] {
    let len = base.partition_point(|e| e <= n);
    &base[..len]
}

/// Exact number of digit vectors b with Σ b(i)·base[i] = n, 0 ≤ b(i) ≤
/// digit_bound, satisfying the legality predicate. `base` must be strictly
/// increasing; elements above n contribute only the digit 0 and are skipped.
pub fn count_representations(
    n: &Natural,
    base: &[Natural],
    digit_bound: &Natural,
    legality: LegalityPredicate,
) -> u64 {
    let prefix = representable_prefix(n, base);
    let search = Search {
        base: prefix,
        bound: digit_bound,
        legality,
    };
    search.count(prefix.len(), n, false, false)
}

/// Reference count without remainder pruning: every digit vector with digits
/// in [0, digit_bound] over the base prefix is generated in full and then
/// filtered by its sum and a whole-vector legality scan. Exponential in the
/// prefix length; use it only to cross-check [`count_representations`] on
/// small inputs.
pub fn count_representations_unpruned(
    n: &Natural,
    base: &[Natural],
    digit_bound: &Natural,
    legality: LegalityPredicate,
) -> u64 {
    let prefix = representable_prefix(n, base);
    let mut digits: Vec<Natural> = vec![Natural::zero(); prefix.len()];
    fn recurse(
        prefix: &[Natural],
        bound: &Natural,
        legality: LegalityPredicate,
        target: &Natural,
        pos: usize,
        digits: &mut Vec<Natural>,
        sum: &Natural,
    ) -> u64 {
        if pos == prefix.len() {
            let hit = sum == target && vector_satisfies(legality, digits);
            return u64::from(hit);
        }
        let mut total = 0;
        let mut digit = Natural::zero();
        loop {
            digits[pos] = digit.clone();
            let sum_here = sum + &digit * &prefix[pos];
            total += recurse(prefix, bound, legality, target, pos + 1, digits, &sum_here);
            if digit == *bound {
                break;
            }
            digit += 1u32;
        }
        digits[pos] = Natural::zero();
        total
    }
    recurse(
        prefix,
        digit_bound,
        legality,
        n,
        0,
        &mut digits,
        &Natural::zero(),
    )
}

/// What to audit: a scheme, a range, a digit bound, and a predicate.
#[derive(Debug, Clone)]
pub struct AuditConfig {
    pub scheme: DecompScheme,
    pub n_max: u64,
    /// Explicit digit bound; defaults to the scheme's bound when absent.
    /// Required when `legality` is `BoundOnly`.
    pub digit_bound: Option<Natural>,
    pub legality: LegalityPredicate,
}

impl AuditConfig {
    /// The conventional audit for a scheme: classic-rule/1, even-rule/2, or
    /// bound-only/L(step).
    pub fn for_scheme(scheme: DecompScheme, n_max: u64) -> Self {
        let legality = match scheme {
            DecompScheme::Classic => LegalityPredicate::ClassicRule,
            DecompScheme::Even => LegalityPredicate::EvenRule,
            DecompScheme::Gap(_) => LegalityPredicate::BoundOnly,
        };
        AuditConfig {
            digit_bound: Some(scheme.default_digit_bound()),
            scheme,
            n_max,
            legality,
        }
    }

    pub fn effective_bound(&self) -> Result<Natural> {
        match (&self.digit_bound, self.legality) {
            (Some(bound), _) => Ok(bound.clone()),
            (None, LegalityPredicate::BoundOnly) => Err(Error::MissingDigitBound),
            (None, _) => Ok(self.scheme.default_digit_bound()),
        }
    }
}

/// Per-N audit row. Greedy fields are absent when the greedy scan leaves an
/// unrepresentable residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub n: u64,
    pub count: u64,
    /// Greedy digits, descending from the highest base position, space
    /// separated.
    pub greedy_digits: Option<String>,
    pub greedy_max_digit: Option<Natural>,
    /// Verdict of the scheme's rules on the greedy output.
    pub legal: Option<bool>,
}

/// Everything an audit found over [1, n_max].
#[derive(Debug, Clone)]
pub struct AuditResult {
    pub config: AuditConfig,
    /// Effective digit bound the enumeration used.
    pub digit_bound: Natural,
    pub rows: Vec<AuditRow>,
    pub zero_count_examples: Vec<u64>,
    pub multi_count_examples: Vec<(u64, u64)>,
    /// Largest greedy digit seen and the first N attaining it.
    pub max_greedy_digit: Option<(Natural, u64)>,
    pub verdict_summary: String,
}

impl AuditResult {
    /// True when every N in range has exactly one representation.
    pub fn all_unique(&self) -> bool {
        self.rows.iter().all(|row| row.count == 1)
    }

    /// CSV with header `N,count,greedy_digits,greedy_max_digit,legal`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,count,greedy_digits,greedy_max_digit,legal\n");
        for row in &self.rows {
            let digits = row.greedy_digits.as_deref().unwrap_or("");
            let max_digit = row
                .greedy_max_digit
                .as_ref()
                .map(|d| d.to_string())
                .unwrap_or_default();
            let legal = row.legal.map(|l| l.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.n, row.count, digits, max_digit, legal
            ));
        }
        out
    }

    /// JSON summary: configuration echo, zero/multi example lists, max
    /// greedy digit, and the verdict text. Per-N rows live in the CSV.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "scheme": self.config.scheme.to_json(),
            "n_max": self.config.n_max,
            "digit_bound": self.digit_bound.to_string(),
            "legality": self.config.legality.to_string(),
            "checked": self.rows.len(),
            "unique": self.rows.iter().filter(|r| r.count == 1).count(),
            "zero_count_examples": self.zero_count_examples,
            "multi_count_examples": self
                .multi_count_examples
                .iter()
                .map(|(n, c)| serde_json::json!({"n": n, "count": c}))
                .collect::<Vec<_>>(),
            "max_greedy_digit": self.max_greedy_digit.as_ref().map(|(d, w)| {
                serde_json::json!({"digit": d.to_string(), "witness": w})
            }),
            "verdict_summary": self.verdict_summary,
        })
    }
}

fn audit_rows(
    config: &AuditConfig,
    bound: &Natural,
    base: &[Natural],
    lo: u64,
    hi: u64,
) -> Vec<AuditRow> {
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let value = Natural::from(n);
        let count = count_representations(&value, base, bound, config.legality);
        let prefix = representable_prefix(&value, base);
        let row = match greedy_digits(&value, prefix) {
            Ok(digits) => {
                let rendered: Vec<String> =
                    digits.iter().rev().map(|d| d.to_string()).collect();
                let verdict = validate_digit_vector(&config.scheme, &digits, Some(bound));
                AuditRow {
                    n,
                    count,
                    greedy_max_digit: digits.iter().max().cloned(),
                    greedy_digits: Some(rendered.join(" ")),
                    legal: Some(verdict.legal),
                }
            }
            Err(_) => AuditRow {
                n,
                count,
                greedy_digits: None,
                greedy_max_digit: None,
                legal: None,
            },
        };
        rows.push(row);
    }
    rows
}

/// Runs [`count_representations`] for every N in [1, n_max] under the
/// config's bound and predicate, recording greedy digits alongside. Findings
/// (zero counts, multiple counts, the largest greedy digit) are reported as
/// data, never as assertions.
pub fn audit_uniqueness(config: &AuditConfig) -> Result<AuditResult> {
    audit_uniqueness_jobs(config, 1)
}

/// [`audit_uniqueness`] with the range partitioned across `jobs` workers.
/// Per-N rows are merged in N order, so the result is identical for every
/// job count.
pub fn audit_uniqueness_jobs(config: &AuditConfig, jobs: usize) -> Result<AuditResult> {
    assert!(config.n_max >= 1);
    let bound = config.effective_bound()?;
    let limit = Natural::from(config.n_max);
    let base: Vec<Natural> = config
        .scheme
        .base_prefix(&limit)
        .into_iter()
        .map(|(_, value)| value)
        .collect();

    let jobs = jobs.clamp(1, config.n_max as usize);
    let rows = if jobs == 1 {
        audit_rows(config, &bound, &base, 1, config.n_max)
    } else {
        let chunk = config.n_max.div_ceil(jobs as u64);
        let mut bounds = Vec::new();
        let mut lo = 1u64;
        while lo <= config.n_max {
            let hi = (lo + chunk - 1).min(config.n_max);
            bounds.push((lo, hi));
            lo = hi + 1;
        }
        let (bound_ref, base_ref) = (&bound, &base);
        std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(lo, hi)| {
                    scope.spawn(move || audit_rows(config, bound_ref, base_ref, lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("audit worker panicked"))
                .collect()
        })
    };

    let zero_count_examples: Vec<u64> = rows
        .iter()
        .filter(|r| r.count == 0)
        .map(|r| r.n)
        .collect();
    let multi_count_examples: Vec<(u64, u64)> = rows
        .iter()
        .filter(|r| r.count >= 2)
        .map(|r| (r.n, r.count))
        .collect();
    let mut max_greedy_digit: Option<(Natural, u64)> = None;
    for row in &rows {
        if let Some(digit) = &row.greedy_max_digit {
            let superior = match &max_greedy_digit {
                Some((best, _)) => digit > best,
                None => true,
            };
            if superior {
                max_greedy_digit = Some((digit.clone(), row.n));
            }
        }
    }

    let mut parts = Vec::new();
    if zero_count_examples.is_empty() && multi_count_examples.is_empty() {
        parts.push(format!(
            "every N in [1, {}] has exactly one legal representation",
            config.n_max
        ));
    } else {
        if !zero_count_examples.is_empty() {
            parts.push(format!(
                "{} values have no representation (first: {})",
                zero_count_examples.len(),
                zero_count_examples[0]
            ));
        }
        if !multi_count_examples.is_empty() {
            parts.push(format!(
                "{} values have multiple representations (first: {} with {})",
                multi_count_examples.len(),
                multi_count_examples[0].0,
                multi_count_examples[0].1
            ));
        }
    }
    if let Some((digit, witness)) = &max_greedy_digit {
        parts.push(format!(
            "max greedy digit {digit} first attained at N = {witness}"
        ));
    }

    Ok(AuditResult {
        config: config.clone(),
        digit_bound: bound,
        rows,
        zero_count_examples,
        multi_count_examples,
        max_greedy_digit,
        verdict_summary: parts.join("; "),
    })
}

/// Result of scanning greedy digits for their maximum over [1, n_max].
#[derive(Debug, Clone, Serialize)]
pub struct DigitBoundAudit {
    pub scheme: String,
    pub n_max: u64,
    /// Largest greedy digit seen, as a decimal string.
    pub max_digit: String,
    /// First N attaining the maximum; absent when no N was representable.
    pub witness: Option<u64>,
    /// The scheme's claimed bound (1, 2, or L(step)), as a decimal string.
    pub reference_bound: String,
    pub within_bound: bool,
    pub summary: String,
}

/// Maximum greedy digit over N in [1, n_max] with the first witness
/// attaining it, compared against the scheme's claimed bound.
pub fn audit_digit_bound(scheme: &DecompScheme, n_max: u64) -> DigitBoundAudit {
    assert!(n_max >= 1);
    let limit = Natural::from(n_max);
    let base: Vec<Natural> = scheme
        .base_prefix(&limit)
        .into_iter()
        .map(|(_, value)| value)
        .collect();
    let mut best: Option<(Natural, u64)> = None;
    for n in 1..=n_max {
        let value = Natural::from(n);
        let prefix = representable_prefix(&value, &base);
        if let Ok(digits) = greedy_digits(&value, prefix) {
            if let Some(max) = digits.iter().max() {
                let superior = best.as_ref().is_none_or(|(b, _)| max > b);
                if superior {
                    best = Some((max.clone(), n));
                }
            }
        }
    }
    let reference = scheme.default_digit_bound();
    let (max_digit, witness) = match best {
        Some((digit, n)) => (digit, Some(n)),
        None => (Natural::zero(), None),
    };
    let within_bound = max_digit <= reference;
    let summary = match witness {
        Some(w) => format!(
            "max greedy digit {max_digit} first attained at N = {w}; reference bound {reference}: {}",
            if within_bound { "within" } else { "exceeded" }
        ),
        None => format!("no N in [1, {n_max}] is representable"),
    };
    DigitBoundAudit {
        scheme: scheme.to_string(),
        n_max,
        max_digit: max_digit.to_string(),
        witness,
        reference_bound: reference.to_string(),
        within_bound,
        summary,
    }
}
