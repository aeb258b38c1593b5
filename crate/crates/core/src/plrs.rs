//! Positive linear recurrence sequences: condition checking, generation, the
//! order-2 candidate induced by an odd stride, and the interval bijection
//! audit.
//!
//! A sequence H(1), H(2), … is described by coefficients c₁…c_L with
//! c₁, c_L > 0. Terms obey H(n) = c₁·H(n−1) + … + c_L·H(n−L) for n > L,
//! seeded by H(1) = 1 and H(n) = c₁·H(n−1) + … + c_{n−1}·H(1) + 1 for
//! 2 ≤ n ≤ L.

use crate::decomp::greedy_digits;
use crate::sequences::{gap_element, lucas, GapSpec};
use crate::{Error, Natural, Result};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Coefficients c₁…c_L of a positive linear recurrence. L ≥ 1 and the first
/// and last coefficients are positive; the rest may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlrsSpec {
    coefficients: Vec<Natural>,
}

impl PlrsSpec {
    pub fn new(coefficients: Vec<Natural>) -> Result<Self> {
        let first_ok = coefficients.first().is_some_and(|c| !c.is_zero());
        let last_ok = coefficients.last().is_some_and(|c| !c.is_zero());
        if !first_ok || !last_ok {
            return Err(Error::InvalidPlrsSpec);
        }
        Ok(PlrsSpec { coefficients })
    }

    pub fn from_u64(coefficients: &[u64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| Natural::from(c)).collect())
    }

    /// The recurrence order L.
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Natural] {
        &self.coefficients
    }
}

impl fmt::Display for PlrsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A generated prefix H(1..=count) of a PLRS.
#[derive(Debug, Clone)]
pub struct PlrsSequence {
    spec: PlrsSpec,
    terms: Vec<Natural>,
}

impl PlrsSequence {
    pub fn spec(&self) -> &PlrsSpec {
        &self.spec
    }

    /// Terms H(1), H(2), …; `terms()[i]` is H(i+1).
    pub fn terms(&self) -> &[Natural] {
        &self.terms
    }
}

/// Builds H(1..=count) exactly by the seed rule and then the recurrence.
pub fn generate_plrs(spec: &PlrsSpec, count: usize) -> PlrsSequence {
    assert!(count >= 1);
    let coeffs = spec.coefficients();
    let order = spec.order();
    let mut terms: Vec<Natural> = Vec::with_capacity(count);
    terms.push(Natural::one());
    for n in 2..=count {
        let reach = if n <= order { n - 1 } else { order };
        let mut term = Natural::zero();
        for i in 1..=reach {
            term += &coeffs[i - 1] * &terms[n - 1 - i];
        }
        if n <= order {
            term += Natural::one();
        }
        terms.push(term);
    }
    PlrsSequence {
        spec: spec.clone(),
        terms,
    }
}

/// Which PLRS condition a candidate sequence violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlrsCondition {
    /// H(1) must equal 1.
    #[serde(rename = "first-term")]
    FirstTerm,
    /// The seed rule for 2 ≤ n ≤ L.
    #[serde(rename = "seed-rule")]
    SeedRule,
    /// The full recurrence for n > L.
    #[serde(rename = "recurrence")]
    Recurrence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlrsViolation {
    pub condition: PlrsCondition,
    /// 1-based term index n at which the condition first fails.
    pub index: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for PlrsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.condition {
            PlrsCondition::FirstTerm => "first term",
            PlrsCondition::SeedRule => "seed rule",
            PlrsCondition::Recurrence => "recurrence",
        };
        write!(
            f,
            "{} fails at n={}: expected {}, found {}",
            what, self.index, self.expected, self.found
        )
    }
}

/// Verdict of matching candidate terms against a spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlrsMatch {
    pub matched: bool,
    pub violation: Option<PlrsViolation>,
}

/// True iff `candidate` (read as H(1), H(2), …) satisfies the spec's seed
/// rule below the order and its recurrence above it, for every index the
/// slice supports. Needs at least L + 2 terms. The diagnostic names the
/// first violated condition.
pub fn is_plrs_match(candidate: &[Natural], spec: &PlrsSpec) -> Result<PlrsMatch> {
    let order = spec.order();
    if candidate.len() < order + 2 {
        return Err(Error::NotEnoughTerms {
            needed: order + 2,
            got: candidate.len(),
        });
    }
    let coeffs = spec.coefficients();
    let fail = |condition, index, expected: Natural, found: &Natural| {
        Ok(PlrsMatch {
            matched: false,
            violation: Some(PlrsViolation {
                condition,
                index,
                expected: expected.to_string(),
                found: found.to_string(),
            }),
        })
    };

    if !candidate[0].is_one() {
        return fail(PlrsCondition::FirstTerm, 1, Natural::one(), &candidate[0]);
    }
    for n in 2..=candidate.len() {
        let reach = if n <= order { n - 1 } else { order };
        let mut expected = Natural::zero();
        for i in 1..=reach {
            expected += &coeffs[i - 1] * &candidate[n - 1 - i];
        }
        let condition = if n <= order {
            expected += Natural::one();
            PlrsCondition::SeedRule
        } else {
            PlrsCondition::Recurrence
        };
        if candidate[n - 1] != expected {
            return fail(condition, n, expected, &candidate[n - 1]);
        }
    }
    Ok(PlrsMatch {
        matched: true,
        violation: None,
    })
}

/// Per-offset verdict on whether a gap subsequence satisfies the PLRS
/// conditions for the stride's order-2 candidate spec.
#[derive(Debug, Clone, Serialize)]
pub struct OffsetMatch {
    pub offset: u64,
    pub matched: bool,
    pub diagnostic: Option<String>,
}

/// The order-2 candidate induced by an odd stride, with computed per-offset
/// verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct GapPlrsCandidate {
    pub step: u64,
    /// Candidate coefficients (L(step), 1) as decimal strings.
    pub coefficients: Vec<String>,
    pub offsets: Vec<OffsetMatch>,
}

impl GapPlrsCandidate {
    pub fn spec(&self) -> PlrsSpec {
        PlrsSpec::new(
            self.coefficients
                .iter()
                .map(|c| c.parse().expect("coefficients are decimal"))
                .collect(),
        )
        .expect("candidate coefficients are valid")
    }

    pub fn matching_offsets(&self) -> Vec<u64> {
        self.offsets
            .iter()
            .filter(|o| o.matched)
            .map(|o| o.offset)
            .collect()
    }
}

/// How many leading subsequence terms each offset verdict inspects.
const CANDIDATE_TERMS: u64 = 8;

/// For an odd stride d ≥ 3, returns the order-2 spec (c₁ = L(d), c₂ = 1) —
/// the positive form of the stride recurrence — together with the offsets
/// whose subsequence actually satisfies the PLRS seed rule and recurrence on
/// its first 8 terms. The verdicts are computed, never presumed: some odd
/// strides admit no matching offset at all.
///
/// Even strides are rejected: their trailing recurrence coefficient is −1,
/// which no positive linear recurrence can express.
pub fn gap_plrs_candidate(step: u64) -> Result<GapPlrsCandidate> {
    if step.is_multiple_of(2) {
        return Err(Error::EvenStride(step));
    }
    if step < 3 {
        return Err(Error::StrideNotOdd(step));
    }
    let spec = PlrsSpec::new(vec![lucas(step), Natural::one()]).expect("L(d) and 1 are positive");
    let mut offsets = Vec::new();
    for offset in 0..step {
        let gap = GapSpec::new(step, offset)?;
        let k_start = if offset == 0 { 1 } else { 0 };
        let terms: Vec<Natural> = (k_start..k_start + CANDIDATE_TERMS)
            .map(|k| gap_element(&gap, k).expect("k range avoids the zero element"))
            .collect();
        let verdict = is_plrs_match(&terms, &spec)?;
        offsets.push(OffsetMatch {
            offset,
            matched: verdict.matched,
            diagnostic: verdict.violation.map(|v| v.to_string()),
        });
    }
    Ok(GapPlrsCandidate {
        step,
        coefficients: spec.coefficients().iter().map(|c| c.to_string()).collect(),
        offsets,
    })
}

/// Audit of the interval [H(j), H(j+1)) against greedy digit strings.
#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub j: usize,
    /// H(j+1) − H(j), as a decimal string.
    pub interval_size: String,
    /// Number of distinct greedy digit strings realized on the interval.
    pub legal_count: String,
    pub matched: bool,
}

/// For each j in [1, j_max], enumerates every integer in [H(j), H(j+1)),
/// computes its greedy digit string over the terms H(1..=j), and checks that
/// the strings are pairwise distinct and exactly as many as the interval
/// holds. Enumeration is exhaustive; keep H(j_max + 1) at desk scale.
pub fn bijection_audit(spec: &PlrsSpec, j_max: usize) -> Vec<BijectionReport> {
    assert!(j_max >= 1);
    let terms = generate_plrs(spec, j_max + 1).terms.to_vec();
    let mut reports = Vec::with_capacity(j_max);
    for j in 1..=j_max {
        let lower = &terms[j - 1];
        let upper = &terms[j];
        let interval_size = upper - lower;
        let base = &terms[..j];
        let mut strings: BTreeSet<Vec<Natural>> = BTreeSet::new();
        let mut all_greedy_ok = true;
        let mut n = lower.clone();
        while n < *upper {
            match greedy_digits(&n, base) {
                Ok(digits) => {
                    strings.insert(digits);
                }
                Err(_) => all_greedy_ok = false,
            }
            n += Natural::one();
        }
        let legal_count = Natural::from(strings.len());
        let matched = all_greedy_ok && legal_count == interval_size;
        reports.push(BijectionReport {
            j,
            interval_size: interval_size.to_string(),
            legal_count: legal_count.to_string(),
            matched,
        });
    }
    reports
}
