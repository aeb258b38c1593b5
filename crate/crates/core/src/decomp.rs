//! Greedy digit decompositions over Fibonacci subsequence bases, with
//! per-scheme legality validators and plain-text rendering.

use crate::sequences::{fib_terms, lucas, GapSpec};
use crate::{Error, Natural, Result};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Which base the digits are read against.
///
/// - `Classic`: F(2), F(3), F(4), … — starts at 1 with distinct values;
///   F(1) is excluded so 1 has a single representation.
/// - `Even`: F(2), F(4), F(6), … — identical to the stride-2 offset-2 base.
/// - `Gap`: F(step·k + offset) for k = 0, 1, … (k = 1, … when offset = 0,
///   since F(0) = 0 never joins a base).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompScheme {
    Classic,
    Even,
    Gap(GapSpec),
}

impl DecompScheme {
    pub fn tag(&self) -> &'static str {
        match self {
            DecompScheme::Classic => "classic",
            DecompScheme::Even => "even",
            DecompScheme::Gap(_) => "gap",
        }
    }

    /// Fibonacci index of base position `p` (0-based, ascending value).
    pub fn fib_index(&self, p: u64) -> u64 {
        match self {
            DecompScheme::Classic => p + 2,
            DecompScheme::Even => 2 * p + 2,
            DecompScheme::Gap(spec) => {
                if spec.offset() == 0 {
                    spec.step() * (p + 1)
                } else {
                    spec.step() * p + spec.offset()
                }
            }
        }
    }

    /// Default digit bound used by the validator: 1 for classic, 2 for even,
    /// L(step) for gap schemes. The gap bound is a claim under audit, not an
    /// invariant; see [`crate::oracle::audit_digit_bound`].
    pub fn default_digit_bound(&self) -> Natural {
        match self {
            DecompScheme::Classic => Natural::one(),
            DecompScheme::Even => Natural::from(2u32),
            DecompScheme::Gap(spec) => lucas(spec.step()),
        }
    }

    /// Base elements with value ≤ `limit`, ascending, as (fib index, value).
    pub fn base_prefix(&self, limit: &Natural) -> Vec<(u64, Natural)> {
        let mut prefix = Vec::new();
        let mut position = 0u64;
        let mut next_index = self.fib_index(0);
        for (index, value) in fib_terms().enumerate() {
            let index = index as u64;
            if value > *limit {
                break;
            }
            if index == next_index {
                prefix.push((index, value));
                position += 1;
                next_index = self.fib_index(position);
            }
        }
        prefix
    }

    /// The smallest base element (position 0).
    pub fn least_element(&self) -> Natural {
        crate::sequences::fib(self.fib_index(0))
    }

    pub(crate) fn describe(&self) -> (&'static str, Option<u64>, Option<u64>) {
        match self {
            DecompScheme::Classic => ("classic", None, None),
            DecompScheme::Even => ("even", Some(2), Some(2)),
            DecompScheme::Gap(spec) => ("gap", Some(spec.step()), Some(spec.offset())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (tag, step, offset) = self.describe();
        serde_json::json!({ "tag": tag, "step": step, "offset": offset })
    }
}

impl fmt::Display for DecompScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompScheme::Classic => f.write_str("classic"),
            DecompScheme::Even => f.write_str("even"),
            DecompScheme::Gap(spec) => {
                write!(f, "gap(step={}, offset={})", spec.step(), spec.offset())
            }
        }
    }
}

/// One digit of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitEntry {
    /// Position in the base enumeration (0 = smallest element).
    pub position: u64,
    /// Fibonacci index of the base element at this position.
    pub fib_index: u64,
    /// Value of the base element.
    pub element: Natural,
    pub digit: Natural,
}

/// A digit string over a scheme's base. The digits reconstruct `value`
/// exactly, and the highest-position digit is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    scheme: DecompScheme,
    value: Natural,
    /// Dense, descending by position from the highest used position to 0.
    digits: Vec<DigitEntry>,
}

/// Rule tags a validator can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RuleTag {
    #[serde(rename = "adjacency")]
    Adjacency,
    #[serde(rename = "digit-range")]
    DigitRange,
    #[serde(rename = "two-twos-no-zero")]
    TwoTwosNoZero,
    #[serde(rename = "digit-bound")]
    DigitBound,
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            RuleTag::Adjacency => "adjacency",
            RuleTag::DigitRange => "digit-range",
            RuleTag::TwoTwosNoZero => "two-twos-no-zero",
            RuleTag::DigitBound => "digit-bound",
        };
        f.write_str(tag)
    }
}

/// Result of applying a scheme's digit rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LegalityVerdict {
    pub legal: bool,
    pub violated_rule: Option<RuleTag>,
}

impl LegalityVerdict {
    fn legal() -> Self {
        LegalityVerdict {
            legal: true,
            violated_rule: None,
        }
    }

    fn violation(rule: RuleTag) -> Self {
        LegalityVerdict {
            legal: false,
            violated_rule: Some(rule),
        }
    }
}

impl Decomposition {
    pub fn scheme(&self) -> &DecompScheme {
        &self.scheme
    }

    pub fn value(&self) -> &Natural {
        &self.value
    }

    /// Digit entries, descending by position (highest element first).
    pub fn digits(&self) -> &[DigitEntry] {
        &self.digits
    }

    /// Nonzero digits only, descending by position.
    pub fn nonzero_digits(&self) -> impl Iterator<Item = &DigitEntry> {
        self.digits.iter().filter(|e| !e.digit.is_zero())
    }

    /// Digits by ascending position (position 0 first).
    pub fn ascending_digits(&self) -> Vec<Natural> {
        self.digits.iter().rev().map(|e| e.digit.clone()).collect()
    }

    /// Σ digit·element, recomputed from the entries.
    pub fn reconstruct(&self) -> Natural {
        self.digits
            .iter()
            .fold(Natural::zero(), |acc, e| acc + &e.digit * &e.element)
    }

    pub fn max_digit(&self) -> Natural {
        self.digits
            .iter()
            .map(|e| e.digit.clone())
            .max()
            .unwrap_or_else(Natural::zero)
    }

    /// JSON form, with the legality verdict under the scheme's default rules.
    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with_bound(None)
    }

    /// [`Decomposition::to_json`] with an explicit gap digit bound for the
    /// embedded verdict.
    pub fn to_json_with_bound(&self, bound: Option<&Natural>) -> serde_json::Value {
        let verdict = validate_digit_vector(&self.scheme, &self.ascending_digits(), bound);
        serde_json::json!({
            "value": self.value.to_string(),
            "scheme": self.scheme.to_json(),
            "digits": self
                .digits
                .iter()
                .map(|e| serde_json::json!({
                    "k": e.position,
                    "fib_index": e.fib_index,
                    "element": e.element.to_string(),
                    "digit": e.digit.to_string(),
                }))
                .collect::<Vec<_>>(),
            "legal": verdict.legal,
            "violated_rule": verdict.violated_rule,
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&decompose_to_text(self, false))
    }
}

/// Greedy digits of `n` over an ascending base: scan from the largest
/// element down, take `digit = remainder / element` at each step. Returns
/// one digit per base element, ascending by position. Errors when a positive
/// residue smaller than the least element survives.
pub fn greedy_digits(n: &Natural, base: &[Natural]) -> Result<Vec<Natural>> {
    let mut digits = vec![Natural::zero(); base.len()];
    let mut remainder = n.clone();
    for (pos, element) in base.iter().enumerate().rev() {
        if remainder.is_zero() {
            break;
        }
        if *element <= remainder {
            let (digit, rest) = remainder.div_rem(element);
            digits[pos] = digit;
            remainder = rest;
        }
    }
    if !remainder.is_zero() {
        return Err(Error::Unrepresentable {
            residue: remainder,
            least: base.first().cloned().unwrap_or_else(Natural::zero),
        });
    }
    Ok(digits)
}

/// Greedy decomposition of `n ≥ 1` under `scheme`. The scan starts at the
/// largest base element ≤ n, so the leading digit is always nonzero and the
/// entries reconstruct `n` exactly.
pub fn greedy_decompose(n: &Natural, scheme: &DecompScheme) -> Result<Decomposition> {
    if n.is_zero() {
        return Err(Error::ZeroValue);
    }
    let prefix = scheme.base_prefix(n);
    if prefix.is_empty() {
        return Err(Error::Unrepresentable {
            residue: n.clone(),
            least: scheme.least_element(),
        });
    }
    let values: Vec<Natural> = prefix.iter().map(|(_, v)| v.clone()).collect();
    let digits = greedy_digits(n, &values)?;
    let entries = prefix
        .into_iter()
        .zip(digits)
        .enumerate()
        .rev()
        .map(|(pos, ((fib_index, element), digit))| DigitEntry {
            position: pos as u64,
            fib_index,
            element,
            digit,
        })
        .collect();
    Ok(Decomposition {
        scheme: *scheme,
        value: n.clone(),
        digits: entries,
    })
}

/// Classic rule: digits in {0, 1} with no two adjacent nonzero digits.
/// `digits` ascending by position.
pub fn classic_rule_violation(digits: &[Natural]) -> Option<RuleTag> {
    let one = Natural::one();
    if digits.iter().any(|d| *d > one) {
        return Some(RuleTag::DigitRange);
    }
    if digits.windows(2).any(|w| !w[0].is_zero() && !w[1].is_zero()) {
        return Some(RuleTag::Adjacency);
    }
    None
}

/// Even rule: digits in {0, 1, 2}, and between any two positions holding a 2
/// there is a position holding a 0.
pub fn even_rule_violation(digits: &[Natural]) -> Option<RuleTag> {
    let two = Natural::from(2u32);
    if digits.iter().any(|d| *d > two) {
        return Some(RuleTag::DigitRange);
    }
    let mut two_pending = false; // a 2 was seen with no 0 since
    for d in digits {
        if *d == two {
            if two_pending {
                return Some(RuleTag::TwoTwosNoZero);
            }
            two_pending = true;
        } else if d.is_zero() {
            two_pending = false;
        }
    }
    None
}

/// Bound rule: every digit ≤ `bound`.
pub fn bound_rule_violation(digits: &[Natural], bound: &Natural) -> Option<RuleTag> {
    if digits.iter().any(|d| d > bound) {
        Some(RuleTag::DigitBound)
    } else {
        None
    }
}

/// Applies a scheme's rule set to an ascending digit vector. For gap schemes
/// `bound_override` replaces the default L(step) bound.
pub fn validate_digit_vector(
    scheme: &DecompScheme,
    digits: &[Natural],
    bound_override: Option<&Natural>,
) -> LegalityVerdict {
    let violation = match scheme {
        DecompScheme::Classic => classic_rule_violation(digits),
        DecompScheme::Even => even_rule_violation(digits),
        DecompScheme::Gap(_) => {
            let default = scheme.default_digit_bound();
            bound_rule_violation(digits, bound_override.unwrap_or(&default))
        }
    };
    match violation {
        Some(rule) => LegalityVerdict::violation(rule),
        None => LegalityVerdict::legal(),
    }
}

/// Applies the scheme's rule set: classic → {0,1} digits, non-adjacent;
/// even → {0,1,2} digits with a 0 between any two 2s; gap → digits within
/// the default L(step) bound. The validator reports; it never clamps.
pub fn validate(d: &Decomposition) -> LegalityVerdict {
    validate_digit_vector(d.scheme(), &d.ascending_digits(), None)
}

/// [`validate`] with an explicit gap digit bound.
pub fn validate_with_bound(d: &Decomposition, bound: &Natural) -> LegalityVerdict {
    validate_digit_vector(d.scheme(), &d.ascending_digits(), Some(bound))
}

/// Renders a decomposition in summand form, descending by index:
/// "143 = 2·F_10 + 2·F_7 + 2·F_4 + 1·F_1". Zero digits are omitted unless
/// `verbose`. Coefficients are printed only when some digit exceeds 1 (or in
/// verbose mode), so classic sums stay plain: "83 = F_10 + F_8 + F_5 + F_3".
pub fn decompose_to_text(d: &Decomposition, verbose: bool) -> String {
    let one = Natural::one();
    let with_coefficients = verbose || d.digits().iter().any(|e| e.digit > one);
    let terms: Vec<String> = d
        .digits()
        .iter()
        .filter(|e| verbose || !e.digit.is_zero())
        .map(|e| {
            if with_coefficients {
                format!("{}·F_{}", e.digit, e.fib_index)
            } else {
                format!("F_{}", e.fib_index)
            }
        })
        .collect();
    format!("{} = {}", d.value(), terms.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    fn gap(step: u64, offset: u64) -> DecompScheme {
        DecompScheme::Gap(GapSpec::new(step, offset).unwrap())
    }

    fn digit_pairs(d: &Decomposition) -> Vec<(u64, u64)> {
        d.nonzero_digits()
            .map(|e| {
                (
                    e.fib_index,
                    u64::try_from(&e.digit).expect("test digits fit u64"),
                )
            })
            .collect()
    }

    #[test]
    fn classic_83() {
        let d = greedy_decompose(&nat(83), &DecompScheme::Classic).unwrap();
        assert_eq!(digit_pairs(&d), vec![(10, 1), (8, 1), (5, 1), (3, 1)]);
        assert_eq!(decompose_to_text(&d, false), "83 = F_10 + F_8 + F_5 + F_3");
        assert!(validate(&d).legal);
        assert_eq!(d.reconstruct(), nat(83));
    }

    #[test]
    fn even_83() {
        let d = greedy_decompose(&nat(83), &DecompScheme::Even).unwrap();
        // Digits (1, 1, 0, 2, 1) over (F_10, F_8, F_6, F_4, F_2).
        let all: Vec<(u64, u64)> = d
            .digits()
            .iter()
            .map(|e| (e.fib_index, u64::try_from(&e.digit).unwrap()))
            .collect();
        assert_eq!(all, vec![(10, 1), (8, 1), (6, 0), (4, 2), (2, 1)]);
        assert!(validate(&d).legal);
        assert_eq!(
            decompose_to_text(&d, true),
            "83 = 1·F_10 + 1·F_8 + 0·F_6 + 2·F_4 + 1·F_2"
        );
    }

    #[test]
    fn gap_decompositions_of_143() {
        #[allow(clippy::type_complexity)]
        let cases: [(u64, u64, &[(u64, u64)], &str); 5] = [
            (3, 1, &[(10, 2), (7, 2), (4, 2), (1, 1)], "143 = 2·F_10 + 2·F_7 + 2·F_4 + 1·F_1"),
            (3, 2, &[(11, 1), (8, 2), (5, 2), (2, 2)], "143 = 1·F_11 + 2·F_8 + 2·F_5 + 2·F_2"),
            (4, 1, &[(9, 4), (5, 1), (1, 2)], "143 = 4·F_9 + 1·F_5 + 2·F_1"),
            (4, 2, &[(10, 2), (6, 4), (2, 1)], "143 = 2·F_10 + 4·F_6 + 1·F_2"),
            (4, 3, &[(11, 1), (7, 4), (3, 1)], "143 = 1·F_11 + 4·F_7 + 1·F_3"),
        ];
        for (step, offset, want, text) in cases {
            let d = greedy_decompose(&nat(143), &gap(step, offset)).unwrap();
            assert_eq!(digit_pairs(&d), want, "step={step}, offset={offset}");
            assert_eq!(d.reconstruct(), nat(143));
            assert_eq!(decompose_to_text(&d, false), text);
        }
    }

    #[test]
    fn smallest_values_render_plain() {
        let d = greedy_decompose(&nat(1), &DecompScheme::Classic).unwrap();
        assert_eq!(decompose_to_text(&d, false), "1 = F_2");
        let d = greedy_decompose(&nat(1), &DecompScheme::Even).unwrap();
        assert_eq!(decompose_to_text(&d, false), "1 = F_2");
    }

    #[test]
    fn zero_value_is_rejected() {
        assert_eq!(
            greedy_decompose(&Natural::zero(), &DecompScheme::Classic).unwrap_err(),
            Error::ZeroValue
        );
    }

    #[test]
    fn unrepresentable_residue_is_reported() {
        // Stride 4 offset 3 base starts at F(3) = 2, so 1 has no digits.
        let err = greedy_decompose(&nat(1), &gap(4, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::Unrepresentable {
                residue: nat(1),
                least: nat(2),
            }
        );
        // A larger value with residue 1 left over after the greedy scan.
        let err = greedy_decompose(&nat(3), &gap(4, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::Unrepresentable {
                residue: nat(1),
                least: nat(2),
            }
        );
    }

    #[test]
    fn offset_zero_base_skips_fib_zero() {
        let scheme = gap(3, 0);
        let prefix = scheme.base_prefix(&nat(100));
        let indices: Vec<u64> = prefix.iter().map(|(i, _)| *i).collect();
        assert_eq!(indices, vec![3, 6, 9]); // F(3)=2, F(6)=8, F(9)=34
    }

    #[test]
    fn even_rule_rejects_adjacent_twos() {
        // 2·F_2 + 2·F_4 = 8 = F_6: hand-built illegal digit vector.
        let digits = vec![nat(2), nat(2)];
        assert_eq!(even_rule_violation(&digits), Some(RuleTag::TwoTwosNoZero));
        let digits = vec![nat(2), nat(0), nat(2)];
        assert_eq!(even_rule_violation(&digits), None);
        let digits = vec![nat(3)];
        assert_eq!(even_rule_violation(&digits), Some(RuleTag::DigitRange));
    }

    #[test]
    fn classic_rule_rejects_adjacent_ones() {
        let digits = vec![nat(1), nat(1)];
        assert_eq!(classic_rule_violation(&digits), Some(RuleTag::Adjacency));
        let digits = vec![nat(1), nat(0), nat(1)];
        assert_eq!(classic_rule_violation(&digits), None);
    }

    #[test]
    fn gap_digit_bound_verdict() {
        // Greedy on N=33 over {1, 5, 34, …} produces digit 6 > bound 4.
        let d = greedy_decompose(&nat(33), &gap(4, 1)).unwrap();
        assert_eq!(digit_pairs(&d), vec![(5, 6), (1, 3)]);
        let verdict = validate_with_bound(&d, &nat(4));
        assert!(!verdict.legal);
        assert_eq!(verdict.violated_rule, Some(RuleTag::DigitBound));
        // The default bound for stride 4 is L(4) = 7, which 6 satisfies.
        assert!(validate(&d).legal);
    }

    #[test]
    fn json_shape_is_stable() {
        let d = greedy_decompose(&nat(83), &DecompScheme::Classic).unwrap();
        let json = d.to_json();
        assert_eq!(json["value"], "83");
        assert_eq!(json["scheme"]["tag"], "classic");
        assert_eq!(json["legal"], true);
        assert_eq!(json["digits"][0]["fib_index"], 10);
        assert_eq!(json["digits"][0]["digit"], "1");
    }
}
