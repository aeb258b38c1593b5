//! Integer-coefficient polynomials and rational generating functions for
//! Fibonacci and Lucas subsequences.
//!
//! The closed forms implemented here are
//!
//! ```text
//! Σ F(nk+m)·xᵏ = (F(m) + (F(n+m) − F(m)·L(n))·x) / (1 − L(n)·x + (−1)ⁿ·x²)
//! Σ L(nk+m)·xᵏ = (L(m) + (L(n+m) − L(m)·L(n))·x) / (1 − L(n)·x + (−1)ⁿ·x²)
//! ```
//!
//! valid for every stride n ≥ 1 and offset m ≥ 0. Expansion is exact: the
//! denominator induces an integer linear recurrence on the coefficients.

use crate::identities::{IdentityFailure, IdentityName, IdentityReport};
use crate::sequences::{fib, fib_terms, lucas};
use crate::{BigInt, Error, Natural, Result};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense univariate polynomial with integer coefficients, ascending by
/// power. Trailing zeros are trimmed, so the zero polynomial is the empty
/// vector and `degree` is otherwise well-defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        let mut poly = IntPolynomial { coeffs };
        poly.trim();
        poly
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coefficients(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let magnitude = coeff.abs();
            if first {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = magnitude != BigInt::one() || power == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

/// A rational generating function: numerator / denominator as a formal power
/// series. The denominator's constant term is nonzero, so the expansion is
/// unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGf {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coefficient(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalGf {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Common-denominator sum: (a/b) + (c/d) = (ad + cb)/(bd). No reduction
    /// is attempted; the expansions agree regardless.
    pub fn add(&self, other: &RationalGf) -> RationalGf {
        let numerator = &(&self.numerator * &other.denominator)
            + &(&other.numerator * &self.denominator);
        let denominator = &self.denominator * &other.denominator;
        RationalGf {
            numerator,
            denominator,
        }
    }

    pub fn scale(&self, k: &BigInt) -> RationalGf {
        RationalGf {
            numerator: self.numerator.scale(k),
            denominator: self.denominator.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |poly: &IntPolynomial| -> Vec<String> {
            poly.coefficients().iter().map(|c| c.to_string()).collect()
        };
        serde_json::json!({
            "numerator": strings(&self.numerator),
            "denominator": strings(&self.denominator),
        })
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// The shared denominator 1 − L(n)·x + (−1)ⁿ·x².
fn stride_denominator(step: u64) -> IntPolynomial {
    let sign = if step.is_multiple_of(2) { 1 } else { -1 };
    IntPolynomial::from_coefficients(vec![
        BigInt::one(),
        -BigInt::from(lucas(step)),
        BigInt::from(sign),
    ])
}

/// Σ F(step·k + offset)·xᵏ as a closed rational form. `step ≥ 1`; any
/// offset ≥ 0 is accepted (the closed form remains exact for offsets beyond
/// the stride, where it describes the shifted subsequence).
pub fn fib_gf(step: u64, offset: u64) -> RationalGf {
    assert!(step >= 1, "stride must be positive");
    let f_m = BigInt::from(fib(offset));
    let f_nm = BigInt::from(fib(step + offset));
    let l_n = BigInt::from(lucas(step));
    let numerator = IntPolynomial::from_coefficients(vec![f_m.clone(), f_nm - f_m * l_n]);
    RationalGf {
        numerator,
        denominator: stride_denominator(step),
    }
}

/// Σ L(step·k + offset)·xᵏ as a closed rational form.
pub fn lucas_gf(step: u64, offset: u64) -> RationalGf {
    assert!(step >= 1, "stride must be positive");
    let l_m = BigInt::from(lucas(offset));
    let l_nm = BigInt::from(lucas(step + offset));
    let l_n = BigInt::from(lucas(step));
    let numerator = IntPolynomial::from_coefficients(vec![l_m.clone(), l_nm - l_m * l_n]);
    RationalGf {
        numerator,
        denominator: stride_denominator(step),
    }
}

/// First `count` coefficients of the formal power series, via the linear
/// recurrence the denominator induces:
/// c(k) = (num(k) − Σ_{i≥1} den(i)·c(k−i)) / den(0).
/// The constant term must be 1 or −1 for the division to stay integral.
pub fn expand_series(gf: &RationalGf, count: usize) -> Result<Vec<BigInt>> {
    let d0 = gf.denominator.coefficient(0);
    if d0 != BigInt::one() && d0 != -BigInt::one() {
        return Err(Error::NonUnitConstantTerm(d0));
    }
    let den_degree = gf.denominator.degree().unwrap_or(0);
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut value = gf.numerator.coefficient(k);
        for i in 1..=den_degree.min(k) {
            value -= gf.denominator.coefficient(i) * &coeffs[k - i];
        }
        if d0 == -BigInt::one() {
            value = -value;
        }
        coeffs.push(value);
    }
    Ok(coeffs)
}

/// Which subsequence a generating function describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesKind {
    #[serde(rename = "fib")]
    Fib,
    #[serde(rename = "lucas")]
    Lucas,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Fib => f.write_str("fib"),
            SeriesKind::Lucas => f.write_str("lucas"),
        }
    }
}

/// Expands the closed form for (step, offset) and compares every coefficient
/// k < count against the directly computed subsequence term F(step·k+offset)
/// or L(step·k+offset).
pub fn verify_multisection(
    step: u64,
    offset: u64,
    count: usize,
    kind: SeriesKind,
) -> IdentityReport {
    assert!(step >= 1 && count >= 1);
    let gf = match kind {
        SeriesKind::Fib => fib_gf(step, offset),
        SeriesKind::Lucas => lucas_gf(step, offset),
    };
    let series = expand_series(&gf, count).expect("stride denominators have unit constant term");
    let max_index = step * (count as u64 - 1) + offset;
    let fibs: Vec<Natural> = fib_terms().take(max_index as usize + 2).collect();
    let direct = |index: u64| -> BigInt {
        match kind {
            SeriesKind::Fib => BigInt::from(fibs[index as usize].clone()),
            SeriesKind::Lucas => {
                if index == 0 {
                    BigInt::from(2)
                } else {
                    BigInt::from(&fibs[index as usize - 1] + &fibs[index as usize + 1])
                }
            }
        }
    };
    let mut failures = Vec::new();
    for (k, coefficient) in series.iter().enumerate() {
        let expected = direct(step * k as u64 + offset);
        if *coefficient != expected {
            failures.push(IdentityFailure {
                params: BTreeMap::from([
                    ("kind".to_string(), kind.to_string()),
                    ("k".to_string(), k.to_string()),
                ]),
                lhs: coefficient.to_string(),
                rhs: expected.to_string(),
            });
        }
    }
    IdentityReport::from_failures(
        IdentityName::Multisection,
        format!("kind={kind}, step={step}, offset={offset}, k in [0, {count})"),
        failures,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn fib_gf_base_form() {
        let gf = fib_gf(1, 0);
        assert_eq!(gf.numerator(), &IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(gf.denominator(), &IntPolynomial::from_i64(&[1, -1, -1]));
        assert_eq!(gf.to_string(), "(x)/(1 - x - x^2)");
    }

    #[test]
    fn lucas_gf_base_form() {
        let gf = lucas_gf(1, 0);
        assert_eq!(gf.numerator(), &IntPolynomial::from_i64(&[2, -1]));
        assert_eq!(gf.denominator(), &IntPolynomial::from_i64(&[1, -1, -1]));
        assert_eq!(gf.to_string(), "(2 - x)/(1 - x - x^2)");
    }

    #[test]
    fn offset_zero_forms() {
        // F(n)·x / (1 − L(n)x + (−1)ⁿx²) for each stride.
        for step in 1..=8 {
            let gf = fib_gf(step, 0);
            assert_eq!(
                gf.numerator(),
                &IntPolynomial::from_coefficients(vec![
                    BigInt::zero(),
                    BigInt::from(fib(step))
                ]),
                "step={step}"
            );
            let gf = lucas_gf(step, 0);
            assert_eq!(
                gf.numerator(),
                &IntPolynomial::from_coefficients(vec![
                    BigInt::from(2),
                    -BigInt::from(lucas(step)),
                ]),
                "step={step}"
            );
        }
    }

    #[test]
    fn derived_numerators() {
        // F(2)=1, F(5)=5, L(3)=4 ⇒ (1 + x)/(1 − 4x − x²).
        let gf = fib_gf(3, 2);
        assert_eq!(gf.numerator(), &IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(gf.denominator(), &IntPolynomial::from_i64(&[1, -4, -1]));

        // L(1)=1, L(5)=11, L(4)=7 ⇒ (1 + 4x)/(1 − 7x + x²).
        let gf = lucas_gf(4, 1);
        assert_eq!(gf.numerator(), &IntPolynomial::from_i64(&[1, 4]));
        assert_eq!(gf.denominator(), &IntPolynomial::from_i64(&[1, -7, 1]));
    }

    #[test]
    fn expansion_of_base_series() {
        let series = expand_series(&fib_gf(1, 0), 8).unwrap();
        assert_eq!(series, ints(&[0, 1, 1, 2, 3, 5, 8, 13]));

        let series = expand_series(&lucas_gf(1, 0), 6).unwrap();
        assert_eq!(series, ints(&[2, 1, 3, 4, 7, 11]));

        let series = expand_series(&fib_gf(3, 2), 4).unwrap();
        assert_eq!(series, ints(&[1, 5, 21, 89]));
    }

    #[test]
    fn expansion_rejects_non_unit_constant() {
        let gf = RationalGf::new(
            IntPolynomial::from_i64(&[1]),
            IntPolynomial::from_i64(&[2, 1]),
        )
        .unwrap();
        assert_eq!(
            expand_series(&gf, 4).unwrap_err(),
            Error::NonUnitConstantTerm(BigInt::from(2))
        );
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        let err = RationalGf::new(
            IntPolynomial::from_i64(&[1]),
            IntPolynomial::from_i64(&[0, 1]),
        )
        .unwrap_err();
        assert_eq!(err, Error::ZeroConstantTerm);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_multisection(1, 0, 20, SeriesKind::Fib).passed);
        assert!(verify_multisection(2, 0, 10, SeriesKind::Lucas).passed);
    }

    #[test]
    fn verify_sweep_small() {
        for step in 1..=6 {
            for offset in 0..step {
                for kind in [SeriesKind::Fib, SeriesKind::Lucas] {
                    let report = verify_multisection(step, offset, 30, kind);
                    assert!(report.passed, "step={step}, offset={offset}, kind={kind}");
                }
            }
        }
    }

    #[test]
    fn offsets_beyond_stride_stay_exact() {
        // m ≥ n: the closed form describes the shifted subsequence verbatim.
        let series = expand_series(&fib_gf(3, 7), 10).unwrap();
        for (k, coefficient) in series.iter().enumerate() {
            assert_eq!(*coefficient, BigInt::from(fib(3 * k as u64 + 7)));
        }
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(IntPolynomial::from_i64(&[1, -4, -1]).to_string(), "1 - 4x - x^2");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, 2]).to_string(), "-1 + 2x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn polynomial_arithmetic_basics() {
        let p = IntPolynomial::from_i64(&[1, 2]);
        let q = IntPolynomial::from_i64(&[3, 0, 1]);
        assert_eq!(&p + &q, IntPolynomial::from_i64(&[4, 2, 1]));
        assert_eq!(&p * &q, IntPolynomial::from_i64(&[3, 6, 1, 2]));
        assert_eq!(&p - &p, IntPolynomial::zero());
        assert_eq!((&p + &(-&p)), IntPolynomial::zero());
        assert_eq!(IntPolynomial::from_i64(&[1, 1, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn gf_addition_common_denominator() {
        let sum = fib_gf(1, 0).add(&lucas_gf(1, 0));
        let expanded = expand_series(&sum, 8).unwrap();
        // F(k) + L(k): 2, 2, 4, 6, 10, 16, 26, 42
        assert_eq!(expanded, ints(&[2, 2, 4, 6, 10, 16, 26, 42]));
    }
}
