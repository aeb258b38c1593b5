//! The exact golden-ratio ring: numbers (a + b√5)/2 with a ≡ b (mod 2).
//!
//! This is ℤ[φ] written on the half-integer lattice, which avoids a general
//! rational type. φ = (1 + √5)/2 lives here as (1, 1), its conjugate
//! ψ = (1 − √5)/2 as (1, −1), and φ·ψ = −1.

use super::{fib, lucas};
use crate::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element (a + b√5)/2 of the golden ring, stored by its doubled
/// coordinates. Every constructed value satisfies a ≡ b (mod 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenInt {
    a: BigInt,
    b: BigInt,
}

impl GoldenInt {
    /// Builds (a + b√5)/2.
    ///
    /// Panics if a ≢ b (mod 2): such a pair is not an element of the ring.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        let elem = GoldenInt {
            a: a.into(),
            b: b.into(),
        };
        assert!(
            (&elem.a - &elem.b).is_even(),
            "(a + b√5)/2 requires a ≡ b (mod 2), got a={}, b={}",
            elem.a,
            elem.b
        );
        elem
    }

    /// The ordinary integer n, i.e. (2n + 0·√5)/2.
    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenInt {
            a: n.into() * 2,
            b: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        GoldenInt {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// φ = (1 + √5)/2.
    pub fn phi() -> Self {
        GoldenInt::new(1, 1)
    }

    /// ψ = (1 − √5)/2, the algebraic conjugate of φ.
    pub fn psi() -> Self {
        GoldenInt::new(1, -1)
    }

    /// φ⁻¹ = (−1 + √5)/2.
    pub fn phi_inverse() -> Self {
        GoldenInt::new(-1, 1)
    }

    /// The doubled coordinates (a, b) of (a + b√5)/2.
    pub fn doubled_coordinates(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of the real value a + b√5, decided by comparing a² with
    /// 5b² (never by floating point). √5 is irrational, so a² = 5b² only
    /// for the zero element.
    pub fn signum(&self) -> i8 {
        match (self.a.is_negative(), self.b.is_negative()) {
            (false, false) => {
                if self.is_zero() {
                    0
                } else {
                    1
                }
            }
            (true, true) => -1,
            // a ≥ 0, b < 0: positive iff a² > 5b².
            (false, true) => {
                if &self.a * &self.a > 5 * (&self.b * &self.b) {
                    1
                } else {
                    -1
                }
            }
            // a < 0, b ≥ 0: positive iff 5b² > a².
            (true, false) => {
                if 5 * (&self.b * &self.b) > &self.a * &self.a {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Binary exponentiation, exact in the ring.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenInt::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√5)/2", self.a, self.b)
    }
}

impl Add for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul for &GoldenInt {
    type Output = GoldenInt;
    /// ((a₁ + b₁√5)/2)·((a₂ + b₂√5)/2) = ((a₁a₂ + 5b₁b₂) + (a₁b₂ + a₂b₁)√5)/4;
    /// the parity invariant makes both numerators even, so the result
    /// renormalizes to halves exactly.
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let two = BigInt::from(2);
        let a_raw: BigInt = &self.a * &rhs.a + 5 * (&self.b * &rhs.b);
        let b_raw: BigInt = &self.a * &rhs.b + &self.b * &rhs.a;
        let (a_num, a_rem) = a_raw.div_rem(&two);
        let (b_num, b_rem) = b_raw.div_rem(&two);
        debug_assert!(a_rem.is_zero() && b_rem.is_zero());
        let product = GoldenInt { a: a_num, b: b_num };
        debug_assert!((&product.a - &product.b).is_even());
        product
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        -&self
    }
}

/// Exact φⁿ for any signed n. Negative exponents use φ⁻¹ = (−1 + √5)/2.
pub fn golden_power(n: i64) -> GoldenInt {
    let base = if n >= 0 {
        GoldenInt::phi()
    } else {
        GoldenInt::phi_inverse()
    };
    base.pow(n.unsigned_abs())
}

/// Verifies the closed form F(n) = (φⁿ − (−φ)⁻ⁿ)/√5 exactly in the ring:
/// φⁿ − (−φ)⁻ⁿ must have zero rational part and √5-coefficient F(n).
pub fn binet_check(n: u64) -> bool {
    let phi_n = GoldenInt::phi().pow(n);
    let phi_neg_n = GoldenInt::phi_inverse().pow(n);
    // (−φ)⁻ⁿ = (−1)ⁿ·φ⁻ⁿ
    let minus_phi_neg_n = if n.is_multiple_of(2) { phi_neg_n } else { -phi_neg_n };
    let diff = &phi_n - &minus_phi_neg_n;
    let (a, b) = diff.doubled_coordinates();
    // F(n)·√5 = (0 + 2·F(n)·√5)/2
    a.is_zero() && *b == BigInt::from(fib(n)) * 2
}

/// For n ≥ 2, verifies exactly that L(n) is the unique integer z with
/// |φⁿ − z| < 1/2: both 2φⁿ − (2z − 1) and (2z + 1) − 2φⁿ must be positive
/// ring elements.
pub fn lucas_rounding_check(n: u64) -> bool {
    assert!(n >= 2, "the rounding claim starts at n = 2");
    let two_phi_n = &GoldenInt::phi().pow(n) * &GoldenInt::from_int(2);
    let z = BigInt::from(lucas(n));
    let lower = &two_phi_n - &GoldenInt::from_int(&z * 2 - 1);
    let upper = &GoldenInt::from_int(&z * 2 + 1) - &two_phi_n;
    lower.is_positive() && upper.is_positive()
}
