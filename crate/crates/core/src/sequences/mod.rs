//! Arbitrary-precision Fibonacci, Lucas, and Gibonacci terms, plus Fibonacci
//! subsequences whose indices run along an arithmetic progression.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

mod golden;

pub use golden::{binet_check, golden_power, lucas_rounding_check, GoldenInt};

use crate::{Error, Natural, Result};
use num_traits::{One, Zero};

/// F(n) with F(0) = 0, F(1) = 1, via fast doubling:
/// F(2k) = F(k)·(2·F(k+1) − F(k)) and F(2k+1) = F(k)² + F(k+1)².
pub fn fib(n: u64) -> Natural {
    fib_pair(n).0
}

/// (F(n), F(n+1)), scanning the bits of `n` from the top.
pub fn fib_pair(n: u64) -> (Natural, Natural) {
    let mut a = Natural::zero(); // F(k)
    let mut b = Natural::one(); // F(k+1)
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros() as u64;
    for i in (0..bits).rev() {
        // (F(k), F(k+1)) -> (F(2k), F(2k+1)); 2F(k+1) − F(k) never underflows
        // because F(k+1) ≥ F(k).
        let c = &a * ((&b << 1u32) - &a);
        let d = &a * &a + &b * &b;
        if (n >> i) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// L(0) = 2 and L(n) = F(n−1) + F(n+1) for n ≥ 1. For n ≥ 2 this is also φⁿ
/// rounded to the nearest integer; see [`lucas_rounding_check`].
pub fn lucas(n: u64) -> Natural {
    if n == 0 {
        return Natural::from(2u32);
    }
    let (f_prev, f_n) = fib_pair(n - 1);
    // L(n) = F(n−1) + F(n+1) = 2·F(n−1) + F(n)
    (&f_prev << 1u32) + f_n
}

/// Unbounded iterator over F(0), F(1), F(2), …
pub fn fib_terms() -> impl Iterator<Item = Natural> {
    let mut pair = (Natural::zero(), Natural::one());
    std::iter::from_fn(move || {
        let next = &pair.0 + &pair.1;
        let out = std::mem::replace(&mut pair.0, std::mem::replace(&mut pair.1, next));
        Some(out)
    })
}

/// First terms of a sequence obeying G(n) = G(n−1) + G(n−2) with positive
/// integer seeds G(1), G(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GibonacciSpec {
    g1: Natural,
    g2: Natural,
}

impl GibonacciSpec {
    pub fn new(g1: Natural, g2: Natural) -> Result<Self> {
        if g1.is_zero() || g2.is_zero() {
            return Err(Error::NonPositiveSeed);
        }
        Ok(GibonacciSpec { g1, g2 })
    }

    /// The Fibonacci seeds (1, 1).
    pub fn fibonacci() -> Self {
        GibonacciSpec {
            g1: Natural::one(),
            g2: Natural::one(),
        }
    }

    pub fn g1(&self) -> &Natural {
        &self.g1
    }

    pub fn g2(&self) -> &Natural {
        &self.g2
    }
}

/// Term `n` (1-based) of the Gibonacci sequence seeded by `spec`.
pub fn gibonacci(spec: &GibonacciSpec, n: u64) -> Natural {
    assert!(n >= 1, "gibonacci terms are 1-based");
    let mut terms = gibonacci_terms(spec);
    terms.nth(n as usize - 1).expect("iterator is unbounded")
}

/// Unbounded iterator over G(1), G(2), G(3), …
pub fn gibonacci_terms(spec: &GibonacciSpec) -> impl Iterator<Item = Natural> {
    let mut pair = (spec.g1.clone(), spec.g2.clone());
    std::iter::from_fn(move || {
        let next = &pair.0 + &pair.1;
        let out = std::mem::replace(&mut pair.0, std::mem::replace(&mut pair.1, next));
        Some(out)
    })
}

/// A Fibonacci subsequence indexed along an arithmetic progression: element
/// `k` is F(step·k + offset).
///
/// The stride is explicit. Sources that speak of an "n-gap" subsequence with
/// indices congruent to m modulo n+1 correspond to `step = n + 1`; sources
/// whose recurrences run over F(nk+m) correspond to `step = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapSpec {
    step: u64,
    offset: u64,
}

impl GapSpec {
    pub fn new(step: u64, offset: u64) -> Result<Self> {
        if step < 2 {
            return Err(Error::StrideTooSmall(step));
        }
        if offset >= step {
            return Err(Error::OffsetOutOfRange { step, offset });
        }
        Ok(GapSpec { step, offset })
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// Fibonacci index of element `k`. When the offset is 0 the k = 0
    /// element would be F(0) = 0, which is excluded from decomposition
    /// bases, so generation starts at k = 1.
    pub fn fib_index(&self, k: u64) -> Result<u64> {
        if self.offset == 0 && k == 0 {
            return Err(Error::ZeroGapElement { step: self.step });
        }
        Ok(self.step * k + self.offset)
    }
}

/// Element `k` of the subsequence described by `spec`: F(step·k + offset).
pub fn gap_element(spec: &GapSpec, k: u64) -> Result<Natural> {
    Ok(fib(spec.fib_index(k)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain iterative recurrence, the independent oracle for fast doubling.
    fn fib_iterative(n: u64) -> Natural {
        let (mut a, mut b) = (Natural::zero(), Natural::one());
        for _ in 0..n {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    #[test]
    fn fib_base_cases_and_small_values() {
        assert_eq!(fib(0), nat(0));
        assert_eq!(fib(1), nat(1));
        assert_eq!(fib(2), nat(1));
        assert_eq!(fib(10), nat(55));
    }

    #[test]
    fn fib_matches_iterative_oracle_at_200() {
        // Frozen from the iterative recurrence.
        let expected = "280571172992510140037611932413038677189525";
        assert_eq!(fib(200).to_string(), expected);
        assert_eq!(fib_iterative(200).to_string(), expected);
    }

    #[test]
    fn fib_matches_iterative_oracle_on_range() {
        let mut pair = (Natural::zero(), Natural::one());
        for n in 0..400u64 {
            assert_eq!(fib(n), pair.0, "mismatch at n={n}");
            let next = &pair.0 + &pair.1;
            pair = (pair.1, next);
        }
    }

    #[test]
    fn lucas_small_values() {
        let expected = [2u64, 1, 3, 4, 7, 11, 18, 29];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(lucas(n as u64), nat(*want), "L({n})");
        }
    }

    #[test]
    fn lucas_matches_its_own_recurrence() {
        // L(n) = L(n−1) + L(n−2); frozen L(30) from the iterative run.
        let (mut a, mut b) = (nat(2), nat(1));
        for n in 2..=60u64 {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
            assert_eq!(lucas(n), b, "L({n})");
        }
        assert_eq!(lucas(30), nat(1_860_498));
    }

    #[test]
    fn gibonacci_examples() {
        let fib_seeds = GibonacciSpec::fibonacci();
        assert_eq!(gibonacci(&fib_seeds, 10), nat(55));

        let spec = GibonacciSpec::new(nat(1), nat(3)).unwrap();
        assert_eq!(gibonacci(&spec, 3), nat(4));

        // Frozen from the iterative recurrence with seeds (7, 11).
        let spec = GibonacciSpec::new(nat(7), nat(11)).unwrap();
        assert_eq!(gibonacci(&spec, 20), nat(64_079));
    }

    #[test]
    fn gibonacci_rejects_zero_seeds() {
        assert_eq!(
            GibonacciSpec::new(nat(0), nat(5)).unwrap_err(),
            Error::NonPositiveSeed
        );
    }

    #[test]
    fn gap_spec_validation() {
        assert!(GapSpec::new(3, 2).is_ok());
        assert_eq!(GapSpec::new(1, 0).unwrap_err(), Error::StrideTooSmall(1));
        assert_eq!(
            GapSpec::new(3, 3).unwrap_err(),
            Error::OffsetOutOfRange { step: 3, offset: 3 }
        );
    }

    #[test]
    fn gap_element_examples() {
        let spec = GapSpec::new(3, 2).unwrap();
        let want = [1u64, 5, 21, 89];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(gap_element(&spec, k as u64).unwrap(), nat(*w));
        }

        let spec = GapSpec::new(4, 1).unwrap();
        assert_eq!(gap_element(&spec, 2).unwrap(), nat(34));

        // Frozen from the fib oracle: F(38).
        let spec = GapSpec::new(7, 3).unwrap();
        assert_eq!(gap_element(&spec, 5).unwrap(), nat(39_088_169));
    }

    #[test]
    fn gap_element_rejects_zero_element() {
        let spec = GapSpec::new(4, 0).unwrap();
        assert_eq!(
            gap_element(&spec, 0).unwrap_err(),
            Error::ZeroGapElement { step: 4 }
        );
        assert_eq!(gap_element(&spec, 1).unwrap(), nat(3));
    }

    #[test]
    fn fib_terms_iterator_agrees_with_fib() {
        for (n, term) in fib_terms().take(50).enumerate() {
            assert_eq!(term, fib(n as u64));
        }
    }
}
