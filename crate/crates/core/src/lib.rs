//! Exact arithmetic for Fibonacci subsequence numeration systems.
//!
//! The crate is organized around six modules:
//!
//! - [`sequences`]: arbitrary-precision Fibonacci, Lucas, and Gibonacci terms,
//!   subsequences indexed along an arithmetic progression ([`GapSpec`]), and
//!   the exact ring of half-integers `(a + b√5)/2` ([`sequences::GoldenInt`])
//!   used to verify closed forms symbolically.
//! - [`identities`]: computational verification of subsequence recurrences
//!   over parameter ranges, with counterexample reporting.
//! - [`decomp`]: greedy digit decompositions over the classic, even-index,
//!   and stride-`d` Fibonacci bases, plus per-scheme legality validators.
//! - [`plrs`]: positive linear recurrence sequences — condition checking,
//!   generation, and an interval/digit-string bijection audit.
//! - [`multisection`]: integer-coefficient rational generating functions for
//!   the subsequences, with series-coefficient verification.
//! - [`oracle`]: brute-force representation counting used to audit existence,
//!   uniqueness, and digit-bound claims at desk scale.
//!
//! All quantities are exact; no floating point is used anywhere.

pub mod decomp;
pub mod identities;
pub mod multisection;
pub mod oracle;
pub mod plrs;
pub mod rng;
pub mod sequences;

pub use num_bigint::{BigInt, BigUint};

/// The universal scalar: an arbitrary-precision non-negative integer.
pub type Natural = BigUint;

pub use decomp::{DecompScheme, Decomposition, LegalityVerdict};
pub use identities::{IdentityFailure, IdentityName, IdentityReport};
pub use multisection::{IntPolynomial, RationalGf, SeriesKind};
pub use oracle::{AuditConfig, AuditResult, DigitBoundAudit, LegalityPredicate};
pub use plrs::{BijectionReport, GapPlrsCandidate, PlrsMatch, PlrsSequence, PlrsSpec};
pub use sequences::{GapSpec, GibonacciSpec, GoldenInt};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A stride below 2 does not describe a proper subsequence.
    #[error("stride must be at least 2, got {0}")]
    StrideTooSmall(u64),

    /// Offsets must lie in `[0, step)`.
    #[error("offset {offset} must be smaller than step {step}")]
    OffsetOutOfRange { step: u64, offset: u64 },

    /// Element 0 of an offset-0 subsequence is F(0) = 0, which is excluded
    /// from every decomposition base.
    #[error("element 0 of the stride-{step} offset-0 subsequence is F(0) = 0 and is excluded")]
    ZeroGapElement { step: u64 },

    /// Gibonacci seeds must both be positive.
    #[error("gibonacci seeds must be positive integers")]
    NonPositiveSeed,

    /// Decomposition of 0 is the empty sum; callers must pass n >= 1.
    #[error("cannot decompose zero")]
    ZeroValue,

    /// The greedy scan finished with a nonzero remainder smaller than the
    /// least base element, so no decomposition exists over this base.
    #[error("no decomposition: residue {residue} is smaller than the least base element {least}")]
    Unrepresentable { residue: Natural, least: Natural },

    /// PLRS coefficient lists need L >= 1 with positive first and last entries.
    #[error("PLRS coefficients must be non-empty with positive first and last entries")]
    InvalidPlrsSpec,

    /// A PLRS match needs at least L + 2 candidate terms to say anything.
    #[error("need at least {needed} candidate terms, got {got}")]
    NotEnoughTerms { needed: usize, got: usize },

    /// Even strides flip the sign of the trailing recurrence coefficient, so
    /// they induce no order-2 positive recurrence.
    #[error(
        "stride {0} is even: the trailing recurrence coefficient is -1, \
         so the subsequence induces no order-2 positive recurrence"
    )]
    EvenStride(u64),

    /// Odd strides below 3 are not covered by the order-2 construction.
    #[error("stride must be an odd integer >= 3, got {0}")]
    StrideNotOdd(u64),

    /// Formal power series expansion needs an invertible constant term.
    #[error("series expansion requires a denominator constant term of 1 or -1, got {0}")]
    NonUnitConstantTerm(BigInt),

    /// A rational generating function denominator must not vanish at 0.
    #[error("generating function denominator has zero constant term")]
    ZeroConstantTerm,

    /// Bound-only legality audits need an explicit digit bound.
    #[error("legality predicate 'bound-only' requires an explicit digit bound")]
    MissingDigitBound,
}

pub type Result<T> = std::result::Result<T, Error>;
