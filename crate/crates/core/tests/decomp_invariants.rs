//! Reconstruction and legality invariants for the greedy decompositions.

use num_traits::Zero;
use proptest::prelude::*;
use zlab_core::decomp::{greedy_decompose, validate, DecompScheme};
use zlab_core::sequences::GapSpec;
use zlab_core::Natural;

fn nat(n: u64) -> Natural {
    Natural::from(n)
}

fn gap(step: u64, offset: u64) -> DecompScheme {
    DecompScheme::Gap(GapSpec::new(step, offset).unwrap())
}

#[test]
fn reconstruction_holds_across_schemes() {
    // Every scheme whose base starts at 1 decomposes every N exactly.
    let schemes = [
        DecompScheme::Classic,
        DecompScheme::Even,
        gap(3, 1),
        gap(3, 2),
        gap(4, 1),
        gap(5, 2),
    ];
    for scheme in &schemes {
        for n in 1..=100_000u64 {
            let d = greedy_decompose(&nat(n), scheme).unwrap();
            assert_eq!(d.reconstruct(), nat(n), "scheme={scheme}, N={n}");
        }
    }
}

#[test]
fn greedy_digits_respect_remainder_bound() {
    // After processing element S(k), the remainder is < S(k), so each digit
    // satisfies digit(k) ≤ (S(k+1) − 1) / S(k).
    for scheme in [DecompScheme::Classic, DecompScheme::Even, gap(4, 1)] {
        for n in (1..=20_000u64).step_by(7) {
            let d = greedy_decompose(&nat(n), &scheme).unwrap();
            let entries = d.digits();
            for pair in entries.windows(2) {
                // entries are descending: pair[0] is the higher position.
                let cap = (&pair[0].element - 1u32) / &pair[1].element;
                assert!(
                    pair[1].digit <= cap,
                    "scheme={scheme}, N={n}, position={}",
                    pair[1].position
                );
            }
        }
    }
}

#[test]
fn classic_greedy_is_always_legal() {
    for n in 1..=100_000u64 {
        let d = greedy_decompose(&nat(n), &DecompScheme::Classic).unwrap();
        let verdict = validate(&d);
        assert!(verdict.legal, "N={n}: {:?}", verdict.violated_rule);
    }
}

#[test]
fn even_greedy_digits_stay_at_most_two() {
    for n in 1..=100_000u64 {
        let d = greedy_decompose(&nat(n), &DecompScheme::Even).unwrap();
        assert!(d.max_digit() <= nat(2), "N={n}");
    }
}

#[test]
fn even_greedy_satisfies_two_twos_rule() {
    for n in 1..=10_000u64 {
        let d = greedy_decompose(&nat(n), &DecompScheme::Even).unwrap();
        let verdict = validate(&d);
        assert!(verdict.legal, "N={n}: {:?}", verdict.violated_rule);
    }
}

#[test]
fn rendering_is_a_pure_function_of_digits() {
    let a = greedy_decompose(&nat(83), &DecompScheme::Even).unwrap();
    let b = greedy_decompose(&nat(83), &DecompScheme::Even).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.to_json(), b.to_json());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reconstruction_on_large_random_values(n in 1u128..u128::MAX) {
        let value: Natural = n.into();
        for scheme in [DecompScheme::Classic, DecompScheme::Even, gap(3, 2)] {
            let d = greedy_decompose(&value, &scheme).unwrap();
            prop_assert_eq!(d.reconstruct(), value.clone());
            // The leading digit is always nonzero.
            prop_assert!(!d.digits()[0].digit.is_zero());
        }
    }

    #[test]
    fn classic_legality_on_random_values(n in 1u64..u64::MAX) {
        let d = greedy_decompose(&nat(n), &DecompScheme::Classic).unwrap();
        prop_assert!(validate(&d).legal);
    }
}
