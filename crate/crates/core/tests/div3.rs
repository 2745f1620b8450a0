mod common;

use std::collections::BTreeSet;

use common::{bits_of, brute_expand, missing_multiple, value_of_bits};
use mkdiv3_core::arith::build_num;
use mkdiv3_core::div3::{dfao, even_odd_helpero, DfaState};
use mkdiv3_core::kanren::{run, run_star, solutions, Goal, Term};
use mkdiv3_core::ImplId;
use proptest::prelude::*;

fn holds(g: Goal) -> bool {
    !run_star(|_| g).is_empty()
}

fn alternating_sum_mod3(bits: &[u8]) -> u8 {
    let s: i64 = bits
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    s.rem_euclid(3) as u8
}

#[test]
fn dfao_residue_law() {
    for n in 0..1024u64 {
        let bits = bits_of(n);
        for state in DfaState::ALL {
            let expected = alternating_sum_mod3(&bits) == state.residue();
            assert_eq!(
                holds(dfao(Term::bits(&bits), state.term())),
                expected,
                "{n} from {}",
                state.label()
            );
        }
    }
}

#[test]
fn even_odd_helper_law() {
    for n in 0..=256u64 {
        for diff in 0u8..3 {
            let expected = (alternating_sum_mod3(&bits_of(n)) + diff).is_multiple_of(3);
            assert_eq!(
                holds(even_odd_helpero(build_num(n), Term::nat(diff))),
                expected,
                "{n} diff {diff}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_impls_decide_mod_three(n in 0u64..3000) {
        for id in ImplId::FAST {
            let answers = run_star(|_| id.relation()(build_num(n)));
            prop_assert_eq!(answers.len() == 1, n % 3 == 0, "{} {}", id, n);
            prop_assert!(answers.len() <= 1);
        }
    }

    #[test]
    fn multiplication_impls_decide_mod_three(n in 0u64..600) {
        for id in [ImplId::ThreeTimesX, ImplId::XTimesThree] {
            let answers = run_star(|_| id.relation()(build_num(n)));
            prop_assert_eq!(!answers.is_empty(), n % 3 == 0, "{} {}", id, n);
        }
    }
}

/// Enumerating the addition-based relations on a fresh numeral slows down
/// sharply (a few hundred answers already take a minute), so they are
/// checked on shorter prefixes.
fn prefix_len(id: ImplId, wanted: usize) -> usize {
    match id {
        ImplId::ThreePlusX | ImplId::XPlusThree => wanted.min(100),
        _ => wanted,
    }
}

#[test]
fn enumerated_answers_are_multiples_of_three() {
    for id in ImplId::ALL {
        let count = prefix_len(id, 1000);
        let answers = run(count, id.relation());
        assert_eq!(answers.len(), count);
        for a in &answers {
            let family = brute_expand(a);
            assert!(!family.is_empty(), "{id}: {a}");
            for bits in family {
                assert_eq!(value_of_bits(&bits) % 3, 0, "{id}: {a}");
            }
        }
    }
}

#[test]
fn no_finite_prefix_covers_every_multiple() {
    for id in ImplId::ALL {
        let mut covered = BTreeSet::new();
        let mut answers = solutions(id.relation());
        let mut taken = 0;
        for i in [10, 100, 1000] {
            if prefix_len(id, i) < i {
                break;
            }
            for a in answers.by_ref().take(i - taken) {
                covered.extend(brute_expand(&a).iter().map(|b| value_of_bits(b)));
            }
            taken = i;
            let bound = 1u128 << (i + 2).min(127);
            let m = missing_multiple(&covered, bound);
            assert!(
                m.is_some(),
                "{id}: first {i} answers cover every multiple below 2^{}",
                i + 2
            );
        }
    }
}

#[test]
fn ground_enumerations_have_no_placeholders() {
    for id in [ImplId::ThreeTimesX, ImplId::XTimesThree, ImplId::Dfa] {
        assert!(
            run(200, id.relation()).iter().all(|a| a.is_ground()),
            "{id}"
        );
    }
    assert!(run(20, ImplId::EvenOdd.relation())
        .iter()
        .any(|a| !a.is_ground()));
}
