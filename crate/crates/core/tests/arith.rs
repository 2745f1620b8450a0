mod common;

use common::{brute_expand, value_of_bits};
use mkdiv3_core::arith::{build_num, full_addero, mulo, num_value, olego, pluso};
use mkdiv3_core::kanren::{fresh, run, run_star, Answer, Term};
use num_bigint::BigUint;
use proptest::prelude::*;

fn value(a: &Answer) -> u64 {
    let t = a.to_term(&mut |_| panic!("answer {a} is not ground"));
    u64::try_from(num_value(&t).unwrap()).unwrap()
}

#[test]
fn round_trip_below_4096() {
    for n in 0..4096u64 {
        assert_eq!(num_value(&build_num(n)).unwrap(), BigUint::from(n));
    }
}

#[test]
fn full_addero_has_eight_rows() {
    let rows = run_star(|q| {
        fresh(move |[cin, a, b, s, cout]| {
            mkdiv3_core::kanren::conj([
                full_addero(cin.clone(), a.clone(), b.clone(), s.clone(), cout.clone()),
                mkdiv3_core::kanren::eq(q.clone(), Term::list([cin, a, b, s, cout])),
            ])
        })
    });
    assert_eq!(rows.len(), 8);
    let mut seen = std::collections::BTreeSet::new();
    for row in &rows {
        let bits = common::answer_elems(row);
        let bits: Vec<u8> = bits.into_iter().map(Result::unwrap).collect();
        let (cin, a, b, s, cout) = (bits[0], bits[1], bits[2], bits[3], bits[4]);
        assert_eq!(cin + a + b, s + 2 * cout, "{row}");
        seen.insert((cin, a, b));
    }
    assert_eq!(seen.len(), 8);
}

#[test]
fn olego_answers_expand_to_valid_numerals() {
    let answers = run(20, olego);
    assert_eq!(answers.len(), 20);
    for a in &answers {
        let family = brute_expand(a);
        assert!(!family.is_empty(), "{a}");
        for bits in family {
            assert!(bits.iter().all(|&b| b <= 1));
            assert_ne!(bits.last(), Some(&0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pluso_forward(a in 0u64..256, b in 0u64..256) {
        let sums = run_star(|c| pluso(build_num(a), build_num(b), c));
        prop_assert_eq!(sums.len(), 1);
        prop_assert_eq!(value(&sums[0]), a + b);
    }

    #[test]
    fn pluso_backward(a in 0u64..256, b in 0u64..256) {
        let xs = run_star(|x| pluso(x, build_num(b), build_num(a + b)));
        prop_assert_eq!(xs.len(), 1);
        prop_assert_eq!(value(&xs[0]), a);
    }

    #[test]
    fn pluso_splits_every_way(c in 0u64..48) {
        let pairs = run_star(|q| {
            fresh(move |[x, y]| {
                mkdiv3_core::kanren::conj([
                    pluso(x.clone(), y.clone(), build_num(c)),
                    mkdiv3_core::kanren::eq(q.clone(), Term::cons(x, y)),
                ])
            })
        });
        let mut got: Vec<u64> = pairs
            .iter()
            .map(|p| match p {
                Answer::Pair(x, y) => {
                    let (x, y) = (value(x), value(y));
                    assert_eq!(x + y, c);
                    x
                }
                other => panic!("{other}"),
            })
            .collect();
        got.sort();
        prop_assert_eq!(got, (0..=c).collect::<Vec<_>>());
    }

    #[test]
    fn mulo_forward(a in 0u64..64, b in 0u64..64) {
        let products = run_star(|p| mulo(build_num(a), build_num(b), p));
        prop_assert_eq!(products.len(), 1);
        prop_assert_eq!(value(&products[0]), a * b);
    }

    #[test]
    fn mulo_divides_by_three(c in 0u64..1024) {
        let qs = run_star(|x| mulo(build_num(3), x, build_num(c)));
        if c % 3 == 0 {
            prop_assert_eq!(qs.len(), 1);
            prop_assert_eq!(value(&qs[0]), c / 3);
        } else {
            prop_assert!(qs.is_empty());
        }
    }
}

#[test]
fn olego_generator_covers_small_numerals() {
    let mut covered = std::collections::BTreeSet::new();
    for a in run(20, olego) {
        covered.extend(brute_expand(&a).iter().map(|b| value_of_bits(b)));
    }
    assert!((0..16).all(|n| covered.contains(&n)), "{covered:?}");
}
