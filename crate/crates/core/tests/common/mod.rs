//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mkdiv3_core::kanren::{Answer, Atom};

/// Elements of a proper answer list: `Some(bit)` or `None` for the
/// placeholder with the paired index.
pub fn answer_elems(a: &Answer) -> Vec<Result<u8, usize>> {
    let (items, tail) = a.elements();
    assert_eq!(*tail, Answer::Nil, "improper answer {a}");
    items
        .into_iter()
        .map(|e| match e {
            Answer::Atom(Atom::Nat(b)) => Ok(*b),
            Answer::Placeholder(p) => Err(*p),
            other => panic!("unexpected element {other}"),
        })
        .collect()
}

/// Every assignment of the placeholders to bits that yields a valid
/// numeral, as little-endian bit vectors.
pub fn brute_expand(a: &Answer) -> BTreeSet<Vec<u8>> {
    let elems = answer_elems(a);
    let mut ids: Vec<usize> = elems.iter().filter_map(|e| e.err()).collect();
    ids.sort();
    ids.dedup();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << ids.len()) {
        let bits: Vec<u8> = elems
            .iter()
            .map(|e| match e {
                Ok(b) => *b,
                Err(p) => {
                    let k = ids.iter().position(|q| q == p).unwrap();
                    ((mask >> k) & 1) as u8
                }
            })
            .collect();
        if bits.last() != Some(&0) {
            out.insert(bits);
        }
    }
    out
}

pub fn value_of_bits(bits: &[u8]) -> u128 {
    bits.iter().rev().fold(0, |acc, &b| acc * 2 + b as u128)
}

pub fn bits_of(mut n: u64) -> Vec<u8> {
    let mut bits = Vec::new();
    while n > 0 {
        bits.push((n & 1) as u8);
        n >>= 1;
    }
    bits
}

/// Smallest multiple of three, below `bound`, not in `covered`.
pub fn missing_multiple(covered: &BTreeSet<u128>, bound: u128) -> Option<u128> {
    (0..bound).step_by(3).find(|m| !covered.contains(m))
}
