//! Expanding reified answers into the ground numerals they subsume, and the
//! reach metric built on top of it.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::arith::OlegNumeral;
use crate::div3::ImplId;
use crate::kanren::{solutions, Answer, Atom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("answer `{0}` has an open tail")]
    OpenTail(String),
    #[error("`{0}` is neither a bit nor a placeholder")]
    InvalidElement(String),
    #[error("answer `{0}` ends in 0 and denotes no numeral")]
    TrailingZero(String),
}

/// One position of a reified numeral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Bit(u8),
    Var(usize),
}

/// A reified numeral as a proper list of bits and placeholders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReifiedBitList(Vec<Elem>);

impl ReifiedBitList {
    pub fn new(elems: Vec<Elem>) -> Self {
        Self(elems)
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0
    }

    pub fn distinct_placeholders(&self) -> usize {
        let mut seen: Vec<usize> = self
            .0
            .iter()
            .filter_map(|e| match e {
                Elem::Var(v) => Some(*v),
                Elem::Bit(_) => None,
            })
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl TryFrom<&Answer> for ReifiedBitList {
    type Error = ExpansionError;

    fn try_from(answer: &Answer) -> Result<Self, ExpansionError> {
        let (items, tail) = answer.elements();
        if *tail != Answer::Nil {
            return Err(ExpansionError::OpenTail(answer.to_string()));
        }
        items
            .into_iter()
            .map(|e| match e {
                Answer::Placeholder(n) => Ok(Elem::Var(*n)),
                e if is_ground_bit(e) => match e {
                    Answer::Atom(Atom::Nat(b)) => Ok(Elem::Bit(*b)),
                    _ => unreachable!(),
                },
                other => Err(ExpansionError::InvalidElement(other.to_string())),
            })
            .collect::<Result<_, _>>()
            .map(ReifiedBitList)
    }
}

pub fn is_ground_bit(e: &Answer) -> bool {
    matches!(e, Answer::Atom(Atom::Nat(0 | 1)))
}

pub fn find_first_reified(b: &ReifiedBitList) -> Option<usize> {
    b.0.iter().find_map(|e| match e {
        Elem::Var(v) => Some(*v),
        Elem::Bit(_) => None,
    })
}

/// Replaces every occurrence of placeholder `v` with `bit`.
pub fn substitute(b: &ReifiedBitList, v: usize, bit: u8) -> ReifiedBitList {
    ReifiedBitList(
        b.0.iter()
            .map(|&e| if e == Elem::Var(v) { Elem::Bit(bit) } else { e })
            .collect(),
    )
}

/// Distinct ground numerals, in insertion order of first appearance.
#[derive(Clone, Debug, Default)]
pub struct GroundSet {
    seen: HashSet<OlegNumeral>,
}

impl GroundSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if `n` was already present.
    pub fn insert(&mut self, n: OlegNumeral) -> bool {
        self.seen.insert(n)
    }

    pub fn extend(&mut self, ns: impl IntoIterator<Item = OlegNumeral>) {
        self.seen.extend(ns);
    }

    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }

    pub fn contains(&self, n: &OlegNumeral) -> bool {
        self.seen.contains(n)
    }

    pub fn iter(&self) -> impl Iterator<Item = &OlegNumeral> {
        self.seen.iter()
    }
}

/// Every ground numeral subsumed by `answer`, in breadth-first expansion
/// order. A trailing placeholder is forced to `1` first so that no result
/// ends in `0`.
pub fn all_solutions(answer: &Answer) -> Result<Vec<OlegNumeral>, ExpansionError> {
    let b = ReifiedBitList::try_from(answer)?;
    let start = match b.0.last() {
        None => return Ok(vec![OlegNumeral::zero()]),
        Some(Elem::Var(v)) => substitute(&b, *v, 1),
        Some(Elem::Bit(0)) => return Err(ExpansionError::TrailingZero(answer.to_string())),
        Some(Elem::Bit(_)) => b,
    };
    let mut queue = VecDeque::from([start]);
    // every entry has the same placeholders left, so the front decides
    while let Some(v) = queue.front().and_then(find_first_reified) {
        let head = queue.pop_front().expect("front exists");
        queue.push_back(substitute(&head, v, 0));
        queue.push_back(substitute(&head, v, 1));
    }
    Ok(queue
        .into_iter()
        .map(|b| {
            let bits =
                b.0.into_iter()
                    .map(|e| match e {
                        Elem::Bit(x) => x,
                        Elem::Var(_) => unreachable!("fully expanded"),
                    })
                    .collect();
            OlegNumeral::from_bits(bits).expect("last bit is a ground 1")
        })
        .collect())
}

/// Tracks the union of expansions over a prefix of answers.
#[derive(Default)]
pub struct ReachCounter {
    set: GroundSet,
    answers: usize,
}

impl ReachCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, answer: &Answer) -> Result<(), ExpansionError> {
        self.set.extend(all_solutions(answer)?);
        self.answers += 1;
        Ok(())
    }

    pub fn answers(&self) -> usize {
        self.answers
    }

    pub fn reach(&self) -> usize {
        self.set.len()
    }

    pub fn set(&self) -> &GroundSet {
        &self.set
    }
}

/// Distinct ground numerals subsumed by the first `i` answers of `id` on
/// a fresh variable.
pub fn reach(id: ImplId, i: usize) -> Result<usize, ExpansionError> {
    Ok(reach_curve(id, &[i])?[0])
}

/// Reach at each point of `grid` (any order), from a single enumeration
/// up to the largest point.
pub fn reach_curve(id: ImplId, grid: &[usize]) -> Result<Vec<usize>, ExpansionError> {
    let max = grid.iter().copied().max().unwrap_or(0);
    let mut at = vec![0; max + 1];
    let mut counter = ReachCounter::new();
    for answer in solutions(id.relation()).take(max) {
        counter.add(&answer)?;
        at[counter.answers()] = counter.reach();
    }
    Ok(grid.iter().map(|&i| at[i]).collect())
}
