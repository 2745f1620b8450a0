//! Six relations for "n is a multiple of three", registered by name.
//!
//! Clause and conjunct order in each relation is significant: it fixes the
//! order of answers on a fresh argument, and with it the reach numbers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{mulo, pluso, poso};
use crate::kanren::{conj, delay, disj, eq, fresh, Goal, Term};

/// One of the registered implementations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ImplId {
    ThreeTimesX,
    XTimesThree,
    ThreePlusX,
    XPlusThree,
    Dfa,
    EvenOdd,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown implementation `{0}` (expected one of 3*x, x*3, 3+x, x+3, dfa, even-odd)")]
pub struct UnknownImpl(pub String);

impl ImplId {
    pub const ALL: [ImplId; 6] = [
        ImplId::ThreeTimesX,
        ImplId::XTimesThree,
        ImplId::ThreePlusX,
        ImplId::XPlusThree,
        ImplId::Dfa,
        ImplId::EvenOdd,
    ];

    /// The ones that finish quickly on large ground inputs.
    pub const FAST: [ImplId; 4] = [
        ImplId::ThreePlusX,
        ImplId::XPlusThree,
        ImplId::Dfa,
        ImplId::EvenOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ImplId::ThreeTimesX => "3*x",
            ImplId::XTimesThree => "x*3",
            ImplId::ThreePlusX => "3+x",
            ImplId::XPlusThree => "x+3",
            ImplId::Dfa => "dfa",
            ImplId::EvenOdd => "even-odd",
        }
    }

    pub fn relation(self) -> fn(Term) -> Goal {
        match self {
            ImplId::ThreeTimesX => div3o_3_times_x,
            ImplId::XTimesThree => div3o_x_times_3,
            ImplId::ThreePlusX => div3o_3_plus_x,
            ImplId::XPlusThree => div3o_x_plus_3,
            ImplId::Dfa => div3o_dfa,
            ImplId::EvenOdd => div3o_even_odd,
        }
    }

    pub fn is_multiplication_based(self) -> bool {
        matches!(self, ImplId::ThreeTimesX | ImplId::XTimesThree)
    }
}

impl fmt::Display for ImplId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ImplId {
    type Err = UnknownImpl;

    fn from_str(s: &str) -> Result<Self, UnknownImpl> {
        ImplId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownImpl(s.to_string()))
    }
}

pub fn lookup(name: &str) -> Result<fn(Term) -> Goal, UnknownImpl> {
    name.parse::<ImplId>().map(ImplId::relation)
}

fn three() -> Term {
    Term::bits(&[1, 1])
}

pub fn div3o_3_times_x(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        fresh(move |[x]| mulo(three(), x, n.clone()))
    })
}

pub fn div3o_x_times_3(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        fresh(move |[x]| mulo(x, three(), n.clone()))
    })
}

pub fn div3o_x_plus_3(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        disj([
            eq(n.clone(), Term::Nil),
            fresh(move |[x]| {
                conj([
                    poso(n.clone()),
                    pluso(x.clone(), three(), n.clone()),
                    div3o_x_plus_3(x),
                ])
            }),
        ])
    })
}

pub fn div3o_3_plus_x(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        disj([
            eq(n.clone(), Term::Nil),
            fresh(move |[x]| {
                conj([
                    poso(n.clone()),
                    pluso(three(), x.clone(), n.clone()),
                    div3o_3_plus_x(x),
                ])
            }),
        ])
    })
}

/// States of the minimal mod-3 acceptor. `q1` is both start and accepting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DfaState {
    Q1,
    Q2,
    Q3,
}

impl DfaState {
    pub const ALL: [DfaState; 3] = [DfaState::Q1, DfaState::Q2, DfaState::Q3];

    pub fn label(self) -> &'static str {
        match self {
            DfaState::Q1 => "q1",
            DfaState::Q2 => "q2",
            DfaState::Q3 => "q3",
        }
    }

    /// Alternating bit sum, mod 3, that a suffix read from this state must have.
    pub fn residue(self) -> u8 {
        match self {
            DfaState::Q1 => 0,
            DfaState::Q2 => 1,
            DfaState::Q3 => 2,
        }
    }

    pub fn term(self) -> Term {
        Term::sym(self.label())
    }
}

fn state_step(state: &Term, next: &Term, from: DfaState, to: DfaState) -> Goal {
    conj([eq(state.clone(), from.term()), eq(next.clone(), to.term())])
}

/// Runs the acceptor over the bits of `l` starting in `state`.
pub fn dfao(l: Term, state: Term) -> Goal {
    use DfaState::*;
    delay(move || {
        let (l, state) = (l.clone(), state.clone());
        disj([
            conj([eq(l.clone(), Term::Nil), eq(state.clone(), Q1.term())]),
            fresh(move |[a, d, next]| {
                conj([
                    eq(l.clone(), Term::cons(a.clone(), d.clone())),
                    disj([
                        conj([
                            eq(a.clone(), Term::nat(0)),
                            poso(d.clone()),
                            disj([
                                state_step(&state, &next, Q1, Q1),
                                state_step(&state, &next, Q2, Q3),
                                state_step(&state, &next, Q3, Q2),
                            ]),
                        ]),
                        conj([
                            eq(a, Term::nat(1)),
                            disj([
                                state_step(&state, &next, Q1, Q2),
                                state_step(&state, &next, Q2, Q1),
                                state_step(&state, &next, Q3, Q3),
                            ]),
                        ]),
                    ]),
                    dfao(d, next),
                ])
            }),
        ])
    })
}

pub fn div3o_dfa(n: Term) -> Goal {
    delay(move || dfao(n.clone(), DfaState::Q1.term()))
}

/// `n1 = n + 1 (mod 3)` over the counters 0, 1, 2. Swap the arguments to
/// decrement.
pub fn plus1mod3o(n: Term, n1: Term) -> Goal {
    delay(move || {
        disj((0u8..3).map(|k| {
            conj([
                eq(n.clone(), Term::nat(k)),
                eq(n1.clone(), Term::nat((k + 1) % 3)),
            ])
        }))
    })
}

/// Holds when the even-indexed bit count minus the odd-indexed bit count of
/// `n`, plus `diff`, is 0 mod 3. Consumes two bits per step; equal adjacent
/// bits are unified but left unbound.
pub fn even_odd_helpero(n: Term, diff: Term) -> Goal {
    delay(move || {
        let (n, diff) = (n.clone(), diff.clone());
        let base = |bits: &[u8], d: u8| {
            conj([
                eq(n.clone(), Term::bits(bits)),
                eq(diff.clone(), Term::nat(d)),
            ])
        };
        disj([
            base(&[], 0),
            base(&[1], 2),
            base(&[0, 1], 1),
            base(&[1, 1], 0),
            {
                let (n, diff) = (n.clone(), diff.clone());
                fresh(move |[a, ad, dd, new_diff]| {
                    conj([
                        eq(
                            n.clone(),
                            Term::improper([a.clone(), ad.clone()], dd.clone()),
                        ),
                        poso(dd.clone()),
                        disj([
                            conj([
                                eq(a.clone(), ad.clone()),
                                eq(diff.clone(), new_diff.clone()),
                            ]),
                            conj([
                                eq(Term::list([a.clone(), ad.clone()]), Term::bits(&[0, 1])),
                                plus1mod3o(new_diff.clone(), diff.clone()),
                            ]),
                            conj([
                                eq(Term::list([a.clone(), ad.clone()]), Term::bits(&[1, 0])),
                                plus1mod3o(diff.clone(), new_diff.clone()),
                            ]),
                        ]),
                        even_odd_helpero(dd, new_diff),
                    ])
                })
            },
        ])
    })
}

pub fn div3o_even_odd(n: Term) -> Goal {
    delay(move || even_odd_helpero(n.clone(), Term::nat(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::build_num;
    use crate::kanren::{run, run_star, Answer};

    fn holds(g: Goal) -> bool {
        !run_star(|_| g).is_empty()
    }

    fn strings(answers: &[Answer]) -> Vec<String> {
        answers.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn names_round_trip() {
        for id in ImplId::ALL {
            assert_eq!(id.name().parse::<ImplId>(), Ok(id));
        }
        assert!(lookup("dfa").is_ok());
        assert!(lookup("even-odd").is_ok());
        assert_eq!(lookup("div3").unwrap_err(), UnknownImpl("div3".into()));
    }

    #[test]
    fn multiplication_based_examples() {
        assert!(holds(div3o_3_times_x(build_num(6))));
        assert!(holds(div3o_3_times_x(Term::Nil)));
        assert!(!holds(div3o_3_times_x(build_num(7))));
        assert!(holds(div3o_x_times_3(build_num(9))));
        assert!(holds(div3o_x_times_3(Term::Nil)));
        assert!(!holds(div3o_x_times_3(build_num(10))));
    }

    #[test]
    fn addition_based_examples() {
        assert!(holds(div3o_x_plus_3(build_num(3))));
        assert!(holds(div3o_x_plus_3(Term::Nil)));
        assert!(!holds(div3o_x_plus_3(build_num(4))));
        assert!(holds(div3o_3_plus_x(build_num(12))));
        assert!(holds(div3o_3_plus_x(Term::Nil)));
        assert!(!holds(div3o_3_plus_x(build_num(2))));
    }

    #[test]
    fn dfa_examples() {
        use DfaState::*;
        assert!(holds(dfao(Term::Nil, Q1.term())));
        assert!(holds(dfao(Term::bits(&[1, 1]), Q1.term())));
        assert!(holds(dfao(Term::bits(&[1]), Q2.term())));
        assert!(!holds(dfao(Term::bits(&[1]), Q1.term())));
        assert!(holds(div3o_dfa(build_num(0))));
        assert!(holds(div3o_dfa(build_num(21))));
        assert!(!holds(div3o_dfa(build_num(22))));
    }

    #[test]
    fn counter_successor() {
        let succ = |k: u8| strings(&run_star(|q| plus1mod3o(Term::nat(k), q)));
        assert_eq!(succ(0), ["1"]);
        assert_eq!(succ(2), ["0"]);
        assert_eq!(strings(&run_star(|q| plus1mod3o(q, Term::nat(0)))), ["2"]);
    }

    #[test]
    fn even_odd_examples() {
        assert!(holds(even_odd_helpero(Term::bits(&[1]), Term::nat(2))));
        assert!(holds(even_odd_helpero(Term::bits(&[1, 1]), Term::nat(0))));
        assert!(holds(div3o_even_odd(build_num(45))));
        assert!(!holds(div3o_even_odd(build_num(44))));
    }

    #[test]
    fn even_odd_first_ten() {
        let answers = strings(&run(10, div3o_even_odd));
        assert_eq!(
            answers,
            [
                "()",
                "(1 1)",
                "(_.0 _.0 1 1)",
                "(0 1 1)",
                "(1 0 0 1)",
                "(_.0 _.0 _.1 _.1 1 1)",
                "(_.0 _.0 0 1 1)",
                "(_.0 _.0 1 0 0 1)",
                "(0 1 _.0 _.0 1)",
                "(1 0 _.0 _.0 0 1)",
            ]
        );
    }
}
