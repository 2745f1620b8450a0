//! Oleg numerals and the pure relational arithmetic over them.
//!
//! A numeral is a little-endian list of bits with no trailing `0`; zero is
//! the empty list. The adder and multiplier follow the standard
//! refutationally complete construction: `addero` does case analysis on
//! operand length and recurses through `full-addero`, and `*o` bounds the
//! length of its partial products so that a ground product always yields a
//! finite search.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::kanren::{conj, delay, disj, eq, fresh, Atom, Goal, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumeralError {
    #[error("numeral contains an unbound variable")]
    NotGround,
    #[error("`{0}` is not a bit")]
    NotABit(String),
    #[error("numeral is not a proper list")]
    ImproperTail,
    #[error("numeral ends in a zero bit")]
    TrailingZero,
}

/// A ground numeral, stored as little-endian bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OlegNumeral {
    bits: Vec<u8>,
}

impl OlegNumeral {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self, NumeralError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(NumeralError::NotABit(b.to_string()));
        }
        if bits.last() == Some(&0) {
            return Err(NumeralError::TrailingZero);
        }
        Ok(Self { bits })
    }

    pub fn from_u64(mut n: u64) -> Self {
        let mut bits = Vec::new();
        while n > 0 {
            bits.push((n & 1) as u8);
            n >>= 1;
        }
        Self { bits }
    }

    pub fn from_big(n: &BigUint) -> Self {
        let bits = (0..n.bits()).map(|i| n.bit(i) as u8).collect();
        Self { bits }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn value(&self) -> BigUint {
        let mut v = BigUint::zero();
        for (i, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                v.set_bit(i as u64, true);
            }
        }
        v
    }

    /// Value modulo 3, without building the big integer.
    pub fn mod3(&self) -> u8 {
        // 2^i mod 3 alternates 1, 2
        let s: u64 = self
            .bits
            .iter()
            .enumerate()
            .map(|(i, &b)| b as u64 * if i % 2 == 0 { 1 } else { 2 })
            .sum();
        (s % 3) as u8
    }

    pub fn to_term(&self) -> Term {
        Term::bits(&self.bits)
    }
}

impl TryFrom<&Term> for OlegNumeral {
    type Error = NumeralError;

    fn try_from(t: &Term) -> Result<Self, NumeralError> {
        let mut bits = Vec::new();
        let mut cur = t;
        loop {
            match cur {
                Term::Nil => break,
                Term::Pair(p) => {
                    match &p.0 {
                        Term::Atom(Atom::Nat(b @ (0 | 1))) => bits.push(*b),
                        Term::Var(_) => return Err(NumeralError::NotGround),
                        other => return Err(NumeralError::NotABit(other.to_string())),
                    }
                    cur = &p.1;
                }
                Term::Var(_) => return Err(NumeralError::NotGround),
                Term::Atom(_) => return Err(NumeralError::ImproperTail),
            }
        }
        OlegNumeral::from_bits(bits)
    }
}

impl fmt::Display for OlegNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

pub fn build_num(n: u64) -> Term {
    OlegNumeral::from_u64(n).to_term()
}

pub fn build_num_big(n: &BigUint) -> Term {
    OlegNumeral::from_big(n).to_term()
}

/// Value of a ground numeral.
pub fn num_value(t: &Term) -> Result<BigUint, NumeralError> {
    OlegNumeral::try_from(t).map(|n| n.value())
}

fn one() -> Term {
    Term::bits(&[1])
}

fn bit(b: u8) -> Term {
    Term::nat(b)
}

/// `n` is a pair, i.e. a positive numeral.
pub fn poso(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        fresh(move |[a, d]| eq(n.clone(), Term::cons(a, d)))
    })
}

/// `n` has at least two bits, i.e. is greater than one.
fn gt1o(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        fresh(move |[a, ad, dd]| eq(n.clone(), Term::improper([a, ad], dd)))
    })
}

/// Generator and checker for well-formed numerals.
pub fn olego(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        disj([
            eq(n.clone(), Term::Nil),
            fresh(move |[a, d]| {
                conj([
                    eq(n.clone(), Term::cons(a.clone(), d.clone())),
                    disj([
                        conj([eq(a.clone(), bit(0)), poso(d.clone())]),
                        eq(a, bit(1)),
                    ]),
                    olego(d),
                ])
            }),
        ])
    })
}

/// Zero, or a positive numeral shifted left by one.
pub fn div2o(n: Term) -> Goal {
    delay(move || {
        let n = n.clone();
        disj([
            eq(n.clone(), Term::Nil),
            fresh(move |[half]| {
                conj([eq(n.clone(), Term::cons(bit(0), half.clone())), poso(half)])
            }),
        ])
    })
}

/// `cin + a + b = s + 2·cout` over bits.
pub fn full_addero(cin: Term, a: Term, b: Term, s: Term, cout: Term) -> Goal {
    const ROWS: [[u8; 5]; 8] = [
        [0, 0, 0, 0, 0],
        [1, 0, 0, 1, 0],
        [0, 1, 0, 1, 0],
        [1, 1, 0, 0, 1],
        [0, 0, 1, 1, 0],
        [1, 0, 1, 0, 1],
        [0, 1, 1, 0, 1],
        [1, 1, 1, 1, 1],
    ];
    delay(move || {
        let args = [cin.clone(), a.clone(), b.clone(), s.clone(), cout.clone()];
        disj(ROWS.iter().map(|row| {
            conj(
                row.iter()
                    .zip(args.iter())
                    .map(|(&v, arg)| eq(bit(v), arg.clone())),
            )
        }))
    })
}

/// Adds `n`, `m` and carry bit `d` into `r`.
fn addero(d: Term, n: Term, m: Term, r: Term) -> Goal {
    delay(move || {
        let (d, n, m, r) = (d.clone(), n.clone(), m.clone(), r.clone());
        disj([
            conj([
                eq(bit(0), d.clone()),
                eq(Term::Nil, m.clone()),
                eq(n.clone(), r.clone()),
            ]),
            conj([
                eq(bit(0), d.clone()),
                eq(Term::Nil, n.clone()),
                eq(m.clone(), r.clone()),
                poso(m.clone()),
            ]),
            conj([
                eq(bit(1), d.clone()),
                eq(Term::Nil, m.clone()),
                addero(bit(0), n.clone(), one(), r.clone()),
            ]),
            conj([
                eq(bit(1), d.clone()),
                eq(Term::Nil, n.clone()),
                poso(m.clone()),
                addero(bit(0), one(), m.clone(), r.clone()),
            ]),
            conj([eq(one(), n.clone()), eq(one(), m.clone()), {
                let (d, r) = (d.clone(), r.clone());
                fresh(move |[a, c]| {
                    conj([
                        eq(Term::list([a.clone(), c.clone()]), r.clone()),
                        full_addero(d.clone(), bit(1), bit(1), a, c),
                    ])
                })
            }]),
            conj([
                eq(one(), n.clone()),
                gen_addero(d.clone(), n.clone(), m.clone(), r.clone()),
            ]),
            conj([
                eq(one(), m.clone()),
                gt1o(n.clone()),
                gt1o(r.clone()),
                addero(d.clone(), one(), n.clone(), r.clone()),
            ]),
            conj([gt1o(n.clone()), gen_addero(d, n, m, r)]),
        ])
    })
}

fn gen_addero(d: Term, n: Term, m: Term, r: Term) -> Goal {
    delay(move || {
        let (d, n, m, r) = (d.clone(), n.clone(), m.clone(), r.clone());
        fresh(move |[a, b, c, e, x, y, z]| {
            conj([
                eq(Term::cons(a.clone(), x.clone()), n.clone()),
                eq(Term::cons(b.clone(), y.clone()), m.clone()),
                poso(y.clone()),
                eq(Term::cons(c.clone(), z.clone()), r.clone()),
                poso(z.clone()),
                full_addero(d.clone(), a, b, c, e.clone()),
                addero(e, x, y, z),
            ])
        })
    })
}

/// `n + m = k`.
pub fn pluso(n: Term, m: Term, k: Term) -> Goal {
    delay(move || addero(bit(0), n.clone(), m.clone(), k.clone()))
}

/// `n · m = p`.
pub fn mulo(n: Term, m: Term, p: Term) -> Goal {
    delay(move || {
        let (n, m, p) = (n.clone(), m.clone(), p.clone());
        disj([
            conj([eq(Term::Nil, n.clone()), eq(Term::Nil, p.clone())]),
            conj([
                poso(n.clone()),
                eq(Term::Nil, m.clone()),
                eq(Term::Nil, p.clone()),
            ]),
            conj([
                eq(one(), n.clone()),
                poso(m.clone()),
                eq(m.clone(), p.clone()),
            ]),
            conj([
                gt1o(n.clone()),
                eq(one(), m.clone()),
                eq(n.clone(), p.clone()),
            ]),
            {
                let (n, m, p) = (n.clone(), m.clone(), p.clone());
                fresh(move |[x, z]| {
                    conj([
                        eq(Term::cons(bit(0), x.clone()), n.clone()),
                        poso(x.clone()),
                        eq(Term::cons(bit(0), z.clone()), p.clone()),
                        poso(z.clone()),
                        gt1o(m.clone()),
                        mulo(x, m.clone(), z),
                    ])
                })
            },
            {
                let (n, m, p) = (n.clone(), m.clone(), p.clone());
                fresh(move |[x, y]| {
                    conj([
                        eq(Term::cons(bit(1), x.clone()), n.clone()),
                        poso(x),
                        eq(Term::cons(bit(0), y.clone()), m.clone()),
                        poso(y),
                        mulo(m.clone(), n.clone(), p.clone()),
                    ])
                })
            },
            fresh(move |[x, y]| {
                conj([
                    eq(Term::cons(bit(1), x.clone()), n.clone()),
                    poso(x.clone()),
                    eq(Term::cons(bit(1), y.clone()), m.clone()),
                    poso(y),
                    odd_mulo(x, n.clone(), m.clone(), p.clone()),
                ])
            }),
        ])
    })
}

fn odd_mulo(x: Term, n: Term, m: Term, p: Term) -> Goal {
    delay(move || {
        let (x, n, m, p) = (x.clone(), n.clone(), m.clone(), p.clone());
        fresh(move |[q]| {
            conj([
                bound_mulo(q.clone(), p.clone(), n.clone(), m.clone()),
                mulo(x.clone(), m.clone(), q.clone()),
                pluso(Term::cons(bit(0), q), m.clone(), p.clone()),
            ])
        })
    })
}

/// Keeps the partial product `q` shorter than `p` and no longer than
/// `n` and `m` together.
fn bound_mulo(q: Term, p: Term, n: Term, m: Term) -> Goal {
    delay(move || {
        let (q, p, n, m) = (q.clone(), p.clone(), n.clone(), m.clone());
        disj([
            conj([eq(Term::Nil, q.clone()), poso(p.clone())]),
            fresh(move |[a0, a1, a2, a3, x, y, z]| {
                conj([
                    eq(Term::cons(a0, x.clone()), q.clone()),
                    eq(Term::cons(a1, y.clone()), p.clone()),
                    disj([
                        conj([
                            eq(Term::Nil, n.clone()),
                            eq(Term::cons(a2, z.clone()), m.clone()),
                            bound_mulo(x.clone(), y.clone(), z.clone(), Term::Nil),
                        ]),
                        conj([
                            eq(Term::cons(a3, z.clone()), n.clone()),
                            bound_mulo(x, y, z, m.clone()),
                        ]),
                    ]),
                ])
            }),
        ])
    })
}
