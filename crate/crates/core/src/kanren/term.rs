use std::fmt;
use std::rc::Rc;

/// A logic variable. Tokens are allocated per query from [`State`](super::State),
/// so two variables are equal iff they were allocated by the same call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub(crate) u32);

impl Var {
    pub fn index(self) -> u32 {
        self.0
    }
}

/// Constants: bits and small counters share the `Nat` variant, DFA state
/// labels are symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Nat(u8),
    Sym(&'static str),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Nat(n) => write!(f, "{n}"),
            Atom::Sym(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(Var),
    Atom(Atom),
    Nil,
    Pair(Rc<(Term, Term)>),
}

impl Term {
    pub fn nat(n: u8) -> Term {
        Term::Atom(Atom::Nat(n))
    }

    pub fn sym(s: &'static str) -> Term {
        Term::Atom(Atom::Sym(s))
    }

    pub fn cons(head: Term, tail: Term) -> Term {
        Term::Pair(Rc::new((head, tail)))
    }

    /// Proper list of the given elements.
    pub fn list<I>(items: I) -> Term
    where
        I: IntoIterator<Item = Term>,
        I::IntoIter: DoubleEndedIterator,
    {
        Term::improper(items, Term::Nil)
    }

    /// List of `items` ending in `tail` instead of `()`.
    pub fn improper<I>(items: I, tail: Term) -> Term
    where
        I: IntoIterator<Item = Term>,
        I::IntoIter: DoubleEndedIterator,
    {
        items
            .into_iter()
            .rev()
            .fold(tail, |acc, item| Term::cons(item, acc))
    }

    /// Proper list of bits, e.g. `Term::bits(&[1, 1])` for three.
    pub fn bits(bits: &[u8]) -> Term {
        Term::list(bits.iter().map(|&b| Term::nat(b)))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn as_pair(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Atom(_) | Term::Nil => true,
            Term::Pair(p) => p.0.is_ground() && p.1.is_ground(),
        }
    }
}

impl From<Var> for Term {
    fn from(v: Var) -> Self {
        Term::Var(v)
    }
}

impl From<Atom> for Term {
    fn from(a: Atom) -> Self {
        Term::Atom(a)
    }
}

impl From<u8> for Term {
    fn from(n: u8) -> Self {
        Term::nat(n)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "#{}", v.0),
            Term::Atom(a) => write!(f, "{a}"),
            Term::Nil => f.write_str("()"),
            Term::Pair(p) => {
                write!(f, "({}", p.0)?;
                let mut rest = &p.1;
                loop {
                    match rest {
                        Term::Nil => break,
                        Term::Pair(q) => {
                            write!(f, " {}", q.0)?;
                            rest = &q.1;
                        }
                        other => {
                            write!(f, " . {other}")?;
                            break;
                        }
                    }
                }
                f.write_str(")")
            }
        }
    }
}
