use std::fmt;
use std::rc::Rc;

use super::stream::{grow, Stream};
use super::term::{Term, Var};
use super::State;

/// A function from a state to a stream of states.
///
/// The common combinators are plain data so that building a relation body
/// costs few allocations; arbitrary goals go through [`Goal::new`].
#[derive(Clone)]
pub struct Goal(Kind);

#[derive(Clone)]
enum Kind {
    Succeed,
    Fail,
    Eq(Term, Term),
    Conj(Rc<[Goal]>),
    Disj(Rc<[Goal]>),
    Fresh(u32, Rc<dyn Fn(u32) -> Goal>),
    Delay(Rc<dyn Fn() -> Goal>),
    Custom(Rc<dyn Fn(State) -> Stream>),
}

impl Goal {
    pub fn new(f: impl Fn(State) -> Stream + 'static) -> Goal {
        Goal(Kind::Custom(Rc::new(f)))
    }

    pub fn apply(&self, st: State) -> Stream {
        match &self.0 {
            Kind::Succeed => Stream::Unit(st),
            Kind::Fail => Stream::Empty,
            Kind::Eq(u, v) => match st.subst.unify(u, v) {
                Some(subst) => Stream::Unit(State { subst, ..st }),
                None => Stream::Empty,
            },
            Kind::Conj(goals) => grow(|| {
                goals[1..]
                    .iter()
                    .fold(goals[0].apply(st), |s, g| s.bind(g.clone()))
            }),
            Kind::Disj(branches) => {
                let branches = branches.clone();
                Stream::suspend(move || mplus_from(branches, 0, st))
            }
            Kind::Fresh(arity, body) => {
                let mut st = st;
                let first = st.next_var;
                st.next_var += arity;
                let body = body.clone();
                Stream::suspend(move || body(first).apply(st))
            }
            Kind::Delay(producer) => {
                let producer = producer.clone();
                Stream::suspend(move || producer().apply(st))
            }
            Kind::Custom(f) => grow(|| f(st)),
        }
    }
}

impl fmt::Debug for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.0 {
            Kind::Succeed => "succeed",
            Kind::Fail => "fail",
            Kind::Eq(..) => "eq",
            Kind::Conj(_) => "conj",
            Kind::Disj(_) => "disj",
            Kind::Fresh(..) => "fresh",
            Kind::Delay(_) => "delay",
            Kind::Custom(_) => "custom",
        };
        write!(f, "Goal({name})")
    }
}

pub fn succeed() -> Goal {
    Goal(Kind::Succeed)
}

pub fn fail() -> Goal {
    Goal(Kind::Fail)
}

/// Unification goal; succeeds at most once.
pub fn eq(u: impl Into<Term>, v: impl Into<Term>) -> Goal {
    Goal(Kind::Eq(u.into(), v.into()))
}

/// Left-to-right conjunction.
pub fn conj(goals: impl IntoIterator<Item = Goal>) -> Goal {
    let goals: Rc<[Goal]> = goals.into_iter().collect();
    assert!(!goals.is_empty(), "conj needs at least one goal");
    Goal(Kind::Conj(goals))
}

/// Interleaving disjunction. The call suspends once, then the first branch
/// runs eagerly while the remaining ones are folded right, each behind a
/// suspension.
pub fn disj(branches: impl IntoIterator<Item = Goal>) -> Goal {
    let branches: Rc<[Goal]> = branches.into_iter().collect();
    assert!(!branches.is_empty(), "disj needs at least one branch");
    Goal(Kind::Disj(branches))
}

fn mplus_from(branches: Rc<[Goal]>, i: usize, st: State) -> Stream {
    let head = branches[i].apply(st.clone());
    if i + 1 == branches.len() {
        head
    } else {
        head.mplus(Box::new(move || mplus_from(branches, i + 1, st)))
    }
}

/// Introduces `N` fresh variables scoped over the goal built by `body`.
/// Like `disj`, the body runs behind one suspension.
pub fn fresh<const N: usize>(body: impl Fn([Term; N]) -> Goal + 'static) -> Goal {
    Goal(Kind::Fresh(
        N as u32,
        Rc::new(move |first| body(std::array::from_fn(|i| Term::Var(Var(first + i as u32))))),
    ))
}

/// Suspends, then builds the goal from `producer` on each forcing.
/// Every recursive relation is defined through this.
pub fn delay(producer: impl Fn() -> Goal + 'static) -> Goal {
    Goal(Kind::Delay(Rc::new(producer)))
}
