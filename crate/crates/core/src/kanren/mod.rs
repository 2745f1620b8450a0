//! A small relational engine: terms, triangular substitutions with an
//! occurs check, goal combinators over interleaving streams, and
//! reification.

mod goal;
mod intmap;
mod reify;
mod stream;
mod subst;
mod term;

pub use goal::{conj, delay, disj, eq, fail, fresh, succeed, Goal};
pub use reify::{reify, Answer, ParseAnswerError};
pub use stream::{States, Stream};
pub use subst::Substitution;
pub use term::{Atom, Term, Var};

/// Substitution plus the per-query variable counter.
#[derive(Clone, Debug, Default)]
pub struct State {
    pub subst: Substitution,
    pub(crate) next_var: u32,
}

impl State {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh_var(&mut self) -> Var {
        let v = Var(self.next_var);
        self.next_var += 1;
        v
    }

    pub fn next_var(&self) -> u32 {
        self.next_var
    }
}

/// Lazily reified answers for the query variable, in search order.
///
/// The iterator is infinite whenever the query has infinitely many
/// solutions.
pub fn solutions(query: impl FnOnce(Term) -> Goal) -> impl Iterator<Item = Answer> {
    let mut st = State::new();
    let q = Term::Var(st.fresh_var());
    let goal = query(q.clone());
    goal.apply(st)
        .into_states()
        .map(move |st| reify(&q, &st.subst))
}

/// At most `limit` answers.
pub fn run(limit: usize, query: impl FnOnce(Term) -> Goal) -> Vec<Answer> {
    solutions(query).take(limit).collect()
}

/// Every answer. Does not return if the query has infinitely many.
pub fn run_star(query: impl FnOnce(Term) -> Goal) -> Vec<Answer> {
    solutions(query).collect()
}
