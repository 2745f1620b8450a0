//! Lazy solution streams with explicit suspensions.
//!
//! `mplus` swaps its operands every time it meets a suspension, which is
//! what makes disjunction fair: an infinite branch cannot starve the
//! branches after it.

use super::goal::Goal;
use super::State;

pub type Thunk = Box<dyn FnOnce() -> Stream>;

// Deep relation recursion nests thunks; forcing one walks the whole nest.
const RED_ZONE: usize = 128 * 1024;
const STACK_SEGMENT: usize = 8 * 1024 * 1024;

pub enum Stream {
    Empty,
    Suspended(Thunk),
    Unit(State),
    Choice(State, Thunk),
}

#[inline]
pub(crate) fn force(f: Thunk) -> Stream {
    stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, f)
}

#[inline]
pub(crate) fn grow<R>(f: impl FnOnce() -> R) -> R {
    stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, f)
}

impl Stream {
    pub fn suspend(f: impl FnOnce() -> Stream + 'static) -> Stream {
        Stream::Suspended(Box::new(f))
    }

    /// Interleaves `self` with the stream produced by `rest`.
    pub fn mplus(self, rest: Thunk) -> Stream {
        match self {
            Stream::Empty => force(rest),
            Stream::Suspended(f) => Stream::suspend(move || force(rest).mplus(f)),
            Stream::Unit(st) => Stream::Choice(st, rest),
            Stream::Choice(st, f) => Stream::Choice(st, Box::new(move || force(rest).mplus(f))),
        }
    }

    /// Feeds every state of `self` through `goal`.
    pub fn bind(self, goal: Goal) -> Stream {
        match self {
            Stream::Empty => Stream::Empty,
            Stream::Suspended(f) => Stream::suspend(move || force(f).bind(goal)),
            Stream::Unit(st) => goal.apply(st),
            Stream::Choice(st, f) => {
                let head = goal.apply(st);
                head.mplus(Box::new(move || force(f).bind(goal)))
            }
        }
    }

    /// Lazily yields states, forcing suspensions as needed.
    pub fn into_states(self) -> States {
        States {
            pending: Some(Box::new(move || self)),
        }
    }
}

/// Iterator over the states of a [`Stream`].
pub struct States {
    pending: Option<Thunk>,
}

impl Iterator for States {
    type Item = State;

    fn next(&mut self) -> Option<State> {
        let mut stream = force(self.pending.take()?);
        loop {
            match stream {
                Stream::Empty => return None,
                Stream::Suspended(f) => stream = force(f),
                Stream::Unit(st) => return Some(st),
                Stream::Choice(st, f) => {
                    self.pending = Some(f);
                    return Some(st);
                }
            }
        }
    }
}
