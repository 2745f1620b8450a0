use super::intmap::IntMap;
use super::term::{Term, Var};

type Bindings = IntMap<Term>;

/// Triangular substitution over a persistent map. Cloning is O(1) and
/// extension never disturbs the original.
#[derive(Clone, Default)]
pub struct Substitution {
    bindings: Bindings,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.len() == 0
    }

    pub fn lookup(&self, v: Var) -> Option<&Term> {
        self.bindings.get(v.0)
    }

    /// Follows variable bindings until a non-variable or an unbound variable.
    pub fn walk(&self, t: &Term) -> Term {
        let mut cur = t;
        while let Term::Var(v) = cur {
            match self.bindings.get(v.0) {
                Some(next) => cur = next,
                None => break,
            }
        }
        cur.clone()
    }

    /// Resolves `t` all the way down, leaving only unbound variables.
    pub fn walk_all(&self, t: &Term) -> Term {
        match self.walk(t) {
            Term::Pair(p) => Term::cons(self.walk_all(&p.0), self.walk_all(&p.1)),
            other => other,
        }
    }

    /// Binds `v` without an occurs check. Callers must guarantee `v` is
    /// unbound and does not occur in `t`.
    pub fn extend_unchecked(&self, v: Var, t: Term) -> Substitution {
        let mut bindings = self.bindings.clone();
        bindings.insert(v.0, t);
        Substitution { bindings }
    }

    pub fn occurs(&self, v: Var, t: &Term) -> bool {
        match self.walk(t) {
            Term::Var(w) => w == v,
            Term::Pair(p) => self.occurs(v, &p.0) || self.occurs(v, &p.1),
            _ => false,
        }
    }

    /// Most general extension unifying `u` and `v`, or `None` on clash or
    /// occurs-check failure.
    pub fn unify(&self, u: &Term, v: &Term) -> Option<Substitution> {
        let mut s = self.clone();
        if s.unify_in_place(u, v) {
            Some(s)
        } else {
            None
        }
    }

    fn unify_in_place(&mut self, u: &Term, v: &Term) -> bool {
        let u = self.walk(u);
        let v = self.walk(v);
        match (&u, &v) {
            (Term::Var(a), Term::Var(b)) if a == b => true,
            (Term::Var(a), _) => self.bind(*a, v),
            (_, Term::Var(b)) => self.bind(*b, u),
            (Term::Pair(p), Term::Pair(q)) => {
                std::rc::Rc::ptr_eq(p, q)
                    || (self.unify_in_place(&p.0, &q.0) && self.unify_in_place(&p.1, &q.1))
            }
            (Term::Atom(a), Term::Atom(b)) => a == b,
            (Term::Nil, Term::Nil) => true,
            _ => false,
        }
    }

    fn bind(&mut self, v: Var, t: Term) -> bool {
        if self.occurs(v, &t) {
            return false;
        }
        self.bindings.insert(v.0, t);
        true
    }
}

impl std::fmt::Debug for Substitution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(
                self.bindings
                    .iter()
                    .map(|(v, t)| (format!("#{v}"), t.to_string())),
            )
            .finish()
    }
}
