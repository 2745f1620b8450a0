use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::subst::Substitution;
use super::term::{Atom, Term, Var};

/// A reified solution: every unbound variable has been replaced by a
/// placeholder `_.n`, numbered by first occurrence, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Nil,
    Atom(Atom),
    Placeholder(usize),
    Pair(Box<Answer>, Box<Answer>),
}

pub fn reify(t: &Term, s: &Substitution) -> Answer {
    let resolved = s.walk_all(t);
    let mut names = HashMap::new();
    to_answer(&resolved, &mut names)
}

fn to_answer(t: &Term, names: &mut HashMap<Var, usize>) -> Answer {
    match t {
        Term::Var(v) => {
            let next = names.len();
            Answer::Placeholder(*names.entry(*v).or_insert(next))
        }
        Term::Atom(a) => Answer::Atom(*a),
        Term::Nil => Answer::Nil,
        Term::Pair(p) => {
            let head = to_answer(&p.0, names);
            let tail = to_answer(&p.1, names);
            Answer::Pair(Box::new(head), Box::new(tail))
        }
    }
}

impl Answer {
    pub fn nat(n: u8) -> Answer {
        Answer::Atom(Atom::Nat(n))
    }

    pub fn cons(head: Answer, tail: Answer) -> Answer {
        Answer::Pair(Box::new(head), Box::new(tail))
    }

    pub fn list(items: impl IntoIterator<Item = Answer>) -> Answer {
        let items: Vec<_> = items.into_iter().collect();
        items
            .into_iter()
            .rev()
            .fold(Answer::Nil, |acc, item| Answer::cons(item, acc))
    }

    /// Splits a list into its elements and final tail (`Nil` for proper lists).
    pub fn elements(&self) -> (Vec<&Answer>, &Answer) {
        let mut items = Vec::new();
        let mut cur = self;
        while let Answer::Pair(h, t) = cur {
            items.push(h.as_ref());
            cur = t;
        }
        (items, cur)
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Answer::Placeholder(_) => false,
            Answer::Nil | Answer::Atom(_) => true,
            Answer::Pair(h, t) => h.is_ground() && t.is_ground(),
        }
    }

    /// Converts back to an engine term, placeholders becoming the given
    /// variables.
    pub fn to_term(&self, var_for: &mut impl FnMut(usize) -> Term) -> Term {
        match self {
            Answer::Nil => Term::Nil,
            Answer::Atom(a) => Term::Atom(*a),
            Answer::Placeholder(n) => var_for(*n),
            Answer::Pair(h, t) => Term::cons(h.to_term(var_for), t.to_term(var_for)),
        }
    }

    /// Canonical renumbering of placeholders by first occurrence.
    pub fn canonical(&self) -> Answer {
        fn go(a: &Answer, names: &mut HashMap<usize, usize>) -> Answer {
            match a {
                Answer::Placeholder(n) => {
                    let next = names.len();
                    Answer::Placeholder(*names.entry(*n).or_insert(next))
                }
                Answer::Pair(h, t) => {
                    let h = go(h, names);
                    Answer::cons(h, go(t, names))
                }
                other => other.clone(),
            }
        }
        go(self, &mut HashMap::new())
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Nil => f.write_str("()"),
            Answer::Atom(a) => write!(f, "{a}"),
            Answer::Placeholder(n) => write!(f, "_.{n}"),
            Answer::Pair(h, t) => {
                write!(f, "({h}")?;
                let mut rest = t.as_ref();
                loop {
                    match rest {
                        Answer::Nil => break,
                        Answer::Pair(h, t) => {
                            write!(f, " {h}")?;
                            rest = t;
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

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseAnswerError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("trailing input after answer")]
    TrailingInput,
}

const SYMBOLS: [&str; 3] = ["q1", "q2", "q3"];

impl FromStr for Answer {
    type Err = ParseAnswerError;

    fn from_str(s: &str) -> Result<Answer, ParseAnswerError> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let answer = parse_datum(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(ParseAnswerError::TrailingInput);
        }
        Ok(answer)
    }
}

fn tokenize(s: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if let Some(st) = start.take() {
                tokens.push(&s[st..i]);
            }
            if !c.is_whitespace() {
                tokens.push(&s[i..i + 1]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        tokens.push(&s[st..]);
    }
    tokens
}

fn parse_datum(tokens: &[&str], pos: &mut usize) -> Result<Answer, ParseAnswerError> {
    let tok = *tokens.get(*pos).ok_or(ParseAnswerError::UnexpectedEnd)?;
    *pos += 1;
    match tok {
        "(" => parse_list_rest(tokens, pos),
        ")" | "." => Err(ParseAnswerError::UnexpectedToken(tok.to_string())),
        _ => parse_atom(tok),
    }
}

fn parse_list_rest(tokens: &[&str], pos: &mut usize) -> Result<Answer, ParseAnswerError> {
    let mut items = Vec::new();
    loop {
        match tokens.get(*pos).copied() {
            None => return Err(ParseAnswerError::UnexpectedEnd),
            Some(")") => {
                *pos += 1;
                return Ok(Answer::list(items));
            }
            Some(".") if !items.is_empty() => {
                *pos += 1;
                let tail = parse_datum(tokens, pos)?;
                match tokens.get(*pos).copied() {
                    Some(")") => *pos += 1,
                    Some(t) => return Err(ParseAnswerError::UnexpectedToken(t.to_string())),
                    None => return Err(ParseAnswerError::UnexpectedEnd),
                }
                return Ok(items
                    .into_iter()
                    .rev()
                    .fold(tail, |acc, item| Answer::cons(item, acc)));
            }
            Some(_) => items.push(parse_datum(tokens, pos)?),
        }
    }
}

fn parse_atom(tok: &str) -> Result<Answer, ParseAnswerError> {
    if let Some(n) = tok.strip_prefix("_.") {
        return n
            .parse()
            .map(Answer::Placeholder)
            .map_err(|_| ParseAnswerError::UnknownAtom(tok.to_string()));
    }
    if let Ok(n) = tok.parse::<u8>() {
        return Ok(Answer::nat(n));
    }
    SYMBOLS
        .iter()
        .find(|s| **s == tok)
        .map(|s| Answer::Atom(Atom::Sym(s)))
        .ok_or_else(|| ParseAnswerError::UnknownAtom(tok.to_string()))
}
