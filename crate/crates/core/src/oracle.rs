//! Ground truth for testing the alpha-equivalence procedures: a nameless
//! (de Bruijn) conversion, an index-based variable check, and an exhaustive
//! enumerator of small terms.
//!
//! Nothing here shares code with [`crate::alpha`]; agreement between the two
//! is evidence rather than a tautology.

use std::fmt;

use crate::term::{Context, Term, VarName};

/// A term whose bound variables are distances to their binder
/// (0 = innermost enclosing abstraction).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamelessTerm {
    Bound(usize),
    Free(VarName),
    App(Box<NamelessTerm>, Box<NamelessTerm>),
    Abs(Box<NamelessTerm>),
}

/// Converts `t` under the binders `ctx` into nameless form. A variable
/// resolves to its rightmost binder, or stays free if there is none.
pub fn to_nameless(ctx: &Context, t: &Term) -> NamelessTerm {
    let mut binders: Vec<&VarName> = ctx.iter().collect();
    convert(&mut binders, t)
}

fn convert<'a>(binders: &mut Vec<&'a VarName>, t: &'a Term) -> NamelessTerm {
    match t {
        Term::Var(x) => match binders.iter().rev().position(|b| *b == x) {
            Some(i) => NamelessTerm::Bound(i),
            None => NamelessTerm::Free(x.clone()),
        },
        Term::App(f, a) => {
            NamelessTerm::App(Box::new(convert(binders, f)), Box::new(convert(binders, a)))
        }
        Term::Abs(x, body) => {
            binders.push(x);
            let inner = convert(binders, body);
            binders.pop();
            NamelessTerm::Abs(Box::new(inner))
        }
    }
}

/// Variable check by index arithmetic: both bound at the same distance, or
/// both unbound in equally long contexts with equal names.
pub fn oracle_var_equiv(xs: &Context, ys: &Context, x: &VarName, y: &VarName) -> bool {
    match (xs.rightmost_distance(x), ys.rightmost_distance(y)) {
        (Some(i), Some(j)) => i == j,
        (None, None) => xs.len() == ys.len() && x == y,
        _ => false,
    }
}

/// Context-indexed alpha-equivalence by comparing nameless forms. Unbound
/// variables additionally need equally long contexts, as in the variable
/// check.
pub fn oracle_equiv(xs: &Context, ys: &Context, t: &Term, u: &Term) -> bool {
    let (n, m) = (to_nameless(xs, t), to_nameless(ys, u));
    n == m && (xs.len() == ys.len() || !has_free(&n))
}

fn has_free(n: &NamelessTerm) -> bool {
    match n {
        NamelessTerm::Bound(_) => false,
        NamelessTerm::Free(_) => true,
        NamelessTerm::App(f, a) => has_free(f) || has_free(a),
        NamelessTerm::Abs(body) => has_free(body),
    }
}

/// Closed alpha-equivalence by comparing nameless forms.
pub fn oracle_alpha_eq(t: &Term, u: &Term) -> bool {
    let empty = Context::new();
    to_nameless(&empty, t) == to_nameless(&empty, u)
}

impl fmt::Display for NamelessTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamelessTerm::Bound(i) => write!(f, "{i}"),
            NamelessTerm::Free(x) => write!(f, "{x}"),
            NamelessTerm::Abs(body) => write!(f, "\\. {body}"),
            NamelessTerm::App(fun, arg) => {
                match **fun {
                    NamelessTerm::Abs(_) => write!(f, "({fun})")?,
                    _ => write!(f, "{fun}")?,
                }
                match **arg {
                    NamelessTerm::App(..) | NamelessTerm::Abs(_) => write!(f, " ({arg})"),
                    _ => write!(f, " {arg}"),
                }
            }
        }
    }
}

/// Streams every term of at most `max_nodes` nodes over `names`, smallest
/// first. Within a size, variables come before applications, applications
/// before abstractions; applications are ordered by the size of their
/// function part and then by the order of their parts, abstractions by
/// binder (in `names` order) and then by body.
#[derive(Clone, Debug)]
pub struct TermEnumerator {
    names: Vec<VarName>,
    max_nodes: usize,
    // levels[k] holds every term with exactly k + 1 nodes
    levels: Vec<Vec<Term>>,
    cursor: usize,
}

impl TermEnumerator {
    pub fn new(max_nodes: usize, names: &[VarName]) -> Self {
        TermEnumerator { names: names.to_vec(), max_nodes, levels: Vec::new(), cursor: 0 }
    }

    fn build_level(&self, size: usize) -> Vec<Term> {
        if size == 1 {
            return self.names.iter().cloned().map(Term::Var).collect();
        }
        let mut out = Vec::new();
        for fun_size in 1..size - 1 {
            let arg_size = size - 1 - fun_size;
            for f in &self.levels[fun_size - 1] {
                for a in &self.levels[arg_size - 1] {
                    out.push(Term::app(f.clone(), a.clone()));
                }
            }
        }
        for x in &self.names {
            for body in &self.levels[size - 2] {
                out.push(Term::abs(x.clone(), body.clone()));
            }
        }
        out
    }
}

impl Iterator for TermEnumerator {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        loop {
            if let Some(level) = self.levels.last() {
                if let Some(t) = level.get(self.cursor) {
                    self.cursor += 1;
                    return Some(t.clone());
                }
            }
            let size = self.levels.len() + 1;
            if size > self.max_nodes || self.names.is_empty() {
                return None;
            }
            let level = self.build_level(size);
            self.levels.push(level);
            self.cursor = 0;
        }
    }
}

/// All terms of at most `max_nodes` nodes over `names`, in the order of
/// [`TermEnumerator`].
pub fn enumerate_terms(max_nodes: usize, names: &[VarName]) -> Vec<Term> {
    TermEnumerator::new(max_nodes, names).collect()
}
