//! Context-indexed alpha-equivalence.
//!
//! A judgment relates a term under one list of enclosing binders to a term
//! under another. Variables are related by walking both binder lists from
//! the right in lockstep: they match when both hit their rightmost binder at
//! the same step, and two unbound variables match when both lists run out
//! together and the names are equal. Terms are related structurally, with
//! abstractions pushing their binders onto the respective lists.

use std::borrow::Borrow;

use crate::term::{Context, Term, VarName};

/// Whether `x` under `xs` and `y` under `ys` denote the same variable.
pub fn var_equiv(xs: &Context, ys: &Context, x: &VarName, y: &VarName) -> bool {
    var_equiv_in(xs.as_slice(), ys.as_slice(), x, y)
}

fn var_equiv_in<A, B>(xs: &[A], ys: &[B], x: &VarName, y: &VarName) -> bool
where
    A: Borrow<VarName>,
    B: Borrow<VarName>,
{
    let mut left = xs.iter().rev();
    let mut right = ys.iter().rev();
    loop {
        match (left.next(), right.next()) {
            (None, None) => return x == y,
            (Some(a), Some(b)) => match (x == a.borrow(), y == b.borrow()) {
                (true, true) => return true,
                (false, false) => continue,
                _ => return false,
            },
            _ => return false,
        }
    }
}

enum Work<'a> {
    Compare(&'a Term, &'a Term),
    Unbind,
}

/// Decides whether `t` under `xs` is alpha-equivalent to `u` under `ys`.
///
/// Runs on an explicit work stack, so arbitrarily deep terms are fine.
pub fn equiv(xs: &Context, ys: &Context, t: &Term, u: &Term) -> bool {
    let mut left: Vec<&VarName> = xs.iter().collect();
    let mut right: Vec<&VarName> = ys.iter().collect();
    let mut work = vec![Work::Compare(t, u)];
    while let Some(item) = work.pop() {
        match item {
            Work::Unbind => {
                left.pop();
                right.pop();
            }
            Work::Compare(Term::Var(x), Term::Var(y)) => {
                if !var_equiv_in(&left, &right, x, y) {
                    return false;
                }
            }
            Work::Compare(Term::App(f1, a1), Term::App(f2, a2)) => {
                work.push(Work::Compare(a1, a2));
                work.push(Work::Compare(f1, f2));
            }
            Work::Compare(Term::Abs(x, b1), Term::Abs(y, b2)) => {
                left.push(x);
                right.push(y);
                work.push(Work::Unbind);
                work.push(Work::Compare(b1, b2));
            }
            Work::Compare(..) => return false,
        }
    }
    true
}

/// Alpha-equivalence of two terms with no enclosing binders.
pub fn alpha_eq(t: &Term, u: &Term) -> bool {
    equiv(&Context::new(), &Context::new(), t, u)
}
