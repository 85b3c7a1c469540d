//! Barendregt's variable convention: a check that no binder of a term is
//! drawn from a given list of names, and a refresh that renames offending
//! binders to fresh names so the check passes.

use std::collections::HashSet;

use crate::subst::{subst_go, FreshComputation, FreshCounter};
use crate::term::{max_var_index_of_names, Term, VarName};

/// Names that must not be used as binders. Duplicates are harmless.
#[derive(Clone, Debug, Default)]
pub struct AvoidSet {
    vars: Vec<VarName>,
    index: HashSet<VarName>,
}

impl AvoidSet {
    pub fn new(vars: Vec<VarName>) -> Self {
        let index = vars.iter().cloned().collect();
        AvoidSet { vars, index }
    }

    pub fn contains(&self, x: &VarName) -> bool {
        self.index.contains(x)
    }

    pub fn vars(&self) -> &[VarName] {
        &self.vars
    }
}

impl PartialEq for AvoidSet {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for AvoidSet {}

impl From<Vec<VarName>> for AvoidSet {
    fn from(vars: Vec<VarName>) -> Self {
        AvoidSet::new(vars)
    }
}

impl FromIterator<VarName> for AvoidSet {
    fn from_iter<I: IntoIterator<Item = VarName>>(iter: I) -> Self {
        AvoidSet::new(iter.into_iter().collect())
    }
}

/// Whether no abstraction anywhere in `t` binds a name from `avoid`.
pub fn satisfies_bvc(avoid: &AvoidSet, t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::App(f, a) => satisfies_bvc(avoid, f) && satisfies_bvc(avoid, a),
        Term::Abs(x, body) => !avoid.contains(x) && satisfies_bvc(avoid, body),
    }
}

/// Renames every binder of `t` that is in `avoid`, with an explicit
/// recursion budget shared with the inner renaming substitution.
pub fn refresh_fueled(
    fuel: usize,
    t: &Term,
    avoid: &AvoidSet,
    counter: FreshCounter,
) -> FreshComputation<Term> {
    let mut counter = counter;
    let result = refresh_go(fuel, t, avoid, &mut counter);
    FreshComputation { result, counter }
}

fn refresh_go(fuel: usize, t: &Term, avoid: &AvoidSet, counter: &mut FreshCounter) -> Option<Term> {
    let fuel = fuel.checked_sub(1)?;
    match t {
        Term::Var(_) => Some(t.clone()),
        Term::App(f, a) => {
            let f2 = refresh_go(fuel, f, avoid, counter)?;
            let a2 = refresh_go(fuel, a, avoid, counter)?;
            Some(Term::app(f2, a2))
        }
        Term::Abs(y, body) if avoid.contains(y) => {
            let y2 = counter.draw();
            let renamed = subst_go(fuel, body, y, &Term::var(y2.clone()), counter)?;
            let body2 = refresh_go(fuel, &renamed, avoid, counter)?;
            Some(Term::abs(y2, body2))
        }
        Term::Abs(y, body) => {
            let body2 = refresh_go(fuel, body, avoid, counter)?;
            Some(Term::abs(y.clone(), body2))
        }
    }
}

/// Counter seed for refreshing `t`: one past every generated index in
/// `avoid` and in `t`, bound or free.
pub fn refresh_start_counter(t: &Term, avoid: &AvoidSet) -> FreshCounter {
    FreshCounter::new(1 + max_var_index_of_names(avoid.vars()).max(t.max_var_index()))
}

/// An alpha-equivalent copy of `t` in which no binder is taken from `avoid`.
pub fn refresh(t: &Term, avoid: &AvoidSet) -> Term {
    let run = refresh_fueled(t.height(), t, avoid, refresh_start_counter(t, avoid));
    match run.result {
        Some(out) => out,
        None => panic!("refresh ran out of fuel on `{t}`; this is a bug"),
    }
}
