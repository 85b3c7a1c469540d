//! Substitution in three forms: naive replacement that may capture, a
//! checker for the relational capture-avoiding judgment, and a deterministic
//! capture-avoiding function driven by a fresh-name counter and fuel.

use crate::term::{max_var_index_of_terms, Term, VarName};

/// Replaces free occurrences of `x` in `t` by `u` without renaming binders.
/// Free variables of `u` can be captured.
pub fn simple_subst(t: &Term, x: &VarName, u: &Term) -> Term {
    match t {
        Term::Var(v) if v == x => u.clone(),
        Term::Var(_) => t.clone(),
        Term::App(f, a) => Term::app(simple_subst(f, x, u), simple_subst(a, x, u)),
        Term::Abs(y, _) if y == x => t.clone(),
        Term::Abs(y, body) => Term::abs(y.clone(), simple_subst(body, x, u)),
    }
}

/// A claim that substituting `replacement` for `var` in `subject` may yield
/// `claimed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstJudgment {
    pub subject: Term,
    pub var: VarName,
    pub replacement: Term,
    pub claimed: Term,
}

impl SubstJudgment {
    pub fn holds(&self) -> bool {
        check_subst(&self.subject, &self.var, &self.replacement, &self.claimed)
    }
}

/// Whether `claimed` is a capture-avoiding substitution of `u` for `y` in `t`.
///
/// Any renaming is accepted as long as the new binder is fresh: distinct
/// from both variables involved and absent from `t` and `u` altogether.
/// At a renamed abstraction the intermediate renamed body is rebuilt with
/// [`simple_subst`], which is the only possible result once the new binder
/// is absent from the body.
pub fn check_subst(t: &Term, y: &VarName, u: &Term, claimed: &Term) -> bool {
    match (t, claimed) {
        (Term::Var(x), _) if x == y => claimed == u,
        (Term::Var(_), _) => claimed == t,
        (Term::App(f, a), Term::App(f2, a2)) => {
            check_subst(f, y, u, f2) && check_subst(a, y, u, a2)
        }
        (Term::App(..), _) => false,
        (Term::Abs(x, _), _) if x == y => claimed == t,
        (Term::Abs(x, body), Term::Abs(z, body2)) => {
            if !u.occurs_free(x) {
                z == x && check_subst(body, y, u, body2)
            } else {
                let fresh = z != x && z != y && !u.mentions(z) && !body.mentions(z);
                fresh && {
                    let renamed = simple_subst(body, x, &Term::var(z.clone()));
                    check_subst(&renamed, y, u, body2)
                }
            }
        }
        (Term::Abs(..), _) => false,
    }
}

/// Source of fresh names: every `#k` with `k >= next` is unused by the
/// terms in play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreshCounter {
    pub next: u64,
}

impl FreshCounter {
    pub fn new(next: u64) -> Self {
        FreshCounter { next }
    }

    /// The name `#next` and the counter advanced past it.
    pub fn fresh(self) -> (VarName, FreshCounter) {
        (VarName::from_index(self.next), FreshCounter { next: self.next + 1 })
    }

    pub(crate) fn draw(&mut self) -> VarName {
        let (name, next) = self.fresh();
        *self = next;
        name
    }
}

/// Result of a fuelled computation: `result` is `None` only when fuel ran
/// out, and `counter` is wherever the counter had got to either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreshComputation<R> {
    pub result: Option<R>,
    pub counter: FreshCounter,
}

/// Capture-avoiding substitution with an explicit recursion budget.
///
/// Every recursive call consumes one unit of `fuel`. A binder that would
/// capture a free variable of `u` is renamed to the next counter name; the
/// body is first renamed and then substituted, both with the remaining fuel.
pub fn subst_fueled(
    fuel: usize,
    t: &Term,
    x: &VarName,
    u: &Term,
    counter: FreshCounter,
) -> FreshComputation<Term> {
    let mut counter = counter;
    let result = subst_go(fuel, t, x, u, &mut counter);
    FreshComputation { result, counter }
}

pub(crate) fn subst_go(
    fuel: usize,
    t: &Term,
    x: &VarName,
    u: &Term,
    counter: &mut FreshCounter,
) -> Option<Term> {
    let fuel = fuel.checked_sub(1)?;
    match t {
        Term::Var(v) if v == x => Some(u.clone()),
        Term::Var(_) => Some(t.clone()),
        Term::App(f, a) => {
            let f2 = subst_go(fuel, f, x, u, counter)?;
            let a2 = subst_go(fuel, a, x, u, counter)?;
            Some(Term::app(f2, a2))
        }
        Term::Abs(y, _) if y == x => Some(t.clone()),
        Term::Abs(y, body) if u.occurs_free(y) => {
            let z = counter.draw();
            let renamed = subst_go(fuel, body, y, &Term::var(z.clone()), counter)?;
            let body2 = subst_go(fuel, &renamed, x, u, counter)?;
            Some(Term::abs(z, body2))
        }
        Term::Abs(y, body) => {
            let body2 = subst_go(fuel, body, x, u, counter)?;
            Some(Term::abs(y.clone(), body2))
        }
    }
}

/// Counter seed for substituting into `t`: one past every generated index
/// in `t`, `u` and `x`.
pub fn subst_start_counter(t: &Term, x: &VarName, u: &Term) -> FreshCounter {
    let x_var = Term::var(x.clone());
    FreshCounter::new(1 + max_var_index_of_terms([t, u, &x_var]))
}

/// Capture-avoiding substitution of `u` for `x` in `t`.
///
/// Fuel is the height of `t` and the counter starts above every generated
/// name in sight; that budget always suffices.
pub fn subst(t: &Term, x: &VarName, u: &Term) -> Term {
    let start = subst_start_counter(t, x, u);
    let run = subst_fueled(t.height(), t, x, u, start);
    match run.result {
        Some(out) => out,
        None => panic!("substitution ran out of fuel on `{t}` [{x} -> {u}]; this is a bug"),
    }
}
