//! Beta reduction on top of the substitution functions.
//!
//! Two strategies are offered. Normal order contracts the leftmost-outermost
//! redex anywhere, including under abstractions, and reaches a normal form
//! whenever one exists. Call-by-name contracts only the head redex and stops
//! at abstractions and at applications headed by a variable.

use crate::bvc::{refresh, AvoidSet};
use crate::subst::{simple_subst, subst};
use crate::term::{Term, VarName};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[default]
    NormalOrder,
    CallByName,
}

/// How the body of a redex receives its argument.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SubstMode {
    /// Capture-avoiding substitution.
    #[default]
    CaptureAvoiding,
    /// Refresh the body against the argument's free variables and the
    /// parameter, then substitute naively.
    BvcRefresh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReductionConfig {
    pub strategy: Strategy,
    pub max_steps: usize,
    pub subst_mode: SubstMode,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            strategy: Strategy::NormalOrder,
            max_steps: 1000,
            subst_mode: SubstMode::CaptureAvoiding,
        }
    }
}

/// Outcome of [`normalize`]. `normal` tells whether `term` has no redex left
/// under the chosen strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub term: Term,
    pub steps: usize,
    pub normal: bool,
}

/// The contractum of the redex `(\x. body) arg`.
pub fn contract(x: &VarName, body: &Term, arg: &Term, mode: SubstMode) -> Term {
    match mode {
        SubstMode::CaptureAvoiding => subst(body, x, arg),
        SubstMode::BvcRefresh => {
            let mut avoid = arg.free_vars();
            avoid.push(x.clone());
            let fresh_body = refresh(body, &AvoidSet::new(avoid));
            simple_subst(&fresh_body, x, arg)
        }
    }
}

/// One normal-order step: contracts the leftmost-outermost redex, or
/// returns `None` if `t` is in normal form.
pub fn step_beta(t: &Term, mode: SubstMode) -> Option<Term> {
    step(t, Strategy::NormalOrder, mode)
}

pub fn step(t: &Term, strategy: Strategy, mode: SubstMode) -> Option<Term> {
    match t {
        Term::Var(_) => None,
        Term::App(f, a) => {
            if let Term::Abs(x, body) = &**f {
                return Some(contract(x, body, a, mode));
            }
            if let Some(f2) = step(f, strategy, mode) {
                return Some(Term::app(f2, (**a).clone()));
            }
            match strategy {
                Strategy::NormalOrder => {
                    step(a, strategy, mode).map(|a2| Term::app((**f).clone(), a2))
                }
                Strategy::CallByName => None,
            }
        }
        Term::Abs(x, body) => match strategy {
            Strategy::NormalOrder => step(body, strategy, mode).map(|b| Term::abs(x.clone(), b)),
            Strategy::CallByName => None,
        },
    }
}

/// Whether `t` has no redex the strategy would contract.
pub fn is_normal(t: &Term, strategy: Strategy) -> bool {
    match t {
        Term::Var(_) => true,
        Term::App(f, a) => {
            !matches!(**f, Term::Abs(..))
                && is_normal(f, strategy)
                && (strategy == Strategy::CallByName || is_normal(a, strategy))
        }
        Term::Abs(_, body) => strategy == Strategy::CallByName || is_normal(body, strategy),
    }
}

/// Reduces for at most `cfg.max_steps` steps.
pub fn normalize(t: &Term, cfg: &ReductionConfig) -> Reduction {
    let mut term = t.clone();
    let mut steps = 0;
    while steps < cfg.max_steps {
        match step(&term, cfg.strategy, cfg.subst_mode) {
            Some(next) => {
                term = next;
                steps += 1;
            }
            None => return Reduction { term, steps, normal: true },
        }
    }
    let normal = is_normal(&term, cfg.strategy);
    Reduction { term, steps, normal }
}
