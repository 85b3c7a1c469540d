//! Deterministic workloads for the kernel benchmarks.

use lamb::{Term, VarName};

fn name(s: &str) -> VarName {
    VarName::new(s).expect("valid name")
}

/// `\x0. \x1. ... \x{n-1}. x0 x1 ... x{n-1}`, with binder names drawn from
/// `prefix`.
pub fn nested_binders(prefix: &str, n: usize) -> Term {
    let names: Vec<VarName> = (0..n).map(|i| name(&format!("{prefix}{i}"))).collect();
    let body = names
        .iter()
        .skip(1)
        .fold(Term::var(names[0].clone()), |acc, x| Term::app(acc, Term::var(x.clone())));
    names.iter().rev().fold(body, |acc, x| Term::abs(x.clone(), acc))
}

/// A balanced application tree of the given depth over the leaves `x` and
/// `y`, each subtree wrapped in a binder that captures `y`.
pub fn capture_heavy(depth: usize) -> Term {
    if depth == 0 {
        return Term::app(Term::var(name("x")), Term::var(name("y")));
    }
    let half = capture_heavy(depth - 1);
    Term::abs(name("y"), Term::app(half.clone(), half))
}

/// A right-nested chain of `n` abstractions that all bind the same name,
/// ending in an application of that name to a free variable.
pub fn shadowing_chain(n: usize) -> Term {
    let x = name("x");
    let body = Term::app(Term::var(x.clone()), Term::var(name("free")));
    (0..n).fold(body, |acc, _| Term::abs(x.clone(), acc))
}

/// Church numeral `n` in the usual `\f. \x. f (f ... x)` form.
pub fn church(n: usize) -> Term {
    let (f, x) = (name("f"), name("x"));
    let body = (0..n).fold(Term::var(x.clone()), |acc, _| Term::app(Term::var(f.clone()), acc));
    Term::abs(f, Term::abs(x, body))
}

/// Church multiplication applied to two numerals.
pub fn church_product(m: usize, n: usize) -> Term {
    let mul = lamb::parse(r"\m. \n. \f. m (n f)").expect("valid term");
    Term::app(Term::app(mul, church(m)), church(n))
}
