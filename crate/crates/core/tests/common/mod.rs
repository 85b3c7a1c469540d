//! Seeded instance generators shared by the integration suites.
//!
//! Everything here is built from the term syntax and the nameless form only;
//! none of it calls the alpha-equivalence or substitution code under test.

#![allow(dead_code)]

use lamb::oracle::{to_nameless, NamelessTerm};
use lamb::{Context, Term, VarName};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn v(s: &str) -> VarName {
    VarName::new(s).unwrap()
}

pub fn t(s: &str) -> Term {
    lamb::parse(s).unwrap()
}

pub fn names(ns: &[&str]) -> Vec<VarName> {
    ns.iter().map(|s| v(s)).collect()
}

pub fn ctx(ns: &[&str]) -> Context {
    names(ns).into()
}

pub struct Gen {
    pub rng: ChaCha8Rng,
    /// Names used for variables and binders; small, so that shadowing and
    /// capture happen often.
    pub pool: Vec<VarName>,
    /// Extra candidates for renamed binders.
    pub spare: Vec<VarName>,
    /// Probability of drawing a generated `#k` name instead of a pool name.
    pub generated_rate: f64,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: names(&["x", "y", "z", "a"]),
            spare: names(&["p", "q", "r", "w"]),
            generated_rate: 0.0,
        }
    }

    pub fn with_generated(mut self, rate: f64) -> Self {
        self.generated_rate = rate;
        self
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn name(&mut self) -> VarName {
        if self.generated_rate > 0.0 && self.rng.gen_bool(self.generated_rate) {
            VarName::from_index(self.rng.gen_range(0..6))
        } else {
            self.pool.choose(&mut self.rng).unwrap().clone()
        }
    }

    pub fn name_from(&mut self, from: &[VarName]) -> VarName {
        from.choose(&mut self.rng).unwrap().clone()
    }

    /// A name that is not `avoid`ed, drawn from the pool when possible.
    pub fn name_except(&mut self, avoid: &[VarName]) -> VarName {
        let mut candidates: Vec<VarName> =
            self.pool.iter().chain(&self.spare).filter(|n| !avoid.contains(n)).cloned().collect();
        candidates.shuffle(&mut self.rng);
        candidates.pop().unwrap_or_else(|| {
            (0..).map(|k| v(&format!("n{k}"))).find(|n| !avoid.contains(n)).unwrap()
        })
    }

    /// A random term with roughly `size` nodes.
    pub fn term(&mut self, size: usize) -> Term {
        let binders = self.pool.clone();
        self.term_binding(size, &binders)
    }

    /// A random term whose binders all come from `binders`; variables may
    /// be any pool name.
    pub fn term_binding(&mut self, size: usize, binders: &[VarName]) -> Term {
        if size <= 1 || (binders.is_empty() && size <= 2) {
            return Term::var(self.name());
        }
        let roll = self.below(10);
        if roll < 4 && !binders.is_empty() {
            let x = if self.generated_rate > 0.0 && self.rng.gen_bool(self.generated_rate) {
                VarName::from_index(self.rng.gen_range(0..6))
            } else {
                self.name_from(binders)
            };
            Term::abs(x, self.term_binding(size - 1, binders))
        } else if roll < 9 || binders.is_empty() {
            let left = self.rng.gen_range(1..size);
            let f = self.term_binding(left, binders);
            let a = self.term_binding(size - left, binders);
            Term::app(f, a)
        } else {
            Term::var(self.name())
        }
    }

    pub fn sized_term(&mut self) -> Term {
        let size = self.rng.gen_range(1..14);
        self.term(size)
    }

    pub fn context(&mut self, max_len: usize) -> Context {
        let len = self.rng.gen_range(0..=max_len);
        (0..len).map(|_| self.name()).collect()
    }

    pub fn context_of_len(&mut self, len: usize) -> Context {
        (0..len).map(|_| self.name()).collect()
    }

    /// Rebuilds a nameless term under the named binders `ctx`, choosing
    /// random binder names that neither capture nor shadow anything used
    /// below them. `None` when `ctx` itself cannot express the term.
    pub fn realize(&mut self, ctx: &Context, n: &NamelessTerm) -> Option<Term> {
        let mut binders: Vec<VarName> = ctx.iter().cloned().collect();
        self.rebuild(&mut binders, n)
    }

    fn rebuild(&mut self, binders: &mut Vec<VarName>, n: &NamelessTerm) -> Option<Term> {
        match n {
            NamelessTerm::Bound(i) => {
                let name = binders.get(binders.len().checked_sub(i + 1)?)?.clone();
                let visible = binders.iter().rev().position(|b| *b == name);
                (visible == Some(*i)).then(|| Term::var(name))
            }
            NamelessTerm::Free(g) => (!binders.contains(g)).then(|| Term::var(g.clone())),
            NamelessTerm::App(f, a) => {
                let f = self.rebuild(binders, f)?;
                let a = self.rebuild(binders, a)?;
                Some(Term::app(f, a))
            }
            NamelessTerm::Abs(body) => {
                let mut forbidden = Vec::new();
                escaping_names(body, 0, binders, &mut forbidden);
                let mut candidates: Vec<VarName> =
                    self.pool.iter().chain(&self.spare).cloned().collect();
                candidates.shuffle(&mut self.rng);
                let name = candidates
                    .into_iter()
                    .find(|c| !forbidden.contains(c))
                    .unwrap_or_else(|| self.name_except(&forbidden));
                binders.push(name.clone());
                let inner = self.rebuild(binders, body);
                binders.pop();
                Some(Term::abs(name, inner?))
            }
        }
    }

    /// A random alpha-variant of `t` under the same binders.
    pub fn perturb_in(&mut self, ctx: &Context, t: &Term) -> Term {
        let n = to_nameless(ctx, t);
        self.realize(ctx, &n).expect("a term always re-expresses under its own context")
    }

    /// A random alpha-variant of a closed-context term.
    pub fn perturb(&mut self, t: &Term) -> Term {
        self.perturb_in(&Context::new(), t)
    }

    /// Two context-indexed terms that are related by construction: a term
    /// wrapped in `depth` binders and a random variant of it, each with the
    /// binders peeled back off into its context.
    pub fn related(&mut self, depth: usize, size: usize) -> (Context, Term, Context, Term) {
        let body = self.term(size);
        let wrapped = self.wrap(depth, body);
        let variant = self.perturb(&wrapped);
        let (xs, t) = peel(depth, &wrapped);
        let (ys, u) = peel(depth, &variant);
        (xs, t, ys, u)
    }

    pub fn wrap(&mut self, depth: usize, body: Term) -> Term {
        let binders: Vec<VarName> = (0..depth).map(|_| self.name()).collect();
        binders.into_iter().rev().fold(body, |acc, b| Term::abs(b, acc))
    }

    /// A witness of the relational substitution `t[y -> u]`, picking a
    /// random legal fresh name at every renamed binder.
    pub fn relational_subst(&mut self, t: &Term, y: &VarName, u: &Term) -> Term {
        match t {
            Term::Var(x) if x == y => u.clone(),
            Term::Var(_) => t.clone(),
            Term::App(f, a) => {
                Term::app(self.relational_subst(f, y, u), self.relational_subst(a, y, u))
            }
            Term::Abs(x, _) if x == y => t.clone(),
            Term::Abs(x, body) if !free_in(x, u) => {
                Term::abs(x.clone(), self.relational_subst(body, y, u))
            }
            Term::Abs(x, body) => {
                let mut taken = vec![x.clone(), y.clone()];
                taken.extend(vars_of(u));
                taken.extend(vars_of(body));
                let z = if self.chance(0.3) {
                    let start = self.rng.gen_range(0..8);
                    (start..).map(VarName::from_index).find(|c| !taken.contains(c)).unwrap()
                } else {
                    self.name_except(&taken)
                };
                let renamed = self.relational_subst(body, x, &Term::var(z.clone()));
                Term::abs(z, self.relational_subst(&renamed, y, u))
            }
        }
    }
}

/// Splits `depth` leading abstractions off `t` into a context.
pub fn peel(depth: usize, t: &Term) -> (Context, Term) {
    let mut ctx = Context::new();
    let mut cur = t;
    for _ in 0..depth {
        match cur {
            Term::Abs(x, body) => {
                ctx.push(x.clone());
                cur = body;
            }
            _ => panic!("fewer than {depth} leading binders"),
        }
    }
    (ctx, cur.clone())
}

/// Names that a binder placed above `n` (nested `depth` binders deep
/// already) must not take: free names and outer binders referenced below.
fn escaping_names(n: &NamelessTerm, depth: usize, outer: &[VarName], out: &mut Vec<VarName>) {
    match n {
        NamelessTerm::Bound(i) => {
            if *i > depth {
                let from_right = i - depth - 1;
                if let Some(name) = outer.len().checked_sub(from_right + 1).map(|k| &outer[k]) {
                    out.push(name.clone());
                }
            }
        }
        NamelessTerm::Free(g) => out.push(g.clone()),
        NamelessTerm::App(f, a) => {
            escaping_names(f, depth, outer, out);
            escaping_names(a, depth, outer, out);
        }
        NamelessTerm::Abs(body) => escaping_names(body, depth + 1, outer, out),
    }
}

/// Independent restatement of "x occurs free in t".
pub fn free_in(x: &VarName, t: &Term) -> bool {
    match t {
        Term::Var(y) => y == x,
        Term::App(f, a) => free_in(x, f) || free_in(x, a),
        Term::Abs(y, body) => y != x && free_in(x, body),
    }
}

pub fn vars_of(t: &Term) -> Vec<VarName> {
    match t {
        Term::Var(y) => vec![y.clone()],
        Term::App(f, a) => {
            let mut out = vars_of(f);
            out.extend(vars_of(a));
            out
        }
        Term::Abs(y, body) => {
            let mut out = vars_of(body);
            out.push(y.clone());
            out
        }
    }
}

pub fn binders_of(t: &Term) -> Vec<VarName> {
    match t {
        Term::Var(_) => vec![],
        Term::App(f, a) => {
            let mut out = binders_of(f);
            out.extend(binders_of(a));
            out
        }
        Term::Abs(y, body) => {
            let mut out = binders_of(body);
            out.push(y.clone());
            out
        }
    }
}

/// Concatenation of contexts, `a ++ b`.
pub fn cat(parts: &[&[VarName]]) -> Context {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}
