//! Named lambda terms, variable names, binder contexts and the syntactic
//! measures every other module builds on.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Prefix reserved for machine-generated names. User identifiers cannot
/// start with it, so generated names never collide with user names.
pub const GENERATED_PREFIX: char = '#';

/// A variable identifier.
///
/// Two namespaces share this type: user names, which follow the identifier
/// grammar (`letter { letter | digit | "_" }`), and generated names `#n`
/// produced by [`VarName::from_index`]. Equality is plain text equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("variable name is empty")]
    Empty,
    #[error("`{0}` is in the reserved namespace for generated names")]
    Reserved(String),
    #[error("`{0}` is not an identifier (expected a letter followed by letters, digits or `_`)")]
    Malformed(String),
}

impl VarName {
    /// Builds a user name, rejecting anything outside the identifier grammar.
    pub fn new(name: &str) -> Result<Self, NameError> {
        let mut chars = name.chars();
        match chars.next() {
            None => return Err(NameError::Empty),
            Some(GENERATED_PREFIX) => return Err(NameError::Reserved(name.to_owned())),
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(_) => return Err(NameError::Malformed(name.to_owned())),
        }
        if chars.all(is_ident_continue) {
            Ok(VarName(name.into()))
        } else {
            Err(NameError::Malformed(name.to_owned()))
        }
    }

    /// The injective embedding of naturals into names: `n` becomes `#n`.
    pub fn from_index(n: u64) -> Self {
        VarName(format!("{GENERATED_PREFIX}{n}").into())
    }

    /// Partial inverse of [`VarName::from_index`]; `None` for user names.
    pub fn to_index(&self) -> Option<u64> {
        let digits = self.0.strip_prefix(GENERATED_PREFIX)?;
        let n: u64 = digits.parse().ok()?;
        // reject non-canonical spellings such as `#007`
        (n.to_string() == digits).then_some(n)
    }

    /// The index of a generated name, or 0 for a user name.
    pub fn index_or_zero(&self) -> u64 {
        self.to_index().unwrap_or(0)
    }

    pub fn is_generated(&self) -> bool {
        self.to_index().is_some()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for VarName {
    type Err = NameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarName::new(s)
    }
}

/// An untyped lambda term with named variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(VarName),
    App(Box<Term>, Box<Term>),
    Abs(VarName, Box<Term>),
}

impl Term {
    pub fn var(v: VarName) -> Term {
        Term::Var(v)
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn abs(binder: VarName, body: Term) -> Term {
        Term::Abs(binder, Box::new(body))
    }

    /// Free variables in occurrence order, duplicates kept.
    ///
    /// Applications concatenate and abstractions filter their binder out of
    /// the body's list, so `x x` yields `[x, x]`.
    pub fn free_vars(&self) -> Vec<VarName> {
        match self {
            Term::Var(v) => vec![v.clone()],
            Term::App(f, a) => {
                let mut out = f.free_vars();
                out.extend(a.free_vars());
                out
            }
            Term::Abs(x, body) => {
                let mut out = body.free_vars();
                out.retain(|v| v != x);
                out
            }
        }
    }

    /// Free variables with duplicates removed, first occurrence wins.
    pub fn unique_free_vars(&self) -> Vec<VarName> {
        let mut out: Vec<VarName> = Vec::new();
        for v in self.free_vars() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Whether `x` occurs free; same answer as `free_vars().contains(x)`
    /// without building the list.
    pub fn occurs_free(&self, x: &VarName) -> bool {
        match self {
            Term::Var(v) => v == x,
            Term::App(f, a) => f.occurs_free(x) || a.occurs_free(x),
            Term::Abs(y, body) => y != x && body.occurs_free(x),
        }
    }

    /// Every variable occurrence, bound or free. An abstraction contributes
    /// its binder after the variables of its body.
    pub fn all_vars(&self) -> Vec<VarName> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<VarName>) {
        match self {
            Term::Var(v) => out.push(v.clone()),
            Term::App(f, a) => {
                f.collect_vars(out);
                a.collect_vars(out);
            }
            Term::Abs(x, body) => {
                body.collect_vars(out);
                out.push(x.clone());
            }
        }
    }

    /// Whether `x` occurs anywhere in the term, as a binder or a variable.
    pub fn mentions(&self, x: &VarName) -> bool {
        match self {
            Term::Var(v) => v == x,
            Term::App(f, a) => f.mentions(x) || a.mentions(x),
            Term::Abs(y, body) => y == x || body.mentions(x),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.height().max(a.height()),
            Term::Abs(_, body) => 1 + body.height(),
        }
    }

    /// Number of AST nodes; each variable, application and abstraction counts once.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Abs(_, body) => 1 + body.size(),
        }
    }

    /// Largest generated-name index among all variables of the term; 0 if none.
    pub fn max_var_index(&self) -> u64 {
        match self {
            Term::Var(v) => v.index_or_zero(),
            Term::App(f, a) => f.max_var_index().max(a.max_var_index()),
            Term::Abs(x, body) => x.index_or_zero().max(body.max_var_index()),
        }
    }
}

/// Largest generated-name index over a list of terms; 0 for an empty list.
pub fn max_var_index_of_terms<'a>(terms: impl IntoIterator<Item = &'a Term>) -> u64 {
    terms.into_iter().map(Term::max_var_index).max().unwrap_or(0)
}

/// Largest generated-name index over a list of names; 0 for an empty list.
pub fn max_var_index_of_names<'a>(names: impl IntoIterator<Item = &'a VarName>) -> u64 {
    names.into_iter().map(VarName::index_or_zero).max().unwrap_or(0)
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// Binders enclosing a subterm, outermost first. Entries are pushed and
/// popped at the right end; a later entry shadows earlier equal ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Context(Vec<VarName>);

impl Context {
    pub fn new() -> Self {
        Context(Vec::new())
    }

    pub fn push(&mut self, x: VarName) {
        self.0.push(x);
    }

    pub fn pop(&mut self) -> Option<VarName> {
        self.0.pop()
    }

    /// A copy with `x` appended at the right end.
    pub fn snoc(&self, x: VarName) -> Self {
        let mut out = self.clone();
        out.push(x);
        out
    }

    /// `self ++ other`, keeping both orders.
    pub fn concat(&self, other: &Context) -> Self {
        let mut out = self.clone();
        out.0.extend(other.0.iter().cloned());
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &VarName) -> bool {
        self.0.contains(x)
    }

    pub fn as_slice(&self) -> &[VarName] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VarName> {
        self.0.iter()
    }

    /// Distance from the right end of the rightmost occurrence of `x`
    /// (0 = innermost binder), or `None` if `x` is not bound here.
    pub fn rightmost_distance(&self, x: &VarName) -> Option<usize> {
        self.0.iter().rev().position(|v| v == x)
    }
}

impl From<Vec<VarName>> for Context {
    fn from(vars: Vec<VarName>) -> Self {
        Context(vars)
    }
}

impl FromIterator<VarName> for Context {
    fn from_iter<I: IntoIterator<Item = VarName>>(iter: I) -> Self {
        Context(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Context {
    type Item = &'a VarName;
    type IntoIter = std::slice::Iter<'a, VarName>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
