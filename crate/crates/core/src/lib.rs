//! An untyped lambda calculus kernel built around named variables.
//!
//! * [`term`]: terms, variable names (user and generated), binder contexts,
//!   free and all variables, height.
//! * [`syntax`]: parser and minimal-parentheses printer.
//! * [`alpha`]: alpha-equivalence of terms under binder contexts.
//! * [`subst`]: naive substitution, a checker for capture-avoiding
//!   substitution results, and a deterministic capture-avoiding substitution.
//! * [`bvc`]: the variable convention as a predicate, and a refresh that
//!   re-establishes it.
//! * [`oracle`]: nameless conversion and small-term enumeration for testing.
//! * [`reduce`]: beta reduction.
//!
//! ```
//! use lamb::{alpha_eq, parse, subst, VarName};
//!
//! let t = parse(r"(\z. x) y").unwrap();
//! let x = VarName::new("x").unwrap();
//! let out = subst(&t, &x, &parse("z").unwrap());
//! assert_eq!(out.to_string(), r"(\#1. z) y");
//! assert!(alpha_eq(&out, &parse(r"(\q. z) y").unwrap()));
//! ```

pub mod alpha;
pub mod bvc;
pub mod oracle;
pub mod reduce;
pub mod subst;
pub mod syntax;
pub mod term;

pub use alpha::{alpha_eq, equiv, var_equiv};
pub use bvc::{refresh, satisfies_bvc, AvoidSet};
pub use oracle::{enumerate_terms, oracle_equiv, to_nameless, NamelessTerm};
pub use reduce::{normalize, step_beta, Reduction, ReductionConfig, Strategy, SubstMode};
pub use subst::{
    check_subst, simple_subst, subst, subst_fueled, FreshComputation, FreshCounter, SubstJudgment,
};
pub use syntax::{parse, parse_printed, print, ParseError};
pub use term::{Context, NameError, Term, VarName};
