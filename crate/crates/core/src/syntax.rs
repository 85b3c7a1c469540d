//! Concrete syntax for terms.
//!
//! ```text
//! term   := abs | app
//! abs    := ("\" | "λ") ident "." term
//! app    := atom { atom }
//! atom   := ident | "(" term ")"
//! ident  := letter { letter | digit | "_" }
//! ```
//!
//! Application associates to the left and an abstraction body extends as
//! far right as possible. The printer emits `\` and the fewest parentheses
//! that re-parse to the same tree.

use std::fmt;

use thiserror::Error;

use crate::term::{is_ident_continue, Term, VarName, GENERATED_PREFIX};

/// Nesting limit for parentheses and abstractions combined. Parsing itself
/// does not recurse; the limit keeps the recursive operations on parsed
/// terms within a reasonable stack.
pub const MAX_NESTING: usize = 100_000;

/// A syntax error. `position` is a 0-based character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("expected {0}, found end of input")]
    UnexpectedEnd(&'static str),
    #[error("`{0}` uses the reserved `#` namespace")]
    ReservedName(String),
    #[error("nesting deeper than {MAX_NESTING}")]
    TooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Lambda,
    Dot,
    Open,
    Close,
    Ident(VarName),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Lambda => f.write_str("`\\`"),
            Token::Dot => f.write_str("`.`"),
            Token::Open => f.write_str("`(`"),
            Token::Close => f.write_str("`)`"),
            Token::Ident(name) => write!(f, "`{name}`"),
        }
    }
}

fn tokenize(input: &str, allow_generated: bool) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().enumerate().peekable();
    while let Some((pos, c)) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '\\' | 'λ' => Token::Lambda,
            '.' => Token::Dot,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_alphabetic() || c == GENERATED_PREFIX => {
                let mut name = String::from(c);
                while let Some(&(_, next)) = chars.peek() {
                    if !is_ident_continue(next) {
                        break;
                    }
                    name.push(next);
                    chars.next();
                }
                let var = if c == GENERATED_PREFIX {
                    let generated = name[1..].parse().ok().map(VarName::from_index);
                    match generated {
                        Some(var) if allow_generated && var.as_str() == name => var,
                        _ => {
                            return Err(ParseError {
                                kind: ParseErrorKind::ReservedName(name),
                                position: pos,
                            })
                        }
                    }
                } else {
                    VarName::new(&name).expect("scanned an identifier")
                };
                Token::Ident(var)
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    position: pos,
                })
            }
        };
        tokens.push((token, pos));
    }
    Ok(tokens)
}

enum FrameKind {
    Top,
    Paren,
    Abs(VarName),
}

// One open construct. `acc` is the application chain read so far inside it.
struct Frame {
    kind: FrameKind,
    acc: Option<Term>,
}

impl Frame {
    fn push_atom(&mut self, atom: Term) {
        self.acc = Some(match self.acc.take() {
            Some(fun) => Term::app(fun, atom),
            None => atom,
        });
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    end: usize,
    // innermost last; never empty while parsing
    frames: Vec<Frame>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.cursor).map_or(self.end, |&(_, p)| p)
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Some(tok) => ParseErrorKind::Unexpected { expected, found: tok.to_string() },
            None => ParseErrorKind::UnexpectedEnd(expected),
        };
        ParseError { kind, position: self.position() }
    }

    fn top(&mut self) -> &mut Frame {
        self.frames.last_mut().expect("the top-level frame is never popped early")
    }

    /// What may legally follow a finished application chain here.
    fn closer(&self) -> &'static str {
        let enclosing = self.frames.iter().rev().find(|f| !matches!(f.kind, FrameKind::Abs(_)));
        match enclosing.map(|f| &f.kind) {
            Some(FrameKind::Paren) => "`)`",
            _ => "end of input",
        }
    }

    fn open(&mut self, kind: FrameKind) -> Result<(), ParseError> {
        // the top-level frame does not count towards nesting
        if self.frames.len() > MAX_NESTING {
            return Err(ParseError { kind: ParseErrorKind::TooDeep, position: self.position() });
        }
        self.frames.push(Frame { kind, acc: None });
        Ok(())
    }

    /// Closes abstractions whose bodies end here, innermost first.
    fn close_abstractions(&mut self) -> Result<(), ParseError> {
        while matches!(self.top().kind, FrameKind::Abs(_)) {
            let frame = self.frames.pop().expect("checked above");
            let body = frame.acc.ok_or_else(|| self.error("a variable or `(`"))?;
            let FrameKind::Abs(binder) = frame.kind else { unreachable!() };
            // an abstraction is only opened on an empty chain
            self.top().acc = Some(Term::abs(binder, body));
        }
        Ok(())
    }

    fn run(mut self) -> Result<Term, ParseError> {
        loop {
            match self.peek() {
                Some(Token::Ident(name)) => {
                    let atom = Term::Var(name.clone());
                    self.top().push_atom(atom);
                    self.cursor += 1;
                }
                Some(Token::Open) => {
                    self.open(FrameKind::Paren)?;
                    self.cursor += 1;
                }
                Some(Token::Lambda) => {
                    if self.top().acc.is_some() {
                        return Err(self.error(self.closer()));
                    }
                    self.cursor += 1;
                    let binder = match self.peek() {
                        Some(Token::Ident(name)) => name.clone(),
                        _ => return Err(self.error("a binder name")),
                    };
                    self.cursor += 1;
                    if self.peek() != Some(&Token::Dot) {
                        return Err(self.error("`.`"));
                    }
                    self.open(FrameKind::Abs(binder))?;
                    self.cursor += 1;
                }
                Some(Token::Close) => {
                    if self.top().acc.is_none() {
                        return Err(self.error("a variable or `(`"));
                    }
                    self.close_abstractions()?;
                    if !matches!(self.top().kind, FrameKind::Paren) {
                        return Err(self.error("end of input"));
                    }
                    let inner = self.frames.pop().and_then(|f| f.acc).expect("checked above");
                    self.top().push_atom(inner);
                    self.cursor += 1;
                }
                Some(Token::Dot) => {
                    let expected =
                        if self.top().acc.is_some() { self.closer() } else { "a variable or `(`" };
                    return Err(self.error(expected));
                }
                None => {
                    if self.top().acc.is_none() {
                        return Err(self.error("a variable or `(`"));
                    }
                    self.close_abstractions()?;
                    if self.frames.len() > 1 {
                        return Err(self.error("`)`"));
                    }
                    return Ok(self.frames.pop().and_then(|f| f.acc).expect("checked above"));
                }
            }
        }
    }
}

/// Parses a single term; trailing input is an error. Names in the
/// generated `#n` namespace are rejected.
pub fn parse(input: &str) -> Result<Term, ParseError> {
    parse_with(input, false)
}

/// Like [`parse`], but also accepts canonical generated names (`#0`, `#17`),
/// so anything produced by [`print`] reads back to the same term.
pub fn parse_printed(input: &str) -> Result<Term, ParseError> {
    parse_with(input, true)
}

fn parse_with(input: &str, allow_generated: bool) -> Result<Term, ParseError> {
    let tokens = tokenize(input, allow_generated)?;
    let parser = Parser {
        tokens,
        cursor: 0,
        end: input.chars().count(),
        frames: vec![Frame { kind: FrameKind::Top, acc: None }],
    };
    parser.run()
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Renders `t` in the concrete syntax.
pub fn print(t: &Term) -> String {
    t.to_string()
}

fn write_term(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Var(v) => write!(f, "{v}"),
        Term::Abs(x, body) => {
            write!(f, "\\{x}. ")?;
            write_term(body, f)
        }
        Term::App(fun, arg) => {
            match **fun {
                Term::Abs(..) => {
                    f.write_str("(")?;
                    write_term(fun, f)?;
                    f.write_str(")")?;
                }
                _ => write_term(fun, f)?,
            }
            f.write_str(" ")?;
            match **arg {
                Term::Var(_) => write_term(arg, f),
                _ => {
                    f.write_str("(")?;
                    write_term(arg, f)?;
                    f.write_str(")")
                }
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f)
    }
}
