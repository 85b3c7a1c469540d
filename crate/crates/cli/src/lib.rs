//! The `lamb` command line.
//!
//! Terms are read in the usual concrete syntax (`\x. body` or `λx. body`).
//! A term argument of `-` is read from standard input. Generated names such
//! as `#3` are accepted, so any printed term can be fed back in.
//!
//! Exit codes: 0 for success or a `true` answer, 1 for a `false` answer (or a
//! reduction that ran out of steps), 2 for syntax and usage errors.

use std::io::{self, BufWriter, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use lamb::oracle::TermEnumerator;
use lamb::{
    alpha_eq, equiv, normalize, parse_printed, refresh, satisfies_bvc, simple_subst, subst,
    to_nameless, AvoidSet, Context, ParseError, ReductionConfig, Strategy, SubstMode, Term,
    VarName,
};

/// Environment variable with the output buffer size, in bytes, for
/// `enumerate`.
pub const ENUM_BUFFER_VAR: &str = "LAMB_ENUM_BUFFER";
const DEFAULT_ENUM_BUFFER: usize = 64 * 1024;

#[derive(Parser, Debug)]
#[command(
    name = "lamb",
    version,
    about = "Alpha-equivalence, substitution and reduction for lambda terms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide alpha-equivalence of two terms
    Alpha { left: String, right: String },
    /// Decide alpha-equivalence under explicit binder lists
    ///
    /// Lists are comma-separated with the outermost binder first:
    /// `--left x,y` is the context of a term sitting inside `\x. \y. _`.
    AlphaCtx {
        #[arg(long, default_value = "")]
        left: String,
        #[arg(long, default_value = "")]
        right: String,
        t: String,
        u: String,
    },
    /// Free variables, in order of occurrence, duplicates kept
    Fv { term: String },
    /// All variables, binders included, duplicates kept
    Vars { term: String },
    /// Capture-avoiding substitution `T[x -> U]`
    Subst { term: String, var: String, replacement: String },
    /// Naive substitution `T[x -> U]`, which may capture
    Ssubst { term: String, var: String, replacement: String },
    /// Rename binders so none of them is in the avoid list
    Refresh {
        term: String,
        #[arg(long, default_value = "")]
        avoid: String,
    },
    /// Check that no binder of the term is in the avoid list
    CheckBvc {
        term: String,
        #[arg(long, default_value = "")]
        avoid: String,
    },
    /// Beta-reduce; prints the final term, the step count and
    /// `normal` or `budget`
    Reduce {
        term: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Ca)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Normal)]
        strategy: StrategyArg,
    },
    /// Nameless rendering: bound variables as distances, free ones as names
    Nameless { term: String },
    /// Every term up to the given size, one per line
    Enumerate {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        names: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    /// capture-avoiding substitution
    Ca,
    /// refresh the body, then substitute naively
    Bvc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    /// leftmost-outermost, under binders too
    Normal,
    /// head redexes only
    Cbn,
}

enum Failure {
    Syntax { what: &'static str, err: ParseError },
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Reads term arguments, pulling `-` from standard input at most once.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    used_stdin: bool,
}

impl Inputs<'_> {
    fn text(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.used_stdin {
            return Err(Failure::Usage("standard input (`-`) can be used only once".into()));
        }
        self.used_stdin = true;
        let mut buf = String::new();
        self.stdin.read_to_string(&mut buf)?;
        Ok(buf)
    }

    fn term(&mut self, what: &'static str, arg: &str) -> Result<Term, Failure> {
        let text = self.text(arg)?;
        parse_printed(&text).map_err(|err| Failure::Syntax { what, err })
    }
}

fn name(what: &'static str, text: &str) -> Result<VarName, Failure> {
    match parse_printed(text) {
        Ok(Term::Var(x)) => Ok(x),
        Ok(_) => Err(Failure::Usage(format!("{what}: expected a variable name, found `{text}`"))),
        Err(err) => Err(Failure::Syntax { what, err }),
    }
}

/// A comma-separated name list. Error positions are offsets into the whole
/// list.
fn name_list(what: &'static str, text: &str) -> Result<Vec<VarName>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        match name(what, part) {
            Ok(x) => out.push(x),
            Err(Failure::Syntax { what, mut err }) => {
                err.position += offset;
                return Err(Failure::Syntax { what, err });
            }
            Err(Failure::Usage(_)) => {
                return Err(Failure::Usage(format!(
                    "{what}: expected a variable name at position {offset}, found `{part}`"
                )))
            }
            Err(e) => return Err(e),
        }
        offset += part.chars().count() + 1;
    }
    Ok(out)
}

fn verdict(out: &mut dyn Write, answer: bool) -> Result<i32, Failure> {
    writeln!(out, "{answer}")?;
    Ok(if answer { 0 } else { 1 })
}

fn join(names: &[VarName]) -> String {
    names.iter().map(VarName::as_str).collect::<Vec<_>>().join(" ")
}

fn enum_buffer_size() -> usize {
    std::env::var(ENUM_BUFFER_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_ENUM_BUFFER)
}

fn execute(command: Command, inputs: &mut Inputs, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Alpha { left, right } => {
            let t = inputs.term("left term", &left)?;
            let u = inputs.term("right term", &right)?;
            verdict(out, alpha_eq(&t, &u))
        }
        Command::AlphaCtx { left, right, t, u } => {
            let xs: Context = name_list("--left", &left)?.into();
            let ys: Context = name_list("--right", &right)?.into();
            let t = inputs.term("left term", &t)?;
            let u = inputs.term("right term", &u)?;
            verdict(out, equiv(&xs, &ys, &t, &u))
        }
        Command::Fv { term } => {
            let t = inputs.term("term", &term)?;
            writeln!(out, "{}", join(&t.free_vars()))?;
            Ok(0)
        }
        Command::Vars { term } => {
            let t = inputs.term("term", &term)?;
            writeln!(out, "{}", join(&t.all_vars()))?;
            Ok(0)
        }
        Command::Subst { term, var, replacement } => {
            let t = inputs.term("term", &term)?;
            let x = name("variable", &var)?;
            let u = inputs.term("replacement", &replacement)?;
            writeln!(out, "{}", subst(&t, &x, &u))?;
            Ok(0)
        }
        Command::Ssubst { term, var, replacement } => {
            let t = inputs.term("term", &term)?;
            let x = name("variable", &var)?;
            let u = inputs.term("replacement", &replacement)?;
            writeln!(out, "{}", simple_subst(&t, &x, &u))?;
            Ok(0)
        }
        Command::Refresh { term, avoid } => {
            let avoid = AvoidSet::new(name_list("--avoid", &avoid)?);
            let t = inputs.term("term", &term)?;
            writeln!(out, "{}", refresh(&t, &avoid))?;
            Ok(0)
        }
        Command::CheckBvc { term, avoid } => {
            let avoid = AvoidSet::new(name_list("--avoid", &avoid)?);
            let t = inputs.term("term", &term)?;
            verdict(out, satisfies_bvc(&avoid, &t))
        }
        Command::Reduce { term, steps, mode, strategy } => {
            let t = inputs.term("term", &term)?;
            let cfg = ReductionConfig {
                strategy: match strategy {
                    StrategyArg::Normal => Strategy::NormalOrder,
                    StrategyArg::Cbn => Strategy::CallByName,
                },
                max_steps: steps,
                subst_mode: match mode {
                    ModeArg::Ca => SubstMode::CaptureAvoiding,
                    ModeArg::Bvc => SubstMode::BvcRefresh,
                },
            };
            let result = normalize(&t, &cfg);
            writeln!(out, "{}", result.term)?;
            writeln!(out, "{}", result.steps)?;
            writeln!(out, "{}", if result.normal { "normal" } else { "budget" })?;
            Ok(if result.normal { 0 } else { 1 })
        }
        Command::Nameless { term } => {
            let t = inputs.term("term", &term)?;
            writeln!(out, "{}", to_nameless(&Context::new(), &t))?;
            Ok(0)
        }
        Command::Enumerate { nodes, names } => {
            let names = name_list("--names", &names)?;
            let mut buffered = BufWriter::with_capacity(enum_buffer_size(), out);
            for t in TermEnumerator::new(nodes, &names) {
                writeln!(buffered, "{t}")?;
            }
            buffered.flush()?;
            Ok(0)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut inputs = Inputs { stdin, used_stdin: false };
    let outcome = execute(cli.command, &mut inputs, out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(Failure::Syntax { what, err: e }) => {
            let _ = writeln!(err, "error: {what}: {e}");
            2
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
