//! `hpi`: exact evaluation, synthesis, equivalence and translation for the
//! Pi, Q-Pi and Hadamard-Pi combinator languages.
//!
//! Term semantics compose in diagrammatic order: `sem(c1 ; c2)` is
//! `sem(c2) · sem(c1)`. Words compose left to right as matrix products.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hpi_core::lang::{equiv_terms, parse_term, Lang, Term, ValueType};
use hpi_core::translate::{report_qsem, report_t_h, report_t_q, report_wsem, TranslationReport};
use hpi_core::words::{catalog, check_derivation, parse_derivation, verify_catalog};
use hpi_core::{normal_form_word, synthesize, words_equiv, Error, ExactMatrix, Word};

#[derive(Parser)]
#[command(
    name = "hpi",
    version,
    about = "Exact tools for Pi, Q-Pi and Hadamard-Pi"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TermOpts {
    /// Source type of the term.
    #[arg(long, default_value = "1+1")]
    in_type: String,
    #[arg(long, default_value = "qpi")]
    lang: Lang,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Term,
    Word,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum From {
    Hpi,
    Qpi,
    Words,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum To {
    Qpi,
    Hpi,
    Words,
    Term,
}

/// Every INPUT is inline text, a file path, or `-` for stdin.
#[derive(Subcommand)]
enum Command {
    /// Typecheck a term and print `src <-> dst`.
    Check {
        term: String,
        #[command(flatten)]
        opts: TermOpts,
    },
    /// Print the matrix of a term.
    Sem {
        term: String,
        #[command(flatten)]
        opts: TermOpts,
        /// Also print decimal approximations.
        #[arg(long)]
        float: bool,
    },
    /// Synthesize the normal-form word of an orthogonal matrix.
    Synth {
        matrix: String,
        /// Print the syllables and levels.
        #[arg(long)]
        trace: bool,
    },
    /// Print the normal form of a word or term.
    Normalize {
        input: String,
        #[arg(long, value_enum, default_value = "word")]
        kind: Kind,
        #[command(flatten)]
        opts: TermOpts,
    },
    /// Decide whether two words or two terms have the same semantics.
    Equiv {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "term")]
        kind: Kind,
        #[command(flatten)]
        opts: TermOpts,
    },
    /// Translate between terms and words and check the result.
    Translate {
        input: String,
        #[arg(long, value_enum)]
        from: From,
        #[arg(long, value_enum)]
        to: To,
        /// Source type for term inputs.
        #[arg(long, default_value = "1+1")]
        in_type: String,
    },
    /// Check every catalog relation over all distinct-index assignments.
    RelationsVerify {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        max_assignments: Option<usize>,
    },
    /// Replay a derivation file from a start word and compare with a final word.
    DeriveCheck {
        start: String,
        derivation: String,
        target: String,
    },
}

/// A failure with its exit code: 1 for domain failures, 2 for usage errors.
struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

impl std::convert::From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl std::convert::From<hpi_core::ParseError> for Failure {
    fn from(e: hpi_core::ParseError) -> Self {
        usage(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn term(arg: &str, lang: Lang) -> Result<Term, Failure> {
    Ok(parse_term(read_input(arg)?.trim(), lang)?)
}

fn value_type(s: &str) -> Result<ValueType, Failure> {
    Ok(s.parse()?)
}

fn word(arg: &str) -> Result<Word, Failure> {
    Ok(read_input(arg)?.parse()?)
}

fn check(t: &str, opts: &TermOpts) -> Outcome {
    let c = term(t, opts.lang)?;
    let ty = c.combinator_type(&value_type(&opts.in_type)?)?;
    Ok((ty.to_string(), 0))
}

fn sem(t: &str, opts: &TermOpts, float: bool) -> Outcome {
    let m = term(t, opts.lang)?.sem(&value_type(&opts.in_type)?)?;
    let mut out = m.to_string();
    if float {
        out.push_str("\n# decimal approximation, not authoritative");
        for row in m.to_float_string().lines() {
            out.push_str("\n# ");
            out.push_str(row);
        }
    }
    Ok((out, 0))
}

fn synth(input: &str, trace: bool) -> Outcome {
    let m: ExactMatrix = read_input(input)?.parse()?;
    let t = synthesize(&m)?;
    let mut out = t.normal_form().to_string();
    if trace {
        out.push('\n');
        out.push_str(t.to_string().trim_end());
    }
    Ok((out, 0))
}

fn normal_form_of(input: &str, kind: Kind, opts: &TermOpts) -> Result<Word, Failure> {
    let m = match kind {
        Kind::Word => word(input)?.sem(),
        Kind::Term => term(input, opts.lang)?.sem(&value_type(&opts.in_type)?)?,
    };
    Ok(normal_form_word(&m)?)
}

fn equiv(a: &str, b: &str, kind: Kind, opts: &TermOpts) -> Outcome {
    let (same, m1, m2) = match kind {
        Kind::Word => {
            let (w1, w2) = (word(a)?, word(b)?);
            let same = words_equiv(&w1, &w2).map_err(|e| usage(e.to_string()))?;
            (same, w1.sem(), w2.sem())
        }
        Kind::Term => {
            let input = value_type(&opts.in_type)?;
            let (c1, c2) = (term(a, opts.lang)?, term(b, opts.lang)?);
            let (m1, m2) = (c1.sem(&input)?, c2.sem(&input)?);
            let same = equiv_terms(&c1, &c2, &input).map_err(|e| usage(e.to_string()))?;
            (same, m1, m2)
        }
    };
    let verdict = if same { "EQUIV" } else { "DISTINCT" };
    let out = format!(
        "{verdict}\n{}\n{}",
        normal_form_word(&m1)?,
        normal_form_word(&m2)?
    );
    Ok((out, if same { 0 } else { 1 }))
}

fn translate(input: &str, from: From, to: To, in_type: &str) -> Outcome {
    let report: TranslationReport = match (from, to) {
        (From::Qpi, To::Words) => report_wsem(&term(input, Lang::QPi)?, &value_type(in_type)?)?,
        (From::Qpi, To::Hpi) => report_t_h(&term(input, Lang::QPi)?, &value_type(in_type)?)?,
        (From::Words, To::Qpi | To::Term) => report_t_q(&word(input)?)?,
        (From::Hpi, To::Qpi) => report_qsem(&term(input, Lang::HPi)?, &value_type(in_type)?)?,
        _ => {
            return Err(usage(format!(
                "no translation from {} to {}",
                from.to_possible_value().unwrap().get_name(),
                to.to_possible_value().unwrap().get_name()
            )))
        }
    };
    Ok((report.to_string().trim_end().to_string(), 0))
}

fn relations_verify(n: usize, max_assignments: Option<usize>) -> Outcome {
    let reports = verify_catalog(catalog(), n, max_assignments);
    let ok = reports.iter().all(|r| r.passed());
    let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    Ok((lines.join("\n"), if ok { 0 } else { 1 }))
}

fn derive_check(start: &str, derivation: &str, target: &str) -> Outcome {
    let (start, target) = (word(start)?, word(target)?);
    let steps = parse_derivation(&read_input(derivation)?)?;
    if check_derivation(&start, &steps, &target)? {
        Ok((format!("VALID {} steps", steps.len()), 0))
    } else {
        Ok(("INVALID final word differs".to_string(), 1))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { term, opts } => check(&term, &opts),
        Command::Sem { term, opts, float } => sem(&term, &opts, float),
        Command::Synth { matrix, trace } => synth(&matrix, trace),
        Command::Normalize { input, kind, opts } => {
            Ok((normal_form_of(&input, kind, &opts)?.to_string(), 0))
        }
        Command::Equiv { a, b, kind, opts } => equiv(&a, &b, kind, &opts),
        Command::Translate {
            input,
            from,
            to,
            in_type,
        } => translate(&input, from, to, &in_type),
        Command::RelationsVerify { n, max_assignments } => relations_verify(n, max_assignments),
        Command::DeriveCheck {
            start,
            derivation,
            target,
        } => derive_check(&start, &derivation, &target),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
