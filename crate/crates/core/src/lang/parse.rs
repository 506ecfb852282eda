//! Recursive-descent parser for terms and value types.
//!
//! Precedence from loosest to tightest: `;`, `+`, `*`, postfix `^n`. All
//! binary operators associate to the left.

use super::{Lang, Prim, Term, ValueType};
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(usize),
    Semi,
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

/// Names that take a `+` or `*` suffix without whitespace.
const SUFFIXED: &[&str] = &["swap", "assocr", "assocl", "unite", "uniti"];

fn lex(s: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            if SUFFIXED.contains(&name.as_str()) {
                if let Some(&c @ ('+' | '*' | '×')) = chars.peek() {
                    name.push(if c == '+' { '+' } else { '*' });
                    chars.next();
                }
            }
            out.push(Tok::Ident(name));
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let n = digits
                .parse()
                .map_err(|_| ParseError::new(format!("number too large: {digits}")))?;
            out.push(Tok::Nat(n));
        } else {
            chars.next();
            out.push(match c {
                ';' | '⨾' => Tok::Semi,
                '+' => Tok::Plus,
                '*' | '×' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                _ => return Err(ParseError::new(format!("unexpected character `{c}`"))),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    lang: Lang,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn error(&self, msg: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(format!("{msg}, found {t:?} at token {}", self.pos + 1)),
            None => ParseError::new(format!("{msg}, found end of input")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn ty_sum(&mut self) -> Result<ValueType, ParseError> {
        let mut t = self.ty_prod()?;
        while self.eat(&Tok::Plus) {
            t = ValueType::sum(t, self.ty_prod()?);
        }
        Ok(t)
    }

    fn ty_prod(&mut self) -> Result<ValueType, ParseError> {
        let mut t = self.ty_atom()?;
        while self.eat(&Tok::Star) {
            t = ValueType::prod(t, self.ty_atom()?);
        }
        Ok(t)
    }

    fn ty_atom(&mut self) -> Result<ValueType, ParseError> {
        match self.peek() {
            Some(Tok::Nat(0)) => {
                self.pos += 1;
                Ok(ValueType::Zero)
            }
            Some(Tok::Nat(1)) => {
                self.pos += 1;
                Ok(ValueType::One)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.ty_sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error("expected a type")),
        }
    }

    fn seq(&mut self) -> Result<Term, ParseError> {
        let mut t = self.sum()?;
        while self.eat(&Tok::Semi) {
            t = Term::seq(t, self.sum()?);
        }
        Ok(t)
    }

    fn sum(&mut self) -> Result<Term, ParseError> {
        let mut t = self.prod()?;
        while self.eat(&Tok::Plus) {
            t = Term::sum(t, self.prod()?);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut t = self.power()?;
        while self.eat(&Tok::Star) {
            t = Term::prod(t, self.power()?);
        }
        Ok(t)
    }

    fn power(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Caret) {
            match self.peek() {
                Some(&Tok::Nat(n)) => {
                    self.pos += 1;
                    t = super::iterate(&t, n);
                }
                _ => return Err(self.error("expected an exponent")),
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let p = self.prim(&name)?;
                if !self.lang.allows(&p) {
                    return Err(ParseError::new(format!(
                        "`{name}` is not available in {}",
                        self.lang
                    )));
                }
                Ok(Term::Prim(p))
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn prim(&mut self, name: &str) -> Result<Prim, ParseError> {
        Ok(match name {
            "id" => Prim::Id,
            "swap+" => Prim::SwapPlus,
            "assocr+" => Prim::AssocrPlus,
            "assocl+" => Prim::AssoclPlus,
            "unite+" => Prim::UnitePlus,
            "uniti+" => Prim::UnitiPlus,
            "swap*" => Prim::SwapTimes,
            "assocr*" => Prim::AssocrTimes,
            "assocl*" => Prim::AssoclTimes,
            "unite*" => Prim::UniteTimes,
            "uniti*" => Prim::UnitiTimes,
            "dist" => Prim::Dist,
            "factor" => Prim::Factor,
            "absorb" => Prim::Absorb,
            "factorz" => {
                if self.eat(&Tok::LBracket) {
                    let t = self.ty_sum()?;
                    self.expect(Tok::RBracket, "`]`")?;
                    Prim::Factorz(t)
                } else {
                    Prim::Factorz(ValueType::Zero)
                }
            }
            "neg1" => Prim::Neg1,
            "had" | "hadamard" => Prim::Had,
            _ => return Err(ParseError::new(format!("unknown primitive `{name}`"))),
        })
    }
}

/// Parses a term, rejecting primitives outside `lang`.
pub fn parse_term(s: &str, lang: Lang) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        lang,
    };
    let t = p.seq()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_type(s: &str) -> Result<ValueType, ParseError> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        lang: Lang::Pi,
    };
    let t = p.ty_sum()?;
    p.finish()?;
    Ok(t)
}
