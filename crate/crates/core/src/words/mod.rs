//! Words over the generator set `G_n` and their exact semantics.
//!
//! A word `G_1 G_2 … G_ℓ` denotes the matrix product `G_1·G_2·…·G_ℓ` in the
//! listed order. Text form: `n=<dim>` followed by whitespace-separated
//! generator tokens; the empty word is written `ε` (or `eps`).

mod catalog;
mod derivation;

use std::fmt;
use std::str::FromStr;

pub use catalog::{
    catalog, verify_catalog, verify_relation, Assignment, Relation, RelationReport, RelationStatus,
    Schematic,
};
pub use derivation::{
    apply_step, check_derivation, find_matches, parse_derivation, DerivationStep, Direction,
};

use crate::error::{Error, ParseError, Result};
use crate::linalg::{ExactMatrix, Generator};
use crate::synthesis::normal_form_word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    gens: Vec<Generator>,
}

impl Word {
    /// A word over `G_n`; every generator must be well formed with indices `<= n`.
    pub fn new(n: usize, gens: Vec<Generator>) -> Result<Word> {
        for g in &gens {
            if !g.is_well_formed() {
                return Err(Error::Index(format!("malformed generator {g}")));
            }
            if g.max_index() > n {
                return Err(Error::Index(format!("{g} is not a generator of G_{n}")));
            }
        }
        Ok(Word { n, gens })
    }

    pub(crate) fn from_gens_unchecked(n: usize, gens: Vec<Generator>) -> Word {
        Word { n, gens }
    }

    pub fn empty(n: usize) -> Word {
        Word {
            n,
            gens: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `⟦G_1…G_ℓ⟧ = G_1·…·G_ℓ`.
    pub fn sem(&self) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.n);
        for g in &self.gens {
            m.apply_right(g);
        }
        m
    }

    /// Adds `m` to every index; the result lives in `G_{n+m}`.
    pub fn shift(&self, m: usize) -> Word {
        Word {
            n: self.n + m,
            gens: self.gens.iter().map(|g| g.shifted(m)).collect(),
        }
    }

    /// The same generators viewed in `G_dim`, `dim >= n`.
    pub fn embed(&self, dim: usize) -> Result<Word> {
        if dim < self.n {
            return Err(Error::Dimension(format!(
                "cannot embed a word over G_{} into G_{dim}",
                self.n
            )));
        }
        Ok(Word {
            n: dim,
            gens: self.gens.clone(),
        })
    }

    /// Concatenation; the shorter ambient dimension is embedded into the larger.
    pub fn concat(&self, other: &Word) -> Word {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Word {
            n: self.n.max(other.n),
            gens,
        }
    }

    pub fn push(&mut self, g: Generator) -> Result<()> {
        if !g.is_well_formed() || g.max_index() > self.n {
            return Err(Error::Index(format!(
                "{g} is not a generator of G_{}",
                self.n
            )));
        }
        self.gens.push(g);
        Ok(())
    }

    /// Replaces reversed generators `X[c,b]`, `H[c,b]` by canonical ones.
    pub fn canonicalize(&self) -> Word {
        Word {
            n: self.n,
            gens: self
                .gens
                .iter()
                .flat_map(Generator::canonical_form)
                .collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.gens.iter().all(Generator::is_canonical)
    }

    /// `w^k`.
    pub fn pow(&self, k: usize) -> Word {
        Word {
            n: self.n,
            gens: self.gens.repeat(k),
        }
    }

    /// Generator tokens only, `ε` for the empty word.
    pub fn tokens(&self) -> String {
        if self.gens.is_empty() {
            return "ε".to_string();
        }
        let toks: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        toks.join(" ")
    }

    /// Parses a word, keeping reversed generators as written.
    pub fn parse_raw(s: &str) -> Result<Word, ParseError> {
        let mut toks = s.split_whitespace().peekable();
        let mut n = None;
        if let Some(first) = toks.peek() {
            if let Some(d) = first.strip_prefix("n=") {
                n = Some(
                    d.parse::<usize>()
                        .map_err(|_| ParseError::new(format!("invalid dimension `{d}`")))?,
                );
                toks.next();
            }
        }
        let mut gens = Vec::new();
        for t in toks {
            if matches!(t, "ε" | "eps") {
                continue;
            }
            gens.push(t.parse::<Generator>()?);
        }
        let n = n.unwrap_or_else(|| gens.iter().map(Generator::max_index).max().unwrap_or(0));
        Word::new(n, gens).map_err(|e| ParseError::new(e.to_string()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self.tokens())
    }
}

/// Parses a word and canonicalizes reversed generators. Without an `n=`
/// header the dimension is the largest index used.
impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Word::parse_raw(s)?.canonicalize())
    }
}

/// `⟦w1⟧ = ⟦w2⟧`, decided by comparing normal forms.
pub fn words_equiv(w1: &Word, w2: &Word) -> Result<bool> {
    if w1.dim() != w2.dim() {
        return Err(Error::Dimension(format!(
            "words over G_{} and G_{}",
            w1.dim(),
            w2.dim()
        )));
    }
    let (m1, m2) = (w1.sem(), w2.sem());
    let same_nf = normal_form_word(&m1)? == normal_form_word(&m2)?;
    if same_nf != (m1 == m2) {
        return Err(Error::Internal(
            "normal forms disagree with matrix equality".into(),
        ));
    }
    Ok(same_nf)
}
