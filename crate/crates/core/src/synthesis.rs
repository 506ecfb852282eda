//! Exact synthesis of orthogonal matrices over `Z[1/√2]` into generators.
//!
//! [`synthesize`] reduces a matrix column by column, from the last column
//! to the first, emitting one syllable per step. Each syllable strictly
//! lowers the [`Level`] of the working matrix. Pivot choice always takes
//! the least admissible row, which is what makes [`normal_form_word`]
//! canonical.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{check_permutation, ExactMatrix, Generator, Level};
use crate::words::Word;

/// One output step of the synthesis loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// `Z[a]`: fixes the sign of a column that is already `-e_a`.
    Z { a: usize },
    /// `X[a,j] Z[a]^τ`: moves `±e_a` into column position `j`.
    SignedSwap { a: usize, j: usize, tau: bool },
    /// `H[1,i2]`.
    H { i2: usize },
    /// `H[1,i2] X[1,i1]`.
    HX { i2: usize, i1: usize },
}

impl Syllable {
    /// Generators in word order; the syllable's matrix is their product.
    pub fn generators(&self) -> Vec<Generator> {
        match *self {
            Syllable::Z { a } => vec![Generator::Z(a)],
            Syllable::SignedSwap { a, j, tau } => {
                let mut g = vec![Generator::X(a, j)];
                if tau {
                    g.push(Generator::Z(a));
                }
                g
            }
            Syllable::H { i2 } => vec![Generator::H(1, i2)],
            Syllable::HX { i2, i1 } => vec![Generator::H(1, i2), Generator::X(1, i1)],
        }
    }

    /// `N ← W·N`.
    fn apply(&self, n: &mut ExactMatrix) {
        for g in self.generators().iter().rev() {
            n.apply_left(g);
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        write!(f, "{}", gens.join(" "))
    }
}

/// Syllables `W_1..W_ℓ` with `W_ℓ···W_1·M = I`, plus the level after each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisTrace {
    pub dim: usize,
    pub initial: Level,
    pub syllables: Vec<Syllable>,
    pub levels: Vec<Level>,
}

impl SynthesisTrace {
    /// `W_ℓ···W_1` as a matrix.
    pub fn product(&self) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.dim);
        for s in &self.syllables {
            s.apply(&mut m);
        }
        m
    }

    /// Levels strictly decrease, starting from the input's level.
    pub fn is_monotone(&self) -> bool {
        std::iter::once(&self.initial)
            .chain(&self.levels)
            .zip(&self.levels)
            .all(|(before, after)| after < before)
    }

    /// The normal-form word `W_1⁻¹ ··· W_ℓ⁻¹`, whose semantics is the input.
    pub fn normal_form(&self) -> Word {
        let gens = self
            .syllables
            .iter()
            .flat_map(|s| s.generators().into_iter().rev())
            .collect();
        Word::from_gens_unchecked(self.dim, gens)
    }
}

/// Trace dump: one syllable per line with its level as a comment.
impl fmt::Display for SynthesisTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# level {}", self.initial)?;
        for (s, l) in self.syllables.iter().zip(&self.levels) {
            writeln!(f, "{s} # level {l}")?;
        }
        Ok(())
    }
}

/// Runs exact synthesis on an orthogonal matrix.
pub fn synthesize(m: &ExactMatrix) -> Result<SynthesisTrace> {
    if !m.is_orthogonal() {
        return Err(Error::NotOrthogonal);
    }
    let dim = m.dim();
    let mut work = m.clone();
    let mut trace = SynthesisTrace {
        dim,
        initial: work.level_unchecked(),
        syllables: Vec::new(),
        levels: Vec::new(),
    };
    let mut emit = |work: &mut ExactMatrix, s: Syllable| {
        s.apply(work);
        trace.syllables.push(s);
        trace.levels.push(work.level_unchecked());
    };

    for j in (1..=dim).rev() {
        loop {
            let col = work.column(j);
            if col.k == 0 {
                break;
            }
            let residues: Vec<_> = col.entries.iter().map(|e| e.residue()).collect();
            let i1 = residues
                .iter()
                .position(|r| r.is_odd())
                .ok_or_else(|| Error::Internal(format!("no odd entry in column {j}")))?;
            let i2 = (i1 + 1..dim)
                .find(|&i| residues[i] == residues[i1])
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "no matching residue for row {} in column {j}",
                        i1 + 1
                    ))
                })?;
            let (i1, i2) = (i1 + 1, i2 + 1);
            let s = if i1 == 1 {
                Syllable::H { i2 }
            } else {
                Syllable::HX { i2, i1 }
            };
            emit(&mut work, s);
        }

        let col = work.column(j);
        let nonzero: Vec<usize> = (0..dim).filter(|&i| !col.entries[i].is_zero()).collect();
        let not_unit = || Error::Internal(format!("column {j} is not ±e_a with a <= {j}"));
        let a = match nonzero.as_slice() {
            [i] if *i < j => *i + 1,
            _ => return Err(not_unit()),
        };
        let value = &col.entries[a - 1];
        let tau = if value.is_one() {
            false
        } else if (-value).is_one() {
            true
        } else {
            return Err(not_unit());
        };
        if a == j && !tau {
            continue;
        }
        let s = if a == j {
            Syllable::Z { a }
        } else {
            Syllable::SignedSwap { a, j, tau }
        };
        emit(&mut work, s);
    }

    if !work.is_identity() {
        return Err(Error::Internal(
            "synthesis did not reach the identity".into(),
        ));
    }
    Ok(trace)
}

/// Canonical word `N` with `⟦N⟧ = M`.
pub fn normal_form_word(m: &ExactMatrix) -> Result<Word> {
    Ok(synthesize(m)?.normal_form())
}

/// A word whose semantics is the permutation matrix `X_π` (`X_π e_j = e_{π(j)}`).
///
/// `perm` is 1-based: `perm[j-1] = π(j)`.
pub fn hpermute(perm: &[usize]) -> Result<Word> {
    check_permutation(perm)?;
    let target = ExactMatrix::permutation(perm)?;
    let word = normal_form_word(&target)?;
    if word.sem() != target {
        return Err(Error::Internal(format!(
            "hpermute({perm:?}) lost the permutation"
        )));
    }
    Ok(word)
}
