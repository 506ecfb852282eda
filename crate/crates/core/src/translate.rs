//! Translations between Q-Π, Hadamard-Π and generator words.
//!
//! - [`wsem`]: Q-Π term to a word over `G_n`, `n = hdim` of the source.
//! - [`t_q`]: word over `G_n` to a Q-Π term on `n·1`.
//! - [`qsem`]: Hadamard-Π term viewed as a Q-Π term.
//! - [`t_h`]: Q-Π term `c : b1 ↔ b2` to a Hadamard-Π term `1+b1 ↔ 1+b2`
//!   with semantics `I₁ ⊕ sem(c)`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lang::{swap_plus_at, swap_plus_to_end, swap_times_perm, Lang, Prim, Term, ValueType};
use crate::linalg::{ExactMatrix, Generator};
use crate::synthesis::hpermute;
use crate::words::Word;

/// The word translation of a Q-Π term typed at `input`.
pub fn wsem(c: &Term, input: &ValueType) -> Result<Word> {
    Ok(wsem_at(c, input)?.0)
}

fn wsem_at(c: &Term, input: &ValueType) -> Result<(Word, ValueType)> {
    let n = input.hdim();
    match c {
        Term::Prim(p) => {
            let out = c.typecheck(input)?;
            let w = match (p, input) {
                (Prim::Neg1, _) => Word::new(1, vec![Generator::Z(1)])?,
                (Prim::Had, _) => Word::new(2, vec![Generator::H(1, 2)])?,
                (Prim::SwapPlus, ValueType::Sum(x, y)) => {
                    let (n1, n2) = (x.hdim(), y.hdim());
                    let perm: Vec<usize> = (1..=n)
                        .map(|j| if j <= n1 { j + n2 } else { j - n1 })
                        .collect();
                    hpermute(&perm)?
                }
                (Prim::SwapTimes, ValueType::Prod(x, y)) => {
                    hpermute(&swap_times_perm(x.hdim(), y.hdim()))?
                }
                _ => Word::empty(n),
            };
            Ok((w, out))
        }
        Term::Seq(a, b) => {
            let (wa, mid) = wsem_at(a, input)?;
            let (wb, out) = wsem_at(b, &mid)?;
            Ok((wb.concat(&wa), out))
        }
        Term::Sum(a, b) => {
            let (x, y) = match input {
                ValueType::Sum(x, y) => (x, y),
                _ => return Err(type_mismatch(c, input)),
            };
            let (wa, oa) = wsem_at(a, x)?;
            let (wb, ob) = wsem_at(b, y)?;
            let w = wa.embed(n)?.concat(&wb.shift(x.hdim()));
            Ok((w, ValueType::sum(oa, ob)))
        }
        Term::Prod(a, b) => {
            let (x, y) = match input {
                ValueType::Prod(x, y) => (x, y),
                _ => return Err(type_mismatch(c, input)),
            };
            if a.is_id() {
                let (w, out) = wsem_id_prod(x, b, y)?;
                return Ok((w, ValueType::prod((**x).clone(), out)));
            }
            let b3 = a.typecheck(x)?;
            let b4 = b.typecheck(y)?;
            let swap = Term::Prim(Prim::SwapTimes);
            let w1 = wsem(&swap, &ValueType::prod(b4.clone(), b3.clone()))?;
            let (w2, _) = wsem_id_prod(&b4, a, x)?;
            let w3 = wsem(&swap, &ValueType::prod((**x).clone(), b4.clone()))?;
            let (w4, _) = wsem_id_prod(x, b, y)?;
            let w = w1.concat(&w2).concat(&w3).concat(&w4).embed(n)?;
            Ok((w, ValueType::prod(b3, b4)))
        }
    }
}

/// `id_b × c`: one shifted copy of `wsem(c)` per summand of `b`.
fn wsem_id_prod(b: &ValueType, c: &Term, bc: &ValueType) -> Result<(Word, ValueType)> {
    let (wc, out) = wsem_at(c, bc)?;
    let m = bc.hdim();
    let copies = b.hdim();
    let mut w = Word::empty(copies * m);
    for i in 0..copies {
        w = w.concat(&wc.shift(i * m));
    }
    Ok((w.embed(copies * m)?, out))
}

fn type_mismatch(c: &Term, input: &ValueType) -> Error {
    // Reuse the type checker's located message.
    c.typecheck(input)
        .err()
        .unwrap_or_else(|| Error::Internal(format!("`{c}` rejected at {input}")))
}

/// The Q-Π term on `n·1` for a word over `G_n`.
pub fn t_q(w: &Word) -> Result<Term> {
    let n = w.dim();
    let parts = w
        .canonicalize()
        .gens()
        .iter()
        .rev()
        .map(|g| t_q_generator(g, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Term::seq_all(parts))
}

fn t_q_generator(g: &Generator, n: usize) -> Result<Term> {
    Ok(match *g {
        Generator::Z(_) if n == 1 => Prim::Neg1.into(),
        Generator::Z(a) => {
            let s = swap_plus_to_end(a, n)?;
            Term::seq_all([s.clone(), Term::sum(Prim::Id, Prim::Neg1), s])
        }
        Generator::X(b, c) => swap_plus_at(b, c, n)?,
        Generator::H(..) if n == 2 => Prim::Had.into(),
        Generator::H(b, c) => {
            // Move c to position n first, then b to n-1, so that the two
            // moves never disturb each other.
            let sc = swap_plus_to_end(c, n)?;
            let sb = swap_plus_at(b, n - 1, n)?;
            Term::seq_all([
                sc.clone(),
                sb.clone(),
                Prim::AssocrPlus.into(),
                Term::sum(Prim::Id, Prim::Had),
                Prim::AssoclPlus.into(),
                sb,
                sc,
            ])
        }
    })
}

/// Embeds a Hadamard-Π term into Q-Π.
pub fn qsem(c: &Term) -> Result<Term> {
    if !c.is_in(Lang::HPi) {
        return Err(Error::Type {
            at: c.to_string(),
            msg: "not a Hadamard-Π term".into(),
        });
    }
    Ok(c.clone())
}

/// Translates a Q-Π term into Hadamard-Π using one extra summand `1`.
pub fn t_h(c: &Term, input: &ValueType) -> Result<Term> {
    c.typecheck(input)?;
    th(c, input)
}

fn plus_one(t: impl Into<Term>) -> Term {
    Term::sum(Prim::Id, t)
}

fn th(c: &Term, input: &ValueType) -> Result<Term> {
    match c {
        Term::Prim(Prim::Neg1) => Ok(Term::seq_all([
            Prim::Had.into(),
            Prim::SwapPlus.into(),
            Prim::Had.into(),
        ])),
        Term::Prim(p) => Ok(plus_one(p.clone())),
        Term::Seq(a, b) => {
            let mid = a.typecheck(input)?;
            Ok(Term::seq(th(a, input)?, th(b, &mid)?))
        }
        Term::Sum(a, b) => {
            let (x, y) = match input {
                ValueType::Sum(x, y) => (x, y),
                _ => return Err(type_mismatch(c, input)),
            };
            Ok(th_sum(th(a, x)?, th(b, y)?))
        }
        Term::Prod(a, b) => {
            let (x, y) = match input {
                ValueType::Prod(x, y) => (x, y),
                _ => return Err(type_mismatch(c, input)),
            };
            if a.is_id() {
                return th_id_prod(x, b, y, None);
            }
            let b3 = a.typecheck(x)?;
            let swap = plus_one(Prim::SwapTimes);
            Ok(Term::seq_all([
                swap.clone(),
                th_id_prod(y, a, x, None)?,
                swap,
                th_id_prod(&b3, b, y, None)?,
            ]))
        }
    }
}

/// The sum clause, given the translations of both summands.
fn th_sum(t1: Term, t2: Term) -> Term {
    let twist = || Term::sum(Prim::SwapPlus, Prim::Id);
    Term::seq_all([
        Prim::AssoclPlus.into(),
        Term::sum(t1, Prim::Id),
        twist(),
        Prim::AssocrPlus.into(),
        Term::sum(Prim::Id, t2),
        Prim::AssoclPlus.into(),
        twist(),
        Prim::AssocrPlus.into(),
    ])
}

/// Termination measure for the `id_b × c` clauses.
pub fn rank(b: &ValueType) -> BigUint {
    match b {
        ValueType::Zero => BigUint::from(1u32),
        ValueType::One => BigUint::from(2u32),
        ValueType::Sum(x, y) => rank(x) + rank(y),
        ValueType::Prod(x, y) => {
            let r = rank(x) + 1u32;
            &r * &r * rank(y)
        }
    }
}

/// `T_H[id_b × c]` with `c` typed at `bc`, by recursion on `b`.
fn th_id_prod(b: &ValueType, c: &Term, bc: &ValueType, parent: Option<&BigUint>) -> Result<Term> {
    let r = rank(b);
    if let Some(p) = parent {
        if r >= *p {
            return Err(Error::Internal(format!("rank of {b} does not decrease")));
        }
    }
    let out = c.typecheck(bc)?;
    let recur = |b2: &ValueType| th_id_prod(b2, c, bc, Some(&r));
    let seq = |xs: Vec<Term>| Term::seq_all(xs);
    Ok(match b {
        ValueType::Zero => plus_one(seq(vec![
            Prim::SwapTimes.into(),
            Prim::Absorb.into(),
            Term::id(),
            Prim::Factorz(out).into(),
            Prim::SwapTimes.into(),
        ])),
        ValueType::One => seq(vec![
            plus_one(Prim::UniteTimes),
            th(c, bc)?,
            plus_one(Prim::UnitiTimes),
        ]),
        ValueType::Sum(b1, b2) => seq(vec![
            plus_one(Prim::Dist),
            th_sum(recur(b1)?, recur(b2)?),
            plus_one(Prim::Factor),
        ]),
        ValueType::Prod(x, b2) => match &**x {
            ValueType::Zero => plus_one(seq(vec![
                Prim::AssocrTimes.into(),
                Prim::SwapTimes.into(),
                Prim::Absorb.into(),
                Term::id(),
                Prim::Factorz(ValueType::prod((**b2).clone(), out)).into(),
                Prim::SwapTimes.into(),
                Prim::AssoclTimes.into(),
            ])),
            ValueType::One => seq(vec![
                plus_one(Term::seq(Prim::AssocrTimes, Prim::UniteTimes)),
                recur(b2)?,
                plus_one(Term::seq(Prim::UnitiTimes, Prim::AssoclTimes)),
            ]),
            ValueType::Sum(b3, b4) => seq(vec![
                plus_one(Term::prod(Prim::Dist, Prim::Id)),
                recur(&ValueType::sum(
                    ValueType::prod((**b3).clone(), (**b2).clone()),
                    ValueType::prod((**b4).clone(), (**b2).clone()),
                ))?,
                plus_one(Term::prod(Prim::Factor, Prim::Id)),
            ]),
            ValueType::Prod(b3, b4) => seq(vec![
                plus_one(Term::prod(Prim::AssocrTimes, Prim::Id)),
                recur(&ValueType::prod(
                    (**b3).clone(),
                    ValueType::prod((**b4).clone(), (**b2).clone()),
                ))?,
                plus_one(Term::prod(Prim::AssoclTimes, Prim::Id)),
            ]),
        },
    })
}

/// How a translation's output semantics relates to its input's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemanticRelation {
    Equal,
    /// `target = I_pad ⊕ source`.
    Padded {
        pad: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationReport {
    pub input: String,
    pub output: String,
    pub source: ExactMatrix,
    pub target: ExactMatrix,
    pub relation: SemanticRelation,
}

impl TranslationReport {
    /// Fails unless `relation` actually holds between the two matrices.
    pub fn new(
        input: impl fmt::Display,
        output: impl fmt::Display,
        source: ExactMatrix,
        target: ExactMatrix,
        relation: SemanticRelation,
    ) -> Result<TranslationReport> {
        let expected = match relation {
            SemanticRelation::Equal => source.clone(),
            SemanticRelation::Padded { pad } => ExactMatrix::identity(pad).direct_sum(&source),
        };
        if expected != target {
            return Err(Error::Internal(format!(
                "translation of `{input}` does not satisfy {relation:?}"
            )));
        }
        Ok(TranslationReport {
            input: input.to_string(),
            output: output.to_string(),
            source,
            target,
            relation,
        })
    }

    pub fn verdict(&self) -> String {
        match self.relation {
            SemanticRelation::Equal => "verified: semantics preserved".into(),
            SemanticRelation::Padded { pad: 1 } => "verified: I₁ ⊕ source".into(),
            SemanticRelation::Padded { pad } => format!("verified: I{pad} ⊕ source"),
        }
    }
}

impl fmt::Display for TranslationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input {}", self.input)?;
        writeln!(f, "output {}", self.output)?;
        writeln!(f, "{}", self.verdict())?;
        writeln!(f, "# source")?;
        writeln!(f, "{}", self.source)?;
        writeln!(f, "# target")?;
        write!(f, "{}", self.target)
    }
}

/// Checks `sem(t_q(wsem(c))) = sem(c)`.
pub fn roundtrip_check(c: &Term, input: &ValueType) -> Result<TranslationReport> {
    let source = c.sem(input)?;
    let back = t_q(&wsem(c, input)?)?;
    let target = back.sem(&ValueType::ones(input.hdim()))?;
    TranslationReport::new(c, &back, source, target, SemanticRelation::Equal)
}

/// `wsem` with its semantic check.
pub fn report_wsem(c: &Term, input: &ValueType) -> Result<TranslationReport> {
    let w = wsem(c, input)?;
    TranslationReport::new(c, &w, c.sem(input)?, w.sem(), SemanticRelation::Equal)
}

/// `t_q` with its semantic check.
pub fn report_t_q(w: &Word) -> Result<TranslationReport> {
    let t = t_q(w)?;
    let target = t.sem(&ValueType::ones(w.dim()))?;
    TranslationReport::new(w, &t, w.sem(), target, SemanticRelation::Equal)
}

/// `qsem` with its semantic check.
pub fn report_qsem(c: &Term, input: &ValueType) -> Result<TranslationReport> {
    let q = qsem(c)?;
    TranslationReport::new(c, &q, c.sem(input)?, q.sem(input)?, SemanticRelation::Equal)
}

/// `t_h` with its semantic check.
pub fn report_t_h(c: &Term, input: &ValueType) -> Result<TranslationReport> {
    let h = t_h(c, input)?;
    let target = h.sem(&ValueType::sum(ValueType::One, input.clone()))?;
    TranslationReport::new(
        c,
        &h,
        c.sem(input)?,
        target,
        SemanticRelation::Padded { pad: 1 },
    )
}
