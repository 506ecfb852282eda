//! Value types, terms, typing and exact semantics for Π, Q-Π and
//! Hadamard-Π.
//!
//! Typing is input-driven: given a source type, every primitive has at most
//! one target type. Semantics follow diagrammatic order, so
//! `sem(c1 ; c2) = sem(c2)·sem(c1)`.

mod derived;
mod parse;

use std::fmt;
use std::str::FromStr;

pub use derived::{
    adjacent_swap, ctrl, gate_ccx, gate_ch, gate_cx, gate_h, gate_x, iterate, swap_plus_at,
    swap_plus_to_end,
};
pub use parse::{parse_term, parse_type};

use crate::error::{Error, ParseError, Result};
use crate::linalg::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueType {
    Zero,
    One,
    Sum(Box<ValueType>, Box<ValueType>),
    Prod(Box<ValueType>, Box<ValueType>),
}

impl ValueType {
    pub fn sum(l: ValueType, r: ValueType) -> ValueType {
        ValueType::Sum(Box::new(l), Box::new(r))
    }

    pub fn prod(l: ValueType, r: ValueType) -> ValueType {
        ValueType::Prod(Box::new(l), Box::new(r))
    }

    /// `1+1`.
    pub fn bit() -> ValueType {
        ValueType::sum(ValueType::One, ValueType::One)
    }

    /// `n·1` as the left-nested sum `((1+1)+1)+…`; `0` for `n = 0`.
    pub fn ones(n: usize) -> ValueType {
        match n {
            0 => ValueType::Zero,
            _ => (1..n).fold(ValueType::One, |t, _| ValueType::sum(t, ValueType::One)),
        }
    }

    pub fn hdim(&self) -> usize {
        match self {
            ValueType::Zero => 0,
            ValueType::One => 1,
            ValueType::Sum(l, r) => l.hdim() + r.hdim(),
            ValueType::Prod(l, r) => l.hdim() * r.hdim(),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            ValueType::Sum(..) => 1,
            ValueType::Prod(..) => 2,
            _ => 3,
        }
    }
}

fn write_operand<T: fmt::Display>(f: &mut fmt::Formatter<'_>, x: &T, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r, op) = match self {
            ValueType::Zero => return f.write_str("0"),
            ValueType::One => return f.write_str("1"),
            ValueType::Sum(l, r) => (l, r, "+"),
            ValueType::Prod(l, r) => (l, r, "*"),
        };
        let p = self.prec();
        write_operand(f, l, l.prec() < p)?;
        f.write_str(op)?;
        write_operand(f, r, r.prec() <= p)
    }
}

impl FromStr for ValueType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_type(s)
    }
}

/// Which extension of Π a term may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lang {
    Pi,
    QPi,
    HPi,
}

impl Lang {
    pub fn allows(&self, p: &Prim) -> bool {
        match p {
            Prim::Neg1 => *self == Lang::QPi,
            Prim::Had => *self != Lang::Pi,
            _ => true,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Lang::Pi => "pi",
            Lang::QPi => "qpi",
            Lang::HPi => "hpi",
        }
    }
}

impl fmt::Display for Lang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lang {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "pi" => Ok(Lang::Pi),
            "qpi" => Ok(Lang::QPi),
            "hpi" => Ok(Lang::HPi),
            _ => Err(ParseError::new(format!("unknown language `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prim {
    Id,
    SwapPlus,
    AssocrPlus,
    AssoclPlus,
    UnitePlus,
    UnitiPlus,
    SwapTimes,
    AssocrTimes,
    AssoclTimes,
    UniteTimes,
    UnitiTimes,
    Dist,
    Factor,
    Absorb,
    /// `factorz : 0 ↔ b×0`; carries `b` so typing stays input-driven.
    Factorz(ValueType),
    Neg1,
    Had,
}

impl Prim {
    pub fn name(&self) -> &'static str {
        match self {
            Prim::Id => "id",
            Prim::SwapPlus => "swap+",
            Prim::AssocrPlus => "assocr+",
            Prim::AssoclPlus => "assocl+",
            Prim::UnitePlus => "unite+",
            Prim::UnitiPlus => "uniti+",
            Prim::SwapTimes => "swap*",
            Prim::AssocrTimes => "assocr*",
            Prim::AssoclTimes => "assocl*",
            Prim::UniteTimes => "unite*",
            Prim::UnitiTimes => "uniti*",
            Prim::Dist => "dist",
            Prim::Factor => "factor",
            Prim::Absorb => "absorb",
            Prim::Factorz(_) => "factorz",
            Prim::Neg1 => "neg1",
            Prim::Had => "had",
        }
    }

    /// Target type for the given source type, if the source matches.
    pub fn target(&self, b: &ValueType) -> Option<ValueType> {
        use ValueType::{One, Prod, Sum, Zero};
        Some(match (self, b) {
            (Prim::Id, _) => b.clone(),
            (Prim::SwapPlus, Sum(x, y)) => Sum(y.clone(), x.clone()),
            (Prim::AssocrPlus, Sum(xy, z)) => match &**xy {
                Sum(x, y) => ValueType::sum((**x).clone(), Sum(y.clone(), z.clone())),
                _ => return None,
            },
            (Prim::AssoclPlus, Sum(x, yz)) => match &**yz {
                Sum(y, z) => ValueType::sum(Sum(x.clone(), y.clone()), (**z).clone()),
                _ => return None,
            },
            (Prim::UnitePlus, Sum(z, x)) if **z == Zero => (**x).clone(),
            (Prim::UnitiPlus, _) => ValueType::sum(Zero, b.clone()),
            (Prim::SwapTimes, Prod(x, y)) => Prod(y.clone(), x.clone()),
            (Prim::AssocrTimes, Prod(xy, z)) => match &**xy {
                Prod(x, y) => ValueType::prod((**x).clone(), Prod(y.clone(), z.clone())),
                _ => return None,
            },
            (Prim::AssoclTimes, Prod(x, yz)) => match &**yz {
                Prod(y, z) => ValueType::prod(Prod(x.clone(), y.clone()), (**z).clone()),
                _ => return None,
            },
            (Prim::UniteTimes, Prod(o, x)) if **o == One => (**x).clone(),
            (Prim::UnitiTimes, _) => ValueType::prod(One, b.clone()),
            (Prim::Dist, Prod(xy, z)) => match &**xy {
                Sum(x, y) => ValueType::sum(Prod(x.clone(), z.clone()), Prod(y.clone(), z.clone())),
                _ => return None,
            },
            (Prim::Factor, Sum(l, r)) => match (&**l, &**r) {
                (Prod(x, z1), Prod(y, z2)) if z1 == z2 => {
                    ValueType::prod(Sum(x.clone(), y.clone()), (**z1).clone())
                }
                _ => return None,
            },
            (Prim::Absorb, Prod(_, z)) if **z == Zero => Zero,
            (Prim::Factorz(t), Zero) => ValueType::prod(t.clone(), Zero),
            (Prim::Neg1, One) => One,
            (Prim::Had, Sum(x, y)) if **x == One && **y == One => b.clone(),
            _ => return None,
        })
    }

    /// The expected source shape, for error messages.
    fn expected(&self) -> &'static str {
        match self {
            Prim::Id | Prim::UnitiPlus | Prim::UnitiTimes => "any type",
            Prim::SwapPlus => "b1+b2",
            Prim::AssocrPlus => "(b1+b2)+b3",
            Prim::AssoclPlus => "b1+(b2+b3)",
            Prim::UnitePlus => "0+b",
            Prim::SwapTimes => "b1*b2",
            Prim::AssocrTimes => "(b1*b2)*b3",
            Prim::AssoclTimes => "b1*(b2*b3)",
            Prim::UniteTimes => "1*b",
            Prim::Dist => "(b1+b2)*b3",
            Prim::Factor => "b1*b3+b2*b3",
            Prim::Absorb => "b*0",
            Prim::Factorz(_) => "0",
            Prim::Neg1 => "1",
            Prim::Had => "1+1",
        }
    }
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prim::Factorz(ValueType::Zero) => f.write_str("factorz"),
            Prim::Factorz(t) => write!(f, "factorz[{t}]"),
            p => f.write_str(p.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Prim(Prim),
    Seq(Box<Term>, Box<Term>),
    Sum(Box<Term>, Box<Term>),
    Prod(Box<Term>, Box<Term>),
}

impl From<Prim> for Term {
    fn from(p: Prim) -> Term {
        Term::Prim(p)
    }
}

impl Term {
    pub fn id() -> Term {
        Term::Prim(Prim::Id)
    }

    pub fn seq(a: impl Into<Term>, b: impl Into<Term>) -> Term {
        Term::Seq(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn sum(a: impl Into<Term>, b: impl Into<Term>) -> Term {
        Term::Sum(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn prod(a: impl Into<Term>, b: impl Into<Term>) -> Term {
        Term::Prod(Box::new(a.into()), Box::new(b.into()))
    }

    /// `c1 ; c2 ; … ; cn`, left-nested; `id` when empty.
    pub fn seq_all(parts: impl IntoIterator<Item = Term>) -> Term {
        parts.into_iter().reduce(Term::seq).unwrap_or_else(Term::id)
    }

    pub fn is_id(&self) -> bool {
        matches!(self, Term::Prim(Prim::Id))
    }

    /// Number of primitive occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Prim(_) => 1,
            Term::Seq(a, b) | Term::Sum(a, b) | Term::Prod(a, b) => a.size() + b.size(),
        }
    }

    /// Every primitive is available in `lang`.
    pub fn is_in(&self, lang: Lang) -> bool {
        match self {
            Term::Prim(p) => lang.allows(p),
            Term::Seq(a, b) | Term::Sum(a, b) | Term::Prod(a, b) => a.is_in(lang) && b.is_in(lang),
        }
    }

    /// Target type for the given source type.
    pub fn typecheck(&self, input: &ValueType) -> Result<ValueType> {
        match self {
            Term::Prim(p) => p.target(input).ok_or_else(|| Error::Type {
                at: p.to_string(),
                msg: format!("expects {}, got {input}", p.expected()),
            }),
            Term::Seq(a, b) => b.typecheck(&a.typecheck(input)?),
            Term::Sum(a, b) => {
                let (x, y) = self.split(input)?;
                Ok(ValueType::sum(a.typecheck(x)?, b.typecheck(y)?))
            }
            Term::Prod(a, b) => {
                let (x, y) = self.split(input)?;
                Ok(ValueType::prod(a.typecheck(x)?, b.typecheck(y)?))
            }
        }
    }

    /// Components of `input` for a `Sum` or `Prod` node.
    fn split<'a>(&self, input: &'a ValueType) -> Result<(&'a ValueType, &'a ValueType)> {
        match (self, input) {
            (Term::Sum(..), ValueType::Sum(x, y)) | (Term::Prod(..), ValueType::Prod(x, y)) => {
                Ok((x, y))
            }
            (Term::Sum(..), _) => Err(self.shape_error("a sum type", input)),
            _ => Err(self.shape_error("a product type", input)),
        }
    }

    fn shape_error(&self, want: &str, got: &ValueType) -> Error {
        Error::Type {
            at: self.to_string(),
            msg: format!("expects {want}, got {got}"),
        }
    }

    /// Source and target type.
    pub fn combinator_type(&self, input: &ValueType) -> Result<CombinatorType> {
        Ok(CombinatorType {
            src: input.clone(),
            dst: self.typecheck(input)?,
        })
    }

    /// Exact semantics as an `hdim(input)`-dimensional orthogonal matrix.
    pub fn sem(&self, input: &ValueType) -> Result<ExactMatrix> {
        Ok(self.eval(input)?.0)
    }

    fn eval(&self, input: &ValueType) -> Result<(ExactMatrix, ValueType)> {
        match self {
            Term::Prim(p) => {
                let out = self.typecheck(input)?;
                Ok((prim_sem(p, input)?, out))
            }
            Term::Seq(a, b) => {
                let (ma, mid) = a.eval(input)?;
                let (mb, out) = b.eval(&mid)?;
                Ok((mb.matmul(&ma)?, out))
            }
            Term::Sum(a, b) | Term::Prod(a, b) => {
                let is_sum = matches!(self, Term::Sum(..));
                let (x, y) = self.split(input)?;
                let (ma, oa) = a.eval(x)?;
                let (mb, ob) = b.eval(y)?;
                Ok(if is_sum {
                    (ma.direct_sum(&mb), ValueType::sum(oa, ob))
                } else {
                    (ma.tensor(&mb), ValueType::prod(oa, ob))
                })
            }
        }
    }

    /// A term with `sem(inverse) = sem(self)ᵀ`, typed at the target type.
    pub fn inverse(&self, input: &ValueType) -> Result<Term> {
        Ok(match self {
            Term::Prim(p) => Term::Prim(match p {
                Prim::AssocrPlus => Prim::AssoclPlus,
                Prim::AssoclPlus => Prim::AssocrPlus,
                Prim::UnitePlus => Prim::UnitiPlus,
                Prim::UnitiPlus => Prim::UnitePlus,
                Prim::AssocrTimes => Prim::AssoclTimes,
                Prim::AssoclTimes => Prim::AssocrTimes,
                Prim::UniteTimes => Prim::UnitiTimes,
                Prim::UnitiTimes => Prim::UniteTimes,
                Prim::Dist => Prim::Factor,
                Prim::Factor => Prim::Dist,
                Prim::Absorb => match input {
                    ValueType::Prod(b, z) if **z == ValueType::Zero => Prim::Factorz((**b).clone()),
                    _ => return Err(self.shape_error("b*0", input)),
                },
                Prim::Factorz(_) => Prim::Absorb,
                p => p.clone(),
            }),
            Term::Seq(a, b) => {
                let mid = a.typecheck(input)?;
                Term::seq(b.inverse(&mid)?, a.inverse(input)?)
            }
            Term::Sum(a, b) | Term::Prod(a, b) => {
                let (x, y) = self.split(input)?;
                let (ia, ib) = (a.inverse(x)?, b.inverse(y)?);
                if matches!(self, Term::Sum(..)) {
                    Term::sum(ia, ib)
                } else {
                    Term::prod(ia, ib)
                }
            }
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Seq(..) => 1,
            Term::Sum(..) => 2,
            Term::Prod(..) => 3,
            Term::Prim(_) => 4,
        }
    }
}

fn prim_sem(p: &Prim, input: &ValueType) -> Result<ExactMatrix> {
    let n = input.hdim();
    Ok(match (p, input) {
        (Prim::SwapPlus, ValueType::Sum(x, y)) => {
            let (n1, n2) = (x.hdim(), y.hdim());
            let perm: Vec<usize> = (1..=n)
                .map(|j| if j <= n1 { j + n2 } else { j - n1 })
                .collect();
            ExactMatrix::permutation(&perm)?
        }
        (Prim::SwapTimes, ValueType::Prod(x, y)) => {
            let (n1, n2) = (x.hdim(), y.hdim());
            ExactMatrix::permutation(&swap_times_perm(n1, n2))?
        }
        (Prim::Neg1, _) => ExactMatrix::minus_one(),
        (Prim::Had, _) => ExactMatrix::hadamard(),
        _ => ExactMatrix::identity(n),
    })
}

/// Row-major `b1×b2 → b2×b1`: pair `(k,l)` (0-based) moves from
/// `k·n2 + l` to `l·n1 + k`. Returned 1-based.
pub(crate) fn swap_times_perm(n1: usize, n2: usize) -> Vec<usize> {
    (0..n1 * n2)
        .map(|j| {
            let (k, l) = (j / n2, j % n2);
            l * n1 + k + 1
        })
        .collect()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r, op) = match self {
            Term::Prim(p) => return write!(f, "{p}"),
            Term::Seq(l, r) => (l, r, " ; "),
            Term::Sum(l, r) => (l, r, " + "),
            Term::Prod(l, r) => (l, r, " * "),
        };
        let p = self.prec();
        write_operand(f, l, l.prec() < p)?;
        f.write_str(op)?;
        write_operand(f, r, r.prec() <= p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorType {
    pub src: ValueType,
    pub dst: ValueType,
}

impl fmt::Display for CombinatorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <-> {}", self.src, self.dst)
    }
}

/// `sem(c1) = sem(c2)` at the given source type; both must have the same target.
pub fn equiv_terms(c1: &Term, c2: &Term, input: &ValueType) -> Result<bool> {
    let (m1, t1) = c1.eval(input)?;
    let (m2, t2) = c2.eval(input)?;
    if t1 != t2 {
        return Err(Error::Type {
            at: c2.to_string(),
            msg: format!("target {t2} differs from {t1}"),
        });
    }
    Ok(m1 == m2)
}
