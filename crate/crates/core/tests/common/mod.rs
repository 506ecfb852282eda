#![allow(dead_code)]

use hpi_core::lang::{Lang, Prim, Term, ValueType};
use hpi_core::random::{random_term, random_type};
use hpi_core::{Dyadic, RingInt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// `p + q√2` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formal {
    pub p: BigRational,
    pub q: BigRational,
}

impl Formal {
    pub fn from_ints(p: i64, q: i64) -> Formal {
        Formal {
            p: BigRational::from_integer(p.into()),
            q: BigRational::from_integer(q.into()),
        }
    }

    pub fn add(&self, o: &Formal) -> Formal {
        Formal {
            p: &self.p + &o.p,
            q: &self.q + &o.q,
        }
    }

    pub fn sub(&self, o: &Formal) -> Formal {
        Formal {
            p: &self.p - &o.p,
            q: &self.q - &o.q,
        }
    }

    pub fn mul(&self, o: &Formal) -> Formal {
        let two = BigRational::from_integer(2.into());
        Formal {
            p: &self.p * &o.p + two * &self.q * &o.q,
            q: &self.p * &o.q + &self.q * &o.p,
        }
    }

    fn times_rt2(&self) -> Formal {
        Formal {
            p: BigRational::from_integer(2.into()) * &self.q,
            q: self.p.clone(),
        }
    }

    /// Smallest `k` with `√2^k · self` in `Z[√2]`.
    pub fn min_exponent(&self) -> u32 {
        let mut x = self.clone();
        let mut k = 0;
        while !(x.p.is_integer() && x.q.is_integer()) {
            x = x.times_rt2();
            k += 1;
        }
        k
    }
}

/// `(a + b√2) / √2^k` as `p + q√2`. For odd `k`,
/// `1/√2^k = √2 / 2^((k+1)/2)`.
pub fn to_formal(d: &Dyadic) -> Formal {
    let a = BigRational::from_integer(d.num().a.clone());
    let b = BigRational::from_integer(d.num().b.clone());
    let k = d.k();
    if k.is_multiple_of(2) {
        let den = BigRational::from_integer(BigInt::one() << (k / 2));
        Formal {
            p: a / &den,
            q: b / den,
        }
    } else {
        let den = BigRational::from_integer(BigInt::one() << k.div_ceil(2));
        let two = BigRational::from_integer(2.into());
        Formal {
            p: two * b / &den,
            q: a / den,
        }
    }
}

pub fn random_dyadic<R: Rng>(rng: &mut R) -> Dyadic {
    let a: i64 = rng.gen_range(-50..=50);
    let b: i64 = rng.gen_range(-50..=50);
    let k: u32 = rng.gen_range(0..8);
    Dyadic::reduce(RingInt::new(a, b), k)
}

pub fn formal_is_zero(f: &Formal) -> bool {
    f.p.is_zero() && f.q.is_zero()
}

/// Checks one random operation against the oracle, returning a description
/// of the mismatch if any.
pub fn check_random_op<R: Rng>(rng: &mut R) -> Result<(), String> {
    let x = random_dyadic(rng);
    let y = random_dyadic(rng);
    let (fx, fy) = (to_formal(&x), to_formal(&y));
    let (op, got, want) = match rng.gen_range(0..4) {
        0 => ("+", &x + &y, fx.add(&fy)),
        1 => ("-", &x - &y, fx.sub(&fy)),
        2 => ("*", &x * &y, fx.mul(&fy)),
        _ => ("neg", -&x, Formal::from_ints(0, 0).sub(&fx)),
    };
    if to_formal(&got) != want {
        return Err(format!("{x} {op} {y} gave {got}"));
    }
    if got.lde() != want.min_exponent() {
        return Err(format!(
            "{x} {op} {y}: lde {} but least exponent is {}",
            got.lde(),
            want.min_exponent()
        ));
    }
    if got.is_zero() != formal_is_zero(&want) {
        return Err(format!("{x} {op} {y}: zero test disagrees"));
    }
    Ok(())
}

pub const LAW_FAMILIES: [&str; 7] = [
    "unitality",
    "associativity",
    "annihilativity",
    "bifunctoriality",
    "distributivity",
    "coherence",
    "naturality",
];

/// One side-by-side instance of a level-2 law.
pub struct LawInstance {
    pub name: &'static str,
    pub input: ValueType,
    pub lhs: Term,
    pub rhs: Term,
}

fn ty<R: Rng>(rng: &mut R) -> ValueType {
    random_type(rng, 3, 2, true)
}

fn term<R: Rng>(rng: &mut R, b: &ValueType) -> (Term, ValueType) {
    let c = random_term(rng, b, Lang::QPi, 2);
    let out = c.typecheck(b).expect("generated term is well typed");
    (c, out)
}

fn s(ts: impl IntoIterator<Item = Term>) -> Term {
    Term::seq_all(ts)
}

fn p(x: Prim) -> Term {
    x.into()
}

fn inst(name: &'static str, input: ValueType, lhs: Term, rhs: Term) -> LawInstance {
    LawInstance {
        name,
        input,
        lhs,
        rhs,
    }
}

use ValueType as V;

/// A random instance of a law in `family`.
pub fn law_instance<R: Rng>(rng: &mut R, family: &str) -> LawInstance {
    let (b1, b2, b3, b4) = (ty(rng), ty(rng), ty(rng), ty(rng));
    let (c1, o1) = term(rng, &b1);
    let (c2, o2) = term(rng, &b2);
    let (c3, o3) = term(rng, &b3);
    match family {
        "unitality" => match rng.gen_range(0..6) {
            0 => inst("id;c = c", b1, Term::seq(Term::id(), c1.clone()), c1),
            1 => inst("c;id = c", b1, Term::seq(c1.clone(), Term::id()), c1),
            2 => inst(
                "uniti+;(id+c);unite+ = c",
                b1,
                s([
                    p(Prim::UnitiPlus),
                    Term::sum(Term::id(), c1.clone()),
                    p(Prim::UnitePlus),
                ]),
                c1,
            ),
            3 => inst(
                "unite+;c;uniti+ = id+c",
                V::sum(V::Zero, b1),
                s([p(Prim::UnitePlus), c1.clone(), p(Prim::UnitiPlus)]),
                Term::sum(Term::id(), c1),
            ),
            4 => inst(
                "uniti*;(id*c);unite* = c",
                b1,
                s([
                    p(Prim::UnitiTimes),
                    Term::prod(Term::id(), c1.clone()),
                    p(Prim::UniteTimes),
                ]),
                c1,
            ),
            _ => inst(
                "unite*;c;uniti* = id*c",
                V::prod(V::One, b1),
                s([p(Prim::UniteTimes), c1.clone(), p(Prim::UnitiTimes)]),
                Term::prod(Term::id(), c1),
            ),
        },
        "associativity" => match rng.gen_range(0..7) {
            0 => {
                let (c2, o2) = term(rng, &o1);
                let (c3, _) = term(rng, &o2);
                inst(
                    "c1;(c2;c3) = (c1;c2);c3",
                    b1,
                    Term::seq(c1.clone(), Term::seq(c2.clone(), c3.clone())),
                    Term::seq(Term::seq(c1, c2), c3),
                )
            }
            1 => inst(
                "assocr+;(c1+(c2+c3));assocl+ = (c1+c2)+c3",
                V::sum(V::sum(b1, b2), b3),
                s([
                    p(Prim::AssocrPlus),
                    Term::sum(c1.clone(), Term::sum(c2.clone(), c3.clone())),
                    p(Prim::AssoclPlus),
                ]),
                Term::sum(Term::sum(c1, c2), c3),
            ),
            2 => inst(
                "assocl+;((c1+c2)+c3);assocr+ = c1+(c2+c3)",
                V::sum(b1, V::sum(b2, b3)),
                s([
                    p(Prim::AssoclPlus),
                    Term::sum(Term::sum(c1.clone(), c2.clone()), c3.clone()),
                    p(Prim::AssocrPlus),
                ]),
                Term::sum(c1, Term::sum(c2, c3)),
            ),
            3 => inst(
                "assocr*;(c1*(c2*c3));assocl* = (c1*c2)*c3",
                V::prod(V::prod(b1, b2), b3),
                s([
                    p(Prim::AssocrTimes),
                    Term::prod(c1.clone(), Term::prod(c2.clone(), c3.clone())),
                    p(Prim::AssoclTimes),
                ]),
                Term::prod(Term::prod(c1, c2), c3),
            ),
            4 => inst(
                "assocl*;((c1*c2)*c3);assocr* = c1*(c2*c3)",
                V::prod(b1, V::prod(b2, b3)),
                s([
                    p(Prim::AssoclTimes),
                    Term::prod(Term::prod(c1.clone(), c2.clone()), c3.clone()),
                    p(Prim::AssocrTimes),
                ]),
                Term::prod(c1, Term::prod(c2, c3)),
            ),
            5 => inst(
                "pentagon +",
                V::sum(V::sum(V::sum(b1, b2), b3), b4),
                s([p(Prim::AssocrPlus), p(Prim::AssocrPlus)]),
                s([
                    Term::sum(Prim::AssocrPlus, Prim::Id),
                    p(Prim::AssocrPlus),
                    Term::sum(Prim::Id, Prim::AssocrPlus),
                ]),
            ),
            _ => inst(
                "pentagon *",
                V::prod(V::prod(V::prod(b1, b2), b3), b4),
                s([p(Prim::AssocrTimes), p(Prim::AssocrTimes)]),
                s([
                    Term::prod(Prim::AssocrTimes, Prim::Id),
                    p(Prim::AssocrTimes),
                    Term::prod(Prim::Id, Prim::AssocrTimes),
                ]),
            ),
        },
        "annihilativity" => {
            if rng.gen_bool(0.5) {
                inst(
                    "factorz;(c*id);absorb = id",
                    V::Zero,
                    s([
                        p(Prim::Factorz(b1)),
                        Term::prod(c1, Prim::Id),
                        p(Prim::Absorb),
                    ]),
                    Term::id(),
                )
            } else {
                inst(
                    "absorb;factorz = c*id",
                    V::prod(b1, V::Zero),
                    Term::seq(Prim::Absorb, Prim::Factorz(o1)),
                    Term::prod(c1, Prim::Id),
                )
            }
        }
        "bifunctoriality" => {
            let (c4, _) = term(rng, &o1);
            let (c5, _) = term(rng, &o2);
            match rng.gen_range(0..6) {
                0 => inst(
                    "id+id = id",
                    V::sum(b1, b2),
                    Term::sum(Prim::Id, Prim::Id),
                    Term::id(),
                ),
                1 => inst(
                    "id*id = id",
                    V::prod(b1, b2),
                    Term::prod(Prim::Id, Prim::Id),
                    Term::id(),
                ),
                2 => inst(
                    "(c1+c2);(c3+c4) = (c1;c3)+(c2;c4)",
                    V::sum(b1, b2),
                    Term::seq(
                        Term::sum(c1.clone(), c2.clone()),
                        Term::sum(c4.clone(), c5.clone()),
                    ),
                    Term::sum(Term::seq(c1, c4), Term::seq(c2, c5)),
                ),
                3 => inst(
                    "(c1*c2);(c3*c4) = (c1;c3)*(c2;c4)",
                    V::prod(b1, b2),
                    Term::seq(
                        Term::prod(c1.clone(), c2.clone()),
                        Term::prod(c4.clone(), c5.clone()),
                    ),
                    Term::prod(Term::seq(c1, c4), Term::seq(c2, c5)),
                ),
                4 => inst(
                    "congruence +",
                    V::sum(b1, b2),
                    Term::sum(c1.clone(), c2.clone()),
                    Term::sum(Term::seq(Term::id(), c1), Term::seq(c2, Term::id())),
                ),
                _ => inst(
                    "congruence *",
                    V::prod(b1, b2),
                    Term::prod(c1.clone(), c2.clone()),
                    Term::prod(Term::seq(Term::id(), c1), Term::seq(c2, Term::id())),
                ),
            }
        }
        "distributivity" => {
            if rng.gen_bool(0.5) {
                inst(
                    "factor;((c1+c2)*c3);dist = (c1*c3)+(c2*c3)",
                    V::sum(V::prod(b1, b3.clone()), V::prod(b2, b3)),
                    s([
                        p(Prim::Factor),
                        Term::prod(Term::sum(c1.clone(), c2.clone()), c3.clone()),
                        p(Prim::Dist),
                    ]),
                    Term::sum(Term::prod(c1, c3.clone()), Term::prod(c2, c3)),
                )
            } else {
                inst(
                    "dist;((c1*c3)+(c2*c3));factor = (c1+c2)*c3",
                    V::prod(V::sum(b1, b2), b3),
                    s([
                        p(Prim::Dist),
                        Term::sum(
                            Term::prod(c1.clone(), c3.clone()),
                            Term::prod(c2.clone(), c3.clone()),
                        ),
                        p(Prim::Factor),
                    ]),
                    Term::prod(Term::sum(c1, c2), c3),
                )
            }
        }
        "coherence" => match rng.gen_range(0..6) {
            0 => inst(
                "assocr+;(id+unite+) = (swap+ + id);(unite+ + id)",
                V::sum(V::sum(b1, V::Zero), b2),
                Term::seq(Prim::AssocrPlus, Term::sum(Prim::Id, Prim::UnitePlus)),
                Term::seq(
                    Term::sum(Prim::SwapPlus, Prim::Id),
                    Term::sum(Prim::UnitePlus, Prim::Id),
                ),
            ),
            1 => inst(
                "assocr*;(id*unite*) = (swap* * id);(unite* * id)",
                V::prod(V::prod(b1, V::One), b2),
                Term::seq(Prim::AssocrTimes, Term::prod(Prim::Id, Prim::UniteTimes)),
                Term::seq(
                    Term::prod(Prim::SwapTimes, Prim::Id),
                    Term::prod(Prim::UniteTimes, Prim::Id),
                ),
            ),
            2 => inst(
                "hexagon assocr+",
                V::sum(V::sum(b1, b2), b3),
                s([p(Prim::AssocrPlus), p(Prim::SwapPlus), p(Prim::AssocrPlus)]),
                s([
                    Term::sum(Prim::SwapPlus, Prim::Id),
                    p(Prim::AssocrPlus),
                    Term::sum(Prim::Id, Prim::SwapPlus),
                ]),
            ),
            3 => inst(
                "hexagon assocl+",
                V::sum(b1, V::sum(b2, b3)),
                s([p(Prim::AssoclPlus), p(Prim::SwapPlus), p(Prim::AssoclPlus)]),
                s([
                    Term::sum(Prim::Id, Prim::SwapPlus),
                    p(Prim::AssoclPlus),
                    Term::sum(Prim::SwapPlus, Prim::Id),
                ]),
            ),
            4 => inst(
                "hexagon assocr*",
                V::prod(V::prod(b1, b2), b3),
                s([
                    p(Prim::AssocrTimes),
                    p(Prim::SwapTimes),
                    p(Prim::AssocrTimes),
                ]),
                s([
                    Term::prod(Prim::SwapTimes, Prim::Id),
                    p(Prim::AssocrTimes),
                    Term::prod(Prim::Id, Prim::SwapTimes),
                ]),
            ),
            _ => inst(
                "hexagon assocl*",
                V::prod(b1, V::prod(b2, b3)),
                s([
                    p(Prim::AssoclTimes),
                    p(Prim::SwapTimes),
                    p(Prim::AssoclTimes),
                ]),
                s([
                    Term::prod(Prim::Id, Prim::SwapTimes),
                    p(Prim::AssoclTimes),
                    Term::prod(Prim::SwapTimes, Prim::Id),
                ]),
            ),
        },
        "naturality" => {
            let _ = (o3, c3);
            if rng.gen_bool(0.5) {
                inst(
                    "swap+;(c1+c2);swap+ = c2+c1",
                    V::sum(b2, b1),
                    s([
                        p(Prim::SwapPlus),
                        Term::sum(c1.clone(), c2.clone()),
                        p(Prim::SwapPlus),
                    ]),
                    Term::sum(c2, c1),
                )
            } else {
                inst(
                    "swap*;(c1*c2);swap* = c2*c1",
                    V::prod(b2, b1),
                    s([
                        p(Prim::SwapTimes),
                        Term::prod(c1.clone(), c2.clone()),
                        p(Prim::SwapTimes),
                    ]),
                    Term::prod(c2, c1),
                )
            }
        }
        other => panic!("unknown law family {other}"),
    }
}
