//! Random well-formed words, value types and well-typed terms.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::lang::{Lang, Prim, Term, ValueType};
use crate::linalg::Generator;
use crate::words::Word;

/// A uniformly random canonical word over `G_n` of length `len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Word {
    let gens = Generator::all(n);
    let picked = (0..len).filter_map(|_| gens.choose(rng).copied()).collect();
    Word::new(n, picked).expect("generators of G_n")
}

/// A random value type with `1 <= hdim <= max_hdim` (or `0` occasionally
/// when `allow_zero`).
pub fn random_type<R: Rng + ?Sized>(
    rng: &mut R,
    max_hdim: usize,
    depth: usize,
    allow_zero: bool,
) -> ValueType {
    loop {
        let t = type_rec(rng, depth, allow_zero);
        let d = t.hdim();
        if d <= max_hdim && (d > 0 || allow_zero) {
            return t;
        }
    }
}

fn type_rec<R: Rng + ?Sized>(rng: &mut R, depth: usize, allow_zero: bool) -> ValueType {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        return if allow_zero && rng.gen_bool(0.15) {
            ValueType::Zero
        } else {
            ValueType::One
        };
    }
    let l = type_rec(rng, depth - 1, allow_zero);
    let r = type_rec(rng, depth - 1, allow_zero);
    if rng.gen_bool(0.6) {
        ValueType::sum(l, r)
    } else {
        ValueType::prod(l, r)
    }
}

/// Primitives that accept `b`, restricted to `lang`.
pub fn applicable_prims(b: &ValueType, lang: Lang) -> Vec<Prim> {
    let mut all = vec![
        Prim::Id,
        Prim::SwapPlus,
        Prim::AssocrPlus,
        Prim::AssoclPlus,
        Prim::UnitePlus,
        Prim::SwapTimes,
        Prim::AssocrTimes,
        Prim::AssoclTimes,
        Prim::UniteTimes,
        Prim::Dist,
        Prim::Factor,
        Prim::Absorb,
        Prim::Neg1,
        Prim::Had,
    ];
    if *b == ValueType::Zero {
        all.push(Prim::Factorz(ValueType::One));
        all.push(Prim::Factorz(ValueType::bit()));
    }
    all.retain(|p| lang.allows(p) && p.target(b).is_some());
    all
}

/// A random term in `lang` that is well typed at `input`.
///
/// `uniti+`/`uniti*` only appear paired with their eliminators, so the
/// result's type has the same dimension as the input.
pub fn random_term<R: Rng + ?Sized>(
    rng: &mut R,
    input: &ValueType,
    lang: Lang,
    depth: usize,
) -> Term {
    let mut choices: Vec<u8> = vec![0, 0];
    if depth > 0 {
        choices.extend([1, 1, 3]);
        if matches!(input, ValueType::Sum(..)) {
            choices.extend([2, 2]);
        }
        if matches!(input, ValueType::Prod(..)) {
            choices.extend([2, 2]);
        }
    }
    match *choices.choose(rng).expect("nonempty") {
        1 => {
            let a = random_term(rng, input, lang, depth - 1);
            let mid = a.typecheck(input).expect("generated term is well typed");
            let b = random_term(rng, &mid, lang, depth - 1);
            Term::seq(a, b)
        }
        2 => match input {
            ValueType::Sum(x, y) => Term::sum(
                random_term(rng, x, lang, depth - 1),
                random_term(rng, y, lang, depth - 1),
            ),
            ValueType::Prod(x, y) => Term::prod(
                random_term(rng, x, lang, depth - 1),
                random_term(rng, y, lang, depth - 1),
            ),
            _ => unreachable!("only offered for compound types"),
        },
        3 => {
            // A unit introduction, some work under it, and its elimination.
            let (intro, elim, wrap): (Prim, Prim, fn(Term) -> Term) = if rng.gen_bool(0.5) {
                (Prim::UnitiPlus, Prim::UnitePlus, |c| Term::sum(Prim::Id, c))
            } else {
                (Prim::UnitiTimes, Prim::UniteTimes, |c| {
                    Term::prod(Prim::Id, c)
                })
            };
            let body = random_term(rng, input, lang, depth - 1);
            Term::seq_all([intro.into(), wrap(body), elim.into()])
        }
        _ => {
            let prims = applicable_prims(input, lang);
            Term::Prim(prims.choose(rng).expect("id always applies").clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_terms_typecheck() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let b = random_type(&mut rng, 8, 3, true);
            for lang in [Lang::Pi, Lang::QPi, Lang::HPi] {
                let c = random_term(&mut rng, &b, lang, 4);
                assert!(c.is_in(lang));
                let out = c.typecheck(&b).unwrap();
                assert_eq!(out.hdim(), b.hdim());
            }
        }
    }

    #[test]
    fn generated_words_are_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = random_word(&mut rng, 4, 30);
        assert_eq!(w.len(), 30);
        assert!(w.is_canonical());
        assert!(random_word(&mut rng, 0, 5).is_empty());
    }
}
