mod common;

use hpi_core::lang::{equiv_terms, parse_term, Lang, Term, ValueType};
use hpi_core::random::{random_term, random_type, random_word};
use hpi_core::translate::{t_q, wsem};
use hpi_core::words::{apply_step, catalog, find_matches};
use hpi_core::{normal_form_word, words_equiv, Dyadic, ExactMatrix, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn word(seed: u64, max_n: usize, max_len: usize) -> Word {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n);
    let len = r.gen_range(0..=max_len);
    random_word(&mut r, n, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concat_is_matrix_product(s1 in any::<u64>(), s2 in any::<u64>()) {
        let w1 = word(s1, 5, 12);
        let w2 = word(s2, 5, 12).embed(w1.dim().max(5)).unwrap();
        let w1 = w1.embed(w2.dim()).unwrap();
        prop_assert_eq!(w1.concat(&w2).sem(), w1.sem().matmul(&w2.sem()).unwrap());
    }

    #[test]
    fn shift_and_embed(seed in any::<u64>(), m in 0usize..3) {
        let w = word(seed, 4, 10);
        let n = w.dim();
        prop_assert_eq!(w.shift(m).sem(), ExactMatrix::identity(m).direct_sum(&w.sem()));
        prop_assert_eq!(w.embed(n + m).unwrap().sem(), w.sem().direct_sum(&ExactMatrix::identity(m)));
        if n > 0 {
            prop_assert!(w.embed(n - 1).is_err());
        }
    }

    #[test]
    fn rewrite_steps_preserve_semantics(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=5);
        let len = r.gen_range(2..=12);
        let w = random_word(&mut r, n, len);
        let rel = catalog().choose(&mut r).unwrap();
        let matches = find_matches(&w, rel);
        if let Some(step) = matches.choose(&mut r) {
            let v = apply_step(&w, step).unwrap();
            prop_assert_eq!(v.sem(), w.sem(), "{}", step);
            prop_assert!(words_equiv(&v, &w).unwrap());
        }
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>()) {
        let w = word(seed, 5, 30);
        let nf = normal_form_word(&w.sem()).unwrap();
        prop_assert_eq!(nf.sem(), w.sem());
        prop_assert_eq!(normal_form_word(&nf.sem()).unwrap(), nf);
    }

    #[test]
    fn word_text_roundtrip(seed in any::<u64>()) {
        let w = word(seed, 6, 20);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn t_q_then_wsem_keeps_semantics(seed in any::<u64>()) {
        let w = word(seed, 5, 10);
        let t = t_q(&w).unwrap();
        let back = wsem(&t, &ValueType::ones(w.dim())).unwrap();
        prop_assert_eq!(back.sem(), w.sem());
    }

    #[test]
    fn terms_are_orthogonal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = random_type(&mut r, 8, 3, true);
        let c = random_term(&mut r, &b, Lang::QPi, 4);
        prop_assert!(c.sem(&b).unwrap().is_orthogonal());
    }

    #[test]
    fn sem_is_functorial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (b1, b2) = (random_type(&mut r, 4, 2, true), random_type(&mut r, 4, 2, true));
        let c1 = random_term(&mut r, &b1, Lang::QPi, 3);
        let o1 = c1.typecheck(&b1).unwrap();
        let c2 = random_term(&mut r, &o1, Lang::QPi, 3);
        let c3 = random_term(&mut r, &b2, Lang::QPi, 3);
        let (m1, m2, m3) = (c1.sem(&b1).unwrap(), c2.sem(&o1).unwrap(), c3.sem(&b2).unwrap());
        prop_assert_eq!(Term::seq(c1.clone(), c2).sem(&b1).unwrap(), m2.matmul(&m1).unwrap());
        let sum = ValueType::sum(b1.clone(), b2.clone());
        prop_assert_eq!(Term::sum(c1.clone(), c3.clone()).sem(&sum).unwrap(), m1.direct_sum(&m3));
        let prod = ValueType::prod(b1, b2);
        prop_assert_eq!(Term::prod(c1, c3).sem(&prod).unwrap(), m1.tensor(&m3));
    }

    #[test]
    fn inverse_composes_to_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = random_type(&mut r, 8, 3, true);
        let c = random_term(&mut r, &b, Lang::QPi, 4);
        let out = c.typecheck(&b).unwrap();
        let inv = c.inverse(&b).unwrap();
        prop_assert_eq!(inv.typecheck(&out).unwrap(), b.clone());
        prop_assert!(equiv_terms(&Term::seq(c.clone(), inv.clone()), &Term::id(), &b).unwrap());
        prop_assert!(equiv_terms(&Term::seq(inv, c), &Term::id(), &out).unwrap());
    }

    #[test]
    fn wsem_of_sum_is_shifted_concat(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y) = (random_type(&mut r, 4, 2, true), random_type(&mut r, 4, 2, true));
        let c1 = random_term(&mut r, &x, Lang::QPi, 3);
        let c2 = random_term(&mut r, &y, Lang::QPi, 3);
        let n = x.hdim() + y.hdim();
        let w = wsem(&Term::sum(c1.clone(), c2.clone()), &ValueType::sum(x.clone(), y.clone())).unwrap();
        let expected = wsem(&c1, &x).unwrap().embed(n).unwrap()
            .concat(&wsem(&c2, &y).unwrap().shift(x.hdim()));
        prop_assert_eq!(w.gens(), expected.gens());
    }

    #[test]
    fn term_text_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = random_type(&mut r, 8, 3, true);
        let c = random_term(&mut r, &b, Lang::QPi, 4);
        let back = parse_term(&c.to_string(), Lang::QPi).unwrap();
        prop_assert!(equiv_terms(&back, &c, &b).unwrap());
        prop_assert_eq!(b.to_string().parse::<ValueType>().unwrap(), b);
    }

    #[test]
    fn dyadic_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        for _ in 0..20 {
            prop_assert_eq!(common::check_random_op(&mut r), Ok(()));
        }
    }

    #[test]
    fn dyadic_text_roundtrip(seed in any::<u64>()) {
        let d = common::random_dyadic(&mut rng(seed));
        prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d);
    }
}
