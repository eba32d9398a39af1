use std::cmp::Ordering;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_codes_core::groebner::{reduce, reduced_groebner_basis, s_binomial};
use toric_codes_core::order::{Tiebreak, WeightVector};
use toric_codes_core::toric::{
    code_matrix, exact_generators, graver_basis, indispensable_binomials, universal_gb, ToricConfig, UgbConfig,
};
use toric_codes_core::*;

const VARS: usize = 5;

fn exps() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..5, VARS).prop_map(ExponentVector::from_exponents)
}

fn triple() -> impl Strategy<Value = (ExponentVector, ExponentVector, ExponentVector)> {
    (exps(), exps(), exps())
}

fn check_axioms(o: &MonomialOrder, a: &ExponentVector, b: &ExponentVector, c: &ExponentVector) -> Result<(), TestCaseError> {
    let ab = o.compare(a, b);
    prop_assert_eq!(ab, o.compare(b, a).reverse());
    prop_assert_eq!(ab == Ordering::Equal, a == b);
    if ab != Ordering::Greater && o.compare(b, c) != Ordering::Greater {
        prop_assert_ne!(o.compare(a, c), Ordering::Greater);
    }
    prop_assert_eq!(o.compare(&(a + c), &(b + c)), ab);
    prop_assert_ne!(o.compare(&ExponentVector::one(VARS), a), Ordering::Greater);
    Ok(())
}

fn weights() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..4, VARS)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn lex_is_a_monomial_order((a, b, c) in triple()) {
        check_axioms(&MonomialOrder::Lex, &a, &b, &c)?;
    }

    #[test]
    fn grevlex_is_a_monomial_order((a, b, c) in triple()) {
        check_axioms(&MonomialOrder::Grevlex, &a, &b, &c)?;
    }

    #[test]
    fn weight_grevlex_is_a_monomial_order((a, b, c) in triple(), w in weights()) {
        check_axioms(&MonomialOrder::weighted_grevlex(&w).unwrap(), &a, &b, &c)?;
    }

    #[test]
    fn weight_lex_is_a_monomial_order((a, b, c) in triple(), w in weights(), d in 1i64..4) {
        let q = w.iter().map(|&x| num_rational::Ratio::new(x, d)).collect();
        let o = MonomialOrder::weight(WeightVector::new(q).unwrap(), Tiebreak::Lex);
        check_axioms(&o, &a, &b, &c)?;
    }
}

proptest! {
    #[test]
    fn grevlex_matches_its_definition(a in exps(), b in exps()) {
        let diff: Vec<i64> = a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect();
        let want = a.degree().cmp(&b.degree()).then_with(|| match diff.iter().rev().find(|&&d| d != 0) {
            None => Ordering::Equal,
            Some(&d) if d < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        });
        prop_assert_eq!(MonomialOrder::Grevlex.compare(&a, &b), want);
    }

    #[test]
    fn order_specs_round_trip(w in weights()) {
        for o in [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::weighted_grevlex(&w).unwrap()] {
            prop_assert_eq!(MonomialOrder::parse(&o.spec()).unwrap(), o);
        }
    }
}

/// Codes on 2 to 4 neurons given by a bitmask over the nonzero words.
fn small_code(max_n: usize) -> impl Strategy<Value = Code> {
    (2..=max_n).prop_flat_map(|n| {
        let words = (1u64 << n) - 1;
        (Just(n), 0u64..(1u64 << words)).prop_map(|(n, mask)| {
            let ws = (0..(1u64 << n)).filter(|&w| w == 0 || mask >> (w - 1) & 1 == 1);
            Code::new(n, ws.map(|w| Codeword::from_bits(n, w))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_weight_is_additive(code in small_code(4), seed in any::<u64>()) {
        let m = code.num_vars();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || ExponentVector::from_exponents((0..m).map(|_| rng.gen_range(0..4)).collect());
        let (a, b) = (draw(), draw());
        prop_assert_eq!(code.mu_weight(&(&a + &b)), code.mu_weight(&a) + code.mu_weight(&b));
        let direct: u64 = a.iter_nonzero().map(|(i, e)| u64::from(e) * code.zones()[i].weight() as u64).sum();
        prop_assert_eq!(code.mu_weight(&a), direct);
    }

    #[test]
    fn emitted_binomials_lie_in_the_kernel(code in small_code(4)) {
        let cfg = ToricConfig::default();
        let a = code_matrix(&code).map(|m| m.matrix().clone());
        let Ok(a) = a else { return Ok(()); };
        let gens = exact_generators(&code, &cfg.engine).unwrap();
        for b in &gens {
            prop_assert!(b.in_kernel(&a), "generator {:?}", b);
        }
        for b in indispensable_binomials(&code, 4, &cfg).unwrap() {
            prop_assert!(b.in_kernel(&a));
        }
        if code.num_vars() <= 8 {
            for b in graver_basis(&code, 4, &cfg).unwrap().elements {
                prop_assert!(b.in_kernel(&a));
            }
        }
        for o in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            for b in reduced_groebner_basis(&gens, &o, &cfg.engine).unwrap().elements() {
                prop_assert!(b.in_kernel(&a));
            }
        }
    }

    #[test]
    fn claimed_bases_have_all_s_pairs_reducing_to_zero(code in small_code(4), w in prop::collection::vec(0i64..6, 15)) {
        let cfg = ToricConfig::default();
        let gens = exact_generators(&code, &cfg.engine).unwrap();
        let m = code.num_vars();
        let weighted = MonomialOrder::weighted_grevlex(&w[..m]).unwrap();
        for o in [MonomialOrder::Lex, MonomialOrder::Grevlex, weighted] {
            let gb = reduced_groebner_basis(&gens, &o, &cfg.engine).unwrap();
            let el = gb.elements();
            for (i, f) in el.iter().enumerate() {
                for g in &el[i + 1..] {
                    if let Some(s) = s_binomial(f, g, &o) {
                        prop_assert!(reduce(&s, el, &o).is_none(), "{} / {}", o, code);
                    }
                }
            }
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reduced_basis_is_independent_of_input_order(code in small_code(4), seed in any::<u64>()) {
        let cfg = ToricConfig::default();
        let gens = exact_generators(&code, &cfg.engine).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for o in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let want = reduced_groebner_basis(&gens, &o, &cfg.engine).unwrap();
            for _ in 0..100 {
                let mut shuffled: Vec<Binomial> =
                    gens.iter().map(|b| if rng.gen() { b.negated() } else { b.clone() }).collect();
                shuffled.shuffle(&mut rng);
                let got = reduced_groebner_basis(&shuffled, &o, &cfg.engine).unwrap();
                prop_assert_eq!(got.elements(), want.elements());
            }
        }
    }

    #[test]
    fn sandwich_bounds_are_nested(code in small_code(3), seed in any::<u64>()) {
        let cfg = UgbConfig { random_orders: 4, seed, ..UgbConfig::default() };
        let ugb = universal_gb(&code, &cfg).unwrap();
        let gens = exact_generators(&code, &cfg.toric.engine).unwrap();
        for o in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            for b in reduced_groebner_basis(&gens, &o, &cfg.toric.engine).unwrap().into_elements() {
                prop_assert!(ugb.lower().contains(&b.normalized()));
            }
        }
        for b in ugb.lower() {
            prop_assert!(ugb.upper().contains(b), "{} not in upper bound of {}", b.display(&code), code);
        }
    }
}
