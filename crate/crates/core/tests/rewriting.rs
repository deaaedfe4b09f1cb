//! Rewriting-system invariants: termination to a unique normal form under
//! different strategies, agreement with the closed-form product, and the
//! ring axioms at random.

use downup_core::ncpoly::{
    monomials_of_weight, normal_form_word_with, AlgebraElement, Gen, PbwMonomial, RewriteStrategy,
};
use downup_core::scalar::FieldSpec;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GENS: [Gen; 3] = [Gen::X, Gen::Y, Gen::Z];

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn words_of_len(len: usize) -> Vec<Vec<Gen>> {
    let mut out: Vec<Vec<Gen>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                GENS.iter().map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(*g);
                    w2
                })
            })
            .collect();
    }
    out
}

#[test]
fn confluence_up_to_length_8() {
    for len in 1..=8 {
        for word in words_of_len(len) {
            let left = normal_form_word_with(&word, q().one(), RewriteStrategy::LeftmostRedex);
            let right = normal_form_word_with(&word, q().one(), RewriteStrategy::RightmostRedex);
            assert_eq!(left, right, "word {word:?}");
        }
    }
}

#[test]
fn rewriting_agrees_with_closed_form_products() {
    // the same words, evaluated as iterated products of generators
    for len in 1..=6 {
        for word in words_of_len(len) {
            let rewritten = normal_form_word_with(&word, q().one(), RewriteStrategy::LeftmostRedex);
            let mut product = AlgebraElement::one(q());
            for g in &word {
                product = product.mul(&AlgebraElement::generator(*g, q()));
            }
            assert_eq!(rewritten, product, "word {word:?}");
        }
    }
}

#[test]
fn graded_dimension_matches_lattice_count() {
    for w in 0..=12u32 {
        let dim = monomials_of_weight(w).len();
        let brute = (0..=w)
            .flat_map(|n1| (0..=w).map(move |n2| (n1, n2)))
            .flat_map(|(n1, n2)| (0..=w / 2).map(move |n3| (n1, n2, n3)))
            .filter(|(n1, n2, n3)| n1 + n2 + 2 * n3 == w)
            .count();
        assert_eq!(dim, brute, "weight {w}");
    }
}

#[test]
fn central_elements_commute_with_all_basis_monomials() {
    let x2 = AlgebraElement::monomial(PbwMonomial::new(2, 0, 0), q().one());
    let y2 = AlgebraElement::monomial(PbwMonomial::new(0, 2, 0), q().one());
    let z = AlgebraElement::generator(Gen::Z, q());
    for w in 0..=8u32 {
        for m in monomials_of_weight(w) {
            let a = AlgebraElement::monomial(m, q().one());
            for c in [&x2, &y2, &z] {
                assert_eq!(c.mul(&a), a.mul(c), "[{c}, {a}] != 0");
            }
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, max_weight: u32) -> AlgebraElement {
    let mut e = AlgebraElement::zero();
    for w in 0..=max_weight {
        for m in monomials_of_weight(w) {
            if rng.gen_bool(0.3) {
                let k = rng.gen_range(-4i64..=4);
                e.add_term(m, q().integer(k));
            }
        }
    }
    e
}

#[test]
fn products_of_nonzero_elements_are_nonzero() {
    // the algebra is a domain; 200 seeded random pairs of weight <= 5
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 200 {
        let a = random_element(&mut rng, 5);
        let b = random_element(&mut rng, 5);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        checked += 1;
        assert!(!a.mul(&b).is_zero(), "({a}) * ({b}) = 0");
    }
}

fn arb_element() -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec(((0u32..3, 0u32..3, 0u32..2), -3i64..=3), 0..5).prop_map(|terms| {
        let mut e = AlgebraElement::zero();
        for ((n1, n2, n3), k) in terms {
            e.add_term(PbwMonomial::new(n1, n2, n3), q().integer(k));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in arb_element(), b in arb_element(), c in arb_element()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn addition_cancels(a in arb_element()) {
        prop_assert!(a.sub(&a).is_zero());
    }
}
