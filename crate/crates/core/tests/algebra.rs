mod common;

use common::{quotient_by_pair_reachability, random_nfa_with, simulate, w, word_strategy, NfaSpec};
use freewords::algebra::{eq_membership, eq_nonregular_demo, quotient, EqLanguage, PlainLanguageAutomaton};
use freewords::word::{invert_word, reduce};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn positive_nfa() -> impl Strategy<Value = freewords::Nfa> {
    (1..=4usize, 1..=2usize)
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just(k),
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec((0..n, 0..=k as i32, 0..n), 0..=2 * n + 1),
            )
        })
        .prop_map(|(n, k, acc, transitions)| {
            NfaSpec { k, n, accepting: (0..n).filter(|&i| acc[i]).collect(), transitions }.build()
        })
}

proptest! {
    #[test]
    fn quotient_matches_definition(a in positive_nfa(), b in positive_nfa()) {
        prop_assume!(a.alphabet() == b.alphabet());
        let got = quotient(
            &PlainLanguageAutomaton::new(a.clone()).unwrap(),
            &PlainLanguageAutomaton::new(b.clone()).unwrap(),
        ).unwrap();
        let expected = quotient_by_pair_reachability(&a, &b);
        prop_assert!(got.determinize().is_equivalent(&expected.determinize()).unwrap());
    }

    #[test]
    fn eq_depends_only_on_reduction(m in common::nfa_strategy(4, 2), x in word_strategy(2, 8), y in word_strategy(2, 4)) {
        prop_assume!(x.iter().chain(y.iter()).all(|&s| m.alphabet().contains(s)));
        let lang = EqLanguage::new(&m);
        let member = lang.contains(&x).unwrap();
        prop_assert_eq!(member, lang.contains(&reduce(&x)).unwrap());
        let padded = x.concat(&y).concat(&invert_word(&y));
        prop_assert_eq!(member, lang.contains(&padded).unwrap());
    }

    #[test]
    fn language_is_inside_eq(m in common::nfa_strategy(4, 2)) {
        let lang = EqLanguage::new(&m);
        for x in m.enumerate(6) {
            prop_assert!(lang.contains(&x).unwrap());
        }
    }
}

#[test]
fn random_quotients_with_epsilon() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a = random_nfa_with(&mut rng, 4, 2, true, true);
        let b = random_nfa_with(&mut rng, 3, 2, true, true);
        let got = quotient(&PlainLanguageAutomaton::new(a.clone()).unwrap(), &PlainLanguageAutomaton::new(b.clone()).unwrap())
            .unwrap();
        for x in got.enumerate(5) {
            assert!(x.iter().all(|s| s.is_positive()));
            let ext = quotient_by_pair_reachability(&a, &b);
            assert!(simulate(&ext, &x));
        }
    }
}

#[test]
fn eq_of_epsilon_is_the_reducible_words() {
    let e = freewords::Nfa::epsilon_only(freewords::InverseAlphabet::new(1).unwrap());
    assert!(eq_membership(&w(&[-1, -1, 1, 1]), &e).unwrap());
    assert!(!eq_membership(&w(&[1, 1, -1]), &e).unwrap());
    let report = eq_nonregular_demo(10);
    assert!(report.matches_reducible);
    // central binomials
    assert_eq!(report.members_per_length, vec![1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252]);
    assert_eq!(report.separated_prefixes, 5);
}
