mod common;

use common::{bfs_normal_forms, w, word_strategy};
use freewords::word::{invert_word, is_reduced, is_reducible, positive_projection, reduce, ruler_prefix};
use freewords::Word;
use proptest::prelude::*;

proptest! {
    #[test]
    fn reduce_is_the_unique_normal_form(x in word_strategy(2, 9)) {
        let forms = bfs_normal_forms(&x);
        prop_assert_eq!(forms.len(), 1);
        prop_assert_eq!(forms.into_iter().next().unwrap(), reduce(&x));
    }

    #[test]
    fn reduce_is_idempotent_and_reduced(x in word_strategy(3, 16)) {
        let r = reduce(&x);
        prop_assert!(is_reduced(&r));
        prop_assert_eq!(reduce(&r), r.clone());
        prop_assert_eq!((x.len() - r.len()) % 2, 0);
        prop_assert!(r.len() <= x.len());
    }

    #[test]
    fn inverse_cancels(x in word_strategy(3, 12)) {
        prop_assert!(is_reducible(&x.concat(&invert_word(&x))));
        prop_assert!(is_reducible(&invert_word(&x).concat(&x)));
        prop_assert_eq!(invert_word(&invert_word(&x)), x);
    }

    #[test]
    fn reduction_is_a_homomorphism(x in word_strategy(2, 10), y in word_strategy(2, 10)) {
        let joined = reduce(&x.concat(&y));
        prop_assert_eq!(joined, reduce(&reduce(&x).concat(&reduce(&y))));
    }

    #[test]
    fn positive_projection_drops_inverses(x in word_strategy(3, 12)) {
        let p = positive_projection(&x);
        prop_assert!(p.iter().all(|s| s.is_positive()));
        prop_assert_eq!(p.len(), x.iter().filter(|s| s.is_positive()).count());
    }
}

#[test]
fn small_examples() {
    assert_eq!(reduce(&w(&[1, 2, -2, -1, 1])), w(&[1]));
    assert_eq!(reduce(&w(&[-1, 1, 2])), w(&[2]));
    assert_eq!(reduce(&Word::empty()), Word::empty());
    assert!(is_reducible(&w(&[1, 1, -1, -1])));
    assert!(!is_reducible(&w(&[1, -2])));
}

#[test]
fn ruler_values_are_two_adic_valuations() {
    let r = ruler_prefix(5).unwrap();
    assert_eq!(r.len(), 31);
    for (i, &v) in r.iter().enumerate() {
        assert_eq!(v, (i as u32 + 1).trailing_zeros());
    }
}
