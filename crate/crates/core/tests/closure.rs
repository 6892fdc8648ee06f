mod common;

use common::{brute_connected_pairs, nfa_strategy, simulate, w};
use freewords::closure::{
    reduced_language, reduced_language_dfa_state_count, saturate_closure, saturate_closure_naive,
    saturate_closure_with_order,
};
use freewords::families::build_lss2;
use freewords::shortest::reducible_pair_distances;
use freewords::word::{is_reduced, one_step_reductions, reduce};
use freewords::{InverseAlphabet, Label, Nfa, Symbol};
use proptest::prelude::*;
use proptest::sample::subsequence;

proptest! {
    #[test]
    fn saturation_matches_naive_and_distances(m in nfa_strategy(6, 2)) {
        let fast = saturate_closure(&m);
        let naive = saturate_closure_naive(&m);
        prop_assert_eq!(&fast.edges, &naive.edges);
        let table = reducible_pair_distances(&m);
        let finite: std::collections::BTreeSet<_> = table.connected_pairs().collect();
        prop_assert_eq!(&fast.edges, &finite);
        prop_assert!(fast.added_edges.is_subset(&fast.edges));
    }

    #[test]
    fn bounded_search_agrees_with_saturation(m in nfa_strategy(4, 2)) {
        let edges = saturate_closure(&m).edges;
        let table = reducible_pair_distances(&m);
        let brute = brute_connected_pairs(&m, 8);
        prop_assert!(brute.is_subset(&edges));
        for &(p, q) in &edges {
            let short = table.distance(p, q).unwrap() <= &num_bigint::BigUint::from(8u8);
            prop_assert_eq!(short, brute.contains(&(p, q)));
        }
    }

    #[test]
    fn processing_order_is_irrelevant(m in nfa_strategy(6, 2), seed in any::<u64>()) {
        let n = m.state_count();
        let mut rank: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            rank.swap(i, (s % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(saturate_closure_with_order(&m, &rank).edges, saturate_closure(&m).edges);
    }

    #[test]
    fn saturated_language_is_closed_under_cancellation(m in nfa_strategy(5, 2)) {
        let sat = saturate_closure(&m).saturated;
        for x in sat.enumerate(6) {
            for y in one_step_reductions(&x) {
                prop_assert!(simulate(&sat, &y));
            }
        }
        for x in m.enumerate(6) {
            prop_assert!(simulate(&sat, &x));
            prop_assert!(simulate(&sat, &reduce(&x)));
        }
    }

    #[test]
    fn adding_transitions_only_adds_edges(m in nfa_strategy(5, 2), extra in subsequence(vec![1i32, -1, 2, -2, 0], 1)) {
        let before = saturate_closure(&m).edges;
        let mut bigger = m.clone();
        let n = m.state_count();
        let label = Symbol::new(extra[0]).filter(|s| m.alphabet().contains(*s)).map_or(Label::Epsilon, Label::Symbol);
        bigger.add_transition(0, label, n - 1).unwrap();
        prop_assert!(before.is_subset(&saturate_closure(&bigger).edges));
    }

    #[test]
    fn reduced_language_contents(m in nfa_strategy(5, 2)) {
        let r = reduced_language(&m);
        for x in r.enumerate(6) {
            prop_assert!(is_reduced(&x));
        }
        for x in m.enumerate(8) {
            prop_assert!(simulate(&r, &reduce(&x)));
        }
        let k = m.alphabet().k();
        prop_assert!(reduced_language_dfa_state_count(&m) <= (1 << m.state_count()) * (2 * k + 2));
    }
}

#[test]
fn cancelling_path_gets_an_edge() {
    let mut m = Nfa::single_word(InverseAlphabet::new(1).unwrap(), &w(&[1, -1])).unwrap();
    assert!(!m.accepts(&w(&[])).unwrap());
    let res = saturate_closure(&m);
    assert!(res.added_edges.contains(&(0, 2)));
    assert!(res.saturated.accepts(&w(&[])).unwrap());
    m.set_accepting(0, true).unwrap();
    assert_eq!(saturate_closure(&m).edges, res.edges);
}

#[test]
fn one_letter_automaton_gains_nothing() {
    let m = Nfa::single_word(InverseAlphabet::new(2).unwrap(), &w(&[1, 1, 1])).unwrap();
    assert!(saturate_closure(&m).added_edges.is_empty());
}

#[test]
fn lss2_two_edges_follow_distances() {
    let m = build_lss2(2).unwrap().to_nfa();
    let res = saturate_closure(&m);
    let table = reducible_pair_distances(&m);
    assert_eq!(res.edges, table.connected_pairs().collect());
    // q2 = 2, p2 = 4
    assert!(res.edges.contains(&(2, 4)));
    assert_eq!(res.edges, saturate_closure_naive(&m).edges);
}
