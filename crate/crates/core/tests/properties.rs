use std::collections::HashSet;

use braidlab::braid_core::{BraidWord, PermutationBraid};
use braidlab::conjugacy::{
    compute_summit_graph, conjugacy_search, cycle, decycle, final_factor, initial_factor,
    send_to_sss, SummitKind, SummitSet,
};
use braidlab::normal_form::{GarsideNormalForm, LengthFn};
use braidlab::word_problem::{equal, handle_reduce, reduced_burau, Method};
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let m = n as i32 - 1;
    prop::collection::vec((1..=m, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(i, pos)| if pos { i } else { -i })
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn sized_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=6).prop_flat_map(move |n| word(n, max_len))
}

/// Rewrite `w` using only defining relations and free cancellation.
fn rewrite(w: &BraidWord, moves: &[(usize, u8)]) -> BraidWord {
    let mut l = w.letters().to_vec();
    let n = w.strands() as i32;
    for &(pos, kind) in moves {
        let p = if l.is_empty() { 0 } else { pos % (l.len() + 1) };
        match kind % 4 {
            0 => {
                let i = (pos as i32 % (n - 1)) + 1;
                l.splice(p..p, [i, -i]);
            }
            1 if p + 1 < l.len() && (l[p].abs() - l[p + 1].abs()).abs() >= 2 => l.swap(p, p + 1),
            2 if p + 2 < l.len() => {
                let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    l[p] = b;
                    l[p + 1] = a;
                    l[p + 2] = b;
                }
            }
            3 if p + 1 < l.len() && l[p] == -l[p + 1] => {
                l.drain(p..p + 2);
            }
            _ => {}
        }
    }
    BraidWord::new(w.strands(), l).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_invariant_under_relations(
        w in sized_word(20),
        moves in prop::collection::vec((0usize..64, 0u8..4), 0..30),
    ) {
        let r = rewrite(&w, &moves);
        prop_assert_eq!(GarsideNormalForm::of(&w), GarsideNormalForm::of(&r));
        prop_assert!(equal(&w, &r, Method::Handle).unwrap().holds());
        prop_assert!(equal(&w, &r, Method::Fingerprint).unwrap().holds());
    }

    #[test]
    fn normal_form_round_trips(w in sized_word(25)) {
        let x = GarsideNormalForm::of(&w);
        x.check_invariants().unwrap();
        prop_assert_eq!(GarsideNormalForm::of(&x.to_word()), x.clone());
        prop_assert_eq!(x.to_string().parse::<GarsideNormalForm>().unwrap(), x);
    }

    #[test]
    fn delta_squared_is_central(w in sized_word(20)) {
        let n = w.strands();
        let d2 = BraidWord::delta(n).pow(2);
        prop_assert_eq!(GarsideNormalForm::of(&w.concat(&d2)), GarsideNormalForm::of(&d2.concat(&w)));
    }

    #[test]
    fn tau_is_conjugation_by_delta(w in sized_word(20)) {
        let n = w.strands();
        let x = GarsideNormalForm::of(&w);
        let by_delta = x.conjugate_by_word(&BraidWord::delta(n));
        prop_assert_eq!(&by_delta, &x.tau_power(1));
        prop_assert_eq!(GarsideNormalForm::of(&w.shift_tau()), by_delta);
    }

    #[test]
    fn inverse_and_multiplication(u in word(5, 15), v in word(5, 15)) {
        let (x, y) = (GarsideNormalForm::of(&u), GarsideNormalForm::of(&v));
        prop_assert_eq!(x.mul(&y), GarsideNormalForm::of(&u.concat(&v)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(x.inverse(), GarsideNormalForm::of(&u.inverse()));
    }

    #[test]
    fn handle_reduction_agrees_with_normal_forms(u in word(6, 30), v in word(6, 30)) {
        let by_nf = GarsideNormalForm::of(&u) == GarsideNormalForm::of(&v);
        let r = handle_reduce(&u.concat(&v.inverse())).unwrap();
        prop_assert_eq!(r.is_empty(), by_nf);
    }

    #[test]
    fn burau_images_separate_only_distinct_braids(u in word(5, 12), v in word(5, 12)) {
        if reduced_burau(&u) != reduced_burau(&v) {
            prop_assert_ne!(GarsideNormalForm::of(&u), GarsideNormalForm::of(&v));
        }
    }

    #[test]
    fn burau_is_faithful_on_three_strands(u in word(3, 12), v in word(3, 12)) {
        let by_nf = GarsideNormalForm::of(&u) == GarsideNormalForm::of(&v);
        prop_assert_eq!(reduced_burau(&u) == reduced_burau(&v), by_nf);
    }

    #[test]
    fn lengths_are_nonnegative_and_vanish_on_identity(u in word(5, 15), v in word(5, 15)) {
        let c = v.inverse().concat(&u).concat(&v);
        for lf in LengthFn::ALL {
            prop_assert!(lf.of_word(&c) >= 0);
            prop_assert_eq!(lf.of_word(&BraidWord::identity(5)), 0);
        }
    }

    #[test]
    fn initial_factor_of_inverse_is_complement_of_final(w in sized_word(20)) {
        let x = GarsideNormalForm::of(&w);
        prop_assume!(x.canonical_length() > 0);
        prop_assert_eq!(initial_factor(&x.inverse()), final_factor(&x).right_complement());
    }

    #[test]
    fn decycling_is_cycling_of_the_inverse(w in sized_word(20)) {
        let x = GarsideNormalForm::of(&w);
        prop_assume!(x.canonical_length() > 0);
        prop_assert_eq!(decycle(&x), cycle(&x.inverse()).tau_power(1).inverse());
    }

    #[test]
    fn sss_witness_conjugates(w in sized_word(20)) {
        let wit = send_to_sss(&w).unwrap();
        prop_assert!(wit.verify(&GarsideNormalForm::of(&w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn summit_sets_are_nested(w in word(4, 10)) {
        let sets: Vec<HashSet<GarsideNormalForm>> = [SummitKind::Sc, SummitKind::Rsss, SummitKind::Uss, SummitKind::Sss]
            .into_iter()
            .map(|k| compute_summit_graph(&w, k).unwrap().element_set())
            .collect();
        for pair in sets.windows(2) {
            prop_assert!(pair[0].is_subset(&pair[1]));
        }
        prop_assert!(!sets[0].is_empty());
    }

    #[test]
    fn summit_sets_are_conjugacy_invariants(w in word(4, 10), v in word(4, 6)) {
        let y = v.inverse().concat(&w).concat(&v);
        for kind in SummitKind::ALL {
            let gx = compute_summit_graph(&w, kind).unwrap();
            let gy = compute_summit_graph(&y, kind).unwrap();
            prop_assert_eq!(gx.element_set(), gy.element_set());
            prop_assert!(gx.verify());
            let first = gx.vertices[0].element.clone();
            let set = SummitSet::of(kind, &first);
            prop_assert!(gx.elements().all(|e| set.contains(e)));
        }
    }

    #[test]
    fn conjugacy_search_finds_verifying_witness(w in word(5, 10), v in word(5, 8)) {
        let y = v.inverse().concat(&w).concat(&v);
        let c = conjugacy_search(&w, &y, SummitKind::Sc).unwrap().expect("conjugate by construction");
        prop_assert_eq!(
            GarsideNormalForm::of(&c.inverse().concat(&w).concat(&c)),
            GarsideNormalForm::of(&y)
        );
    }
}

#[test]
fn simples_of_b4_have_one_word_each() {
    let simples = braidlab::braid_core::enumerate_simples(4, 4).unwrap();
    let words: HashSet<_> = simples.iter().map(|s| s.word()).collect();
    assert_eq!(words.len(), 24);
    for s in &simples {
        assert_eq!(PermutationBraid::from_word(&s.word()).as_ref(), Some(s));
    }
}
