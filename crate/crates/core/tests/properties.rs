use proptest::prelude::*;

use schubert_aut::demazure::{demazure_apply, demazure_step, dot_action, reflect, Character};
use schubert_aut::weyl::{collect_min_reps, coset_decompose, from_word, parabolic_order};
use schubert_aut::{CartanType, ParabolicSet, Root, RootSystem, Weight, WeylElement, DEFAULT_CAP};

fn types() -> Vec<CartanType> {
    vec![
        CartanType::a(1),
        CartanType::a(3),
        CartanType::a(5),
        CartanType::b2(),
        CartanType::d(4),
        CartanType::d(6),
        CartanType::e(6),
        CartanType::e(7),
        CartanType::e(8),
    ]
}

/// A type index and a word in that type.
fn typed_word() -> impl Strategy<Value = (CartanType, Vec<usize>)> {
    prop::sample::select(types()).prop_flat_map(|ct| {
        let n = ct.rank();
        (Just(ct), prop::collection::vec(1..=n, 0..40))
    })
}

fn typed_word_and_subset() -> impl Strategy<Value = (CartanType, Vec<usize>, u32)> {
    typed_word().prop_flat_map(|(ct, w)| {
        let n = ct.rank();
        (Just(ct), Just(w), 0u32..(1u32 << n))
    })
}

fn weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-6i64..=6, n).prop_map(|v| Weight::from_slice(&v))
}

fn character(n: usize) -> impl Strategy<Value = Character> {
    prop::collection::vec((weight(n), -3i64..=3), 1..5).prop_map(Character::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_matches_inversions_and_reduced_word((ct, word) in typed_word()) {
        let rs = RootSystem::build(ct);
        let w = from_word(&rs, &word).unwrap();
        let red = w.reduced_word(&rs);
        prop_assert_eq!(w.length(&rs), w.inversion_set(&rs).len());
        prop_assert_eq!(w.length(&rs), red.len());
        prop_assert!(red.len() <= word.len());
        prop_assert_eq!(from_word(&rs, &red).unwrap(), w);
    }

    #[test]
    fn inverse_and_form((ct, word) in typed_word()) {
        let rs = RootSystem::build(ct);
        let w = from_word(&rs, &word).unwrap();
        prop_assert!(w.mul(&w.inverse()).is_identity());
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        prop_assert_eq!(from_word(&rs, &rev).unwrap(), w.inverse());
        prop_assert_eq!(w.length(&rs), w.inverse().length(&rs));
        for a in rs.positives().iter().step_by(3) {
            let wa = w.apply(&rs, a).unwrap();
            prop_assert_eq!(w.apply_inv(&rs, &wa).unwrap(), a.clone());
            for b in rs.positives().iter().step_by(5) {
                let wb = Root(w.apply_coords(&b.0));
                prop_assert_eq!(rs.inner(&wa.0, &wb.0), rs.inner(&a.0, &b.0));
            }
        }
    }

    #[test]
    fn coset_factorisation((ct, word, bits) in typed_word_and_subset()) {
        let rs = RootSystem::build(ct);
        let j = ParabolicSet::from_bits(bits);
        let w = from_word(&rs, &word).unwrap();
        let (wj, wjj) = coset_decompose(&rs, &w, j);
        prop_assert!(wj.is_min_rep(j));
        prop_assert!(wjj.in_parabolic(&rs, j));
        prop_assert_eq!(wj.mul(&wjj), w.clone());
        prop_assert_eq!(wj.length(&rs) + wjj.length(&rs), w.length(&rs));
    }

    #[test]
    fn weight_round_trip((ct, word) in typed_word(), k in 0usize..8) {
        let rs = RootSystem::build(ct);
        let beta = rs.positives()[k % rs.num_positive()].clone();
        let w = from_word(&rs, &word).unwrap();
        let img = w.apply(&rs, &beta).unwrap();
        let lam = rs.to_weight(&img);
        prop_assert_eq!(rs.weight_to_root(&lam), Some(img.clone()));
        for i in 1..=rs.rank() {
            prop_assert_eq!(rs.pair(&img, i).unwrap(), lam.0[i - 1]);
        }
    }

    #[test]
    fn demazure_idempotent(chi in character(2), i in 1usize..=2) {
        for rs in [RootSystem::build(CartanType::a(2)), RootSystem::build(CartanType::b2())] {
            let once = demazure_step(&rs, i, &chi).unwrap();
            prop_assert_eq!(demazure_step(&rs, i, &once).unwrap(), once.clone());
            // the image is s_i-symmetric
            let mirrored = Character::from_terms(once.terms().iter().map(|(l, &m)| (reflect(&rs, i, l), m)));
            prop_assert_eq!(mirrored, once);
        }
    }

    #[test]
    fn demazure_antisymmetry(lam in weight(4), i in 1usize..=4) {
        let rs = RootSystem::build(CartanType::d(4));
        let k = lam.0[i - 1];
        prop_assume!(k != -1);
        let a = demazure_step(&rs, i, &Character::monomial(lam.clone())).unwrap();
        let b = demazure_step(&rs, i, &Character::monomial(dot_action(&rs, i, &lam))).unwrap();
        let mut sum = a;
        sum.add_char(&b);
        prop_assert!(sum.is_empty());
    }

    #[test]
    fn dot_action_is_involution(lam in weight(6), i in 1usize..=6) {
        let rs = RootSystem::build(CartanType::e(6));
        prop_assert_eq!(dot_action(&rs, i, &dot_action(&rs, i, &lam)), lam);
    }
}

#[test]
fn braid_relations_all_types() {
    for ct in types() {
        let rs = RootSystem::build(ct);
        let n = rs.rank();
        for i in 1..=n {
            for j in 1..=n {
                let m = rs.coxeter_m(i, j);
                let word: Vec<usize> = (0..2 * m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                assert!(
                    from_word(&rs, &word).unwrap().is_identity(),
                    "{} ({},{})",
                    ct,
                    i,
                    j
                );
            }
        }
    }
}

#[test]
fn root_strings() {
    // p - q = <beta, alpha_i^vee> along the alpha_i-string through beta
    for ct in types() {
        let rs = RootSystem::build(ct);
        for beta in rs.roots() {
            for i in 1..=rs.rank() {
                if beta == rs.simple(i) || beta == -rs.simple(i) {
                    continue;
                }
                let a = rs.simple(i);
                let walk = |step: i64| {
                    let mut k = 0;
                    let mut cur = beta.clone();
                    loop {
                        let next = if step > 0 { &cur + &a } else { &cur - &a };
                        if !rs.is_root(&next.0) {
                            return k;
                        }
                        cur = next;
                        k += 1;
                    }
                };
                let p = walk(-1);
                let q = walk(1);
                assert_eq!(p - q, rs.pair(&beta, i).unwrap(), "{} {} a{}", ct, beta, i);
            }
        }
    }
}

#[test]
fn coset_counts_multiply() {
    for ct in [
        CartanType::a(3),
        CartanType::d(4),
        CartanType::b2(),
        CartanType::a(4),
    ] {
        let rs = RootSystem::build(ct);
        let order = parabolic_order(&rs, ParabolicSet::full(rs.rank()), DEFAULT_CAP).unwrap();
        for j in ParabolicSet::all_subsets(rs.rank()) {
            let reps = collect_min_reps(&rs, j, DEFAULT_CAP).unwrap();
            assert!(reps.iter().all(|w| w.is_min_rep(j)));
            assert_eq!(
                reps.len() * parabolic_order(&rs, j, DEFAULT_CAP).unwrap(),
                order,
                "{} {}",
                ct,
                j
            );
        }
    }
}

/// Every reduced word of every element up to length 4 gives the same operator.
#[test]
fn demazure_word_independence() {
    for ct in [CartanType::a(2), CartanType::b2()] {
        let rs = RootSystem::build(ct);
        let n = rs.rank();
        let probes: Vec<Character> = [[1, 0], [0, 1], [2, -1], [-3, 2], [0, 0], [1, 1], [-1, -2]]
            .iter()
            .map(|c| Character::monomial(Weight::from_slice(c)))
            .chain(std::iter::once(Character::from_terms([
                (Weight::from_slice(&[2, 1]), 1),
                (Weight::from_slice(&[-2, 3]), 2),
            ])))
            .collect();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut by_element: std::collections::BTreeMap<WeylElement, Vec<Vec<usize>>> =
            Default::default();
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &words {
                for i in 1..=n {
                    let mut v = w.clone();
                    v.push(i);
                    let e = from_word(&rs, &v).unwrap();
                    if e.length(&rs) == v.len() {
                        by_element
                            .entry(e.without_word())
                            .or_default()
                            .push(v.clone());
                        next.push(v);
                    }
                }
            }
            words = next;
        }
        for (_, ws) in by_element {
            for chi in &probes {
                let first = demazure_apply(&rs, &ws[0], chi).unwrap();
                for w in &ws[1..] {
                    assert_eq!(
                        demazure_apply(&rs, w, chi).unwrap(),
                        first,
                        "{} {:?} vs {:?}",
                        ct,
                        ws[0],
                        w
                    );
                }
            }
        }
    }
}
