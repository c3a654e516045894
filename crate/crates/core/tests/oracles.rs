//! Independent cross-checks: brute-force group enumeration, Cayley-graph
//! distances, weight orbits, the Weyl dimension formula and Bruhat-order
//! stabilizers.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use schubert_aut::classify::{is_cominuscule, is_minuscule};
use schubert_aut::demazure::{demazure_apply, reflect, Character};
use schubert_aut::extremal::{dual_coxeter, minimal_transporter};
use schubert_aut::schubert::stabilizer_simples;
use schubert_aut::weyl::{collect_min_reps, coset_decompose, longest_element, parabolic_order};
use schubert_aut::{CartanType, ParabolicSet, Root, RootSystem, Weight, WeylElement, DEFAULT_CAP};

fn rs(ct: CartanType) -> RootSystem {
    RootSystem::build(ct)
}

/// Every element with its Cayley-graph distance from the identity.
fn enumerate(r: &RootSystem) -> HashMap<WeylElement, usize> {
    let mut dist = HashMap::new();
    let e = WeylElement::identity(r.rank());
    dist.insert(e.clone(), 0);
    let mut q = VecDeque::from([e]);
    while let Some(w) = q.pop_front() {
        let d = dist[&w];
        for i in 1..=r.rank() {
            let x = w.right_mul_simple(r, i).without_word();
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                q.push_back(x);
            }
        }
    }
    dist
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn group_orders() {
    for n in 1..=6 {
        let r = rs(CartanType::a(n));
        assert_eq!(
            parabolic_order(&r, ParabolicSet::full(n), DEFAULT_CAP).unwrap(),
            factorial(n + 1)
        );
    }
    for n in 4..=6 {
        let r = rs(CartanType::d(n));
        assert_eq!(
            parabolic_order(&r, ParabolicSet::full(n), DEFAULT_CAP).unwrap(),
            (1 << (n - 1)) * factorial(n)
        );
    }
    let e6 = rs(CartanType::e(6));
    assert_eq!(
        parabolic_order(&e6, ParabolicSet::full(6), DEFAULT_CAP).unwrap(),
        51840
    );
    let b2 = rs(CartanType::b2());
    assert_eq!(
        parabolic_order(&b2, ParabolicSet::full(2), DEFAULT_CAP).unwrap(),
        8
    );
}

#[test]
fn positive_root_counts_and_coxeter_numbers() {
    for n in 1..=8 {
        assert_eq!(rs(CartanType::a(n)).num_positive(), n * (n + 1) / 2);
    }
    for n in 4..=10 {
        assert_eq!(rs(CartanType::d(n)).num_positive(), n * (n - 1));
    }
    for (n, count) in [(6, 36), (7, 63), (8, 120)] {
        assert_eq!(rs(CartanType::e(n)).num_positive(), count);
    }
    assert_eq!(rs(CartanType::b2()).num_positive(), 4);
    // simply laced: |R+| = n h / 2 with h = ht(alpha_0) + 1 = g
    let mut laced: Vec<CartanType> = (1..=8).map(CartanType::a).collect();
    laced.extend((4..=10).map(CartanType::d));
    laced.extend((6..=8).map(CartanType::e));
    for ct in laced {
        let r = rs(ct);
        let h = r.highest().height() as usize + 1;
        assert_eq!(2 * r.num_positive(), r.rank() * h, "{}", ct);
        assert_eq!(dual_coxeter(&r), h as i64, "{}", ct);
    }
}

#[test]
fn highest_root_is_the_dominant_positive_root() {
    for ct in [
        CartanType::a(4),
        CartanType::d(5),
        CartanType::e(6),
        CartanType::e(7),
        CartanType::e(8),
        CartanType::b2(),
    ] {
        let r = rs(ct);
        let dominant: Vec<&Root> = r
            .positives()
            .iter()
            .filter(|b| r.to_weight(b).is_dominant())
            .collect();
        // for B2 the highest short root is dominant as well
        let long: Vec<&&Root> = dominant
            .iter()
            .filter(|b| r.inner(&b.0, &b.0) == r.inner(&r.highest().0, &r.highest().0))
            .collect();
        assert_eq!(long.len(), 1, "{}", ct);
        assert_eq!(**long[0], *r.highest());
        for i in 1..=r.rank() {
            assert!(!r.is_root(&(r.highest() + &r.simple(i)).0));
        }
    }
}

#[test]
fn lengths_are_cayley_distances() {
    for ct in [CartanType::a(3), CartanType::b2(), CartanType::d(4)] {
        let r = rs(ct);
        for (w, d) in enumerate(&r) {
            assert_eq!(w.length(&r), d, "{}", ct);
            assert_eq!(w.reduced_word(&r).len(), d);
        }
    }
}

/// Orbit of `omega_r`; minuscule exactly when every orbit weight has
/// coordinates in {-1, 0, 1}.
fn orbit(r: &RootSystem, k: usize) -> BTreeSet<Weight> {
    let start = Weight::fundamental(r.rank(), k);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut q = VecDeque::from([start]);
    while let Some(l) = q.pop_front() {
        for i in 1..=r.rank() {
            let m = reflect(r, i, &l);
            if seen.insert(m.clone()) {
                q.push_back(m);
            }
        }
    }
    seen
}

#[test]
fn minuscule_via_weight_orbits() {
    let cts = [
        CartanType::a(1),
        CartanType::a(4),
        CartanType::d(4),
        CartanType::d(5),
        CartanType::e(6),
        CartanType::e(7),
        CartanType::b2(),
    ];
    for ct in cts {
        let r = rs(ct);
        for k in 1..=r.rank() {
            let o = orbit(&r, k);
            let small = o.iter().all(|l| l.0.iter().all(|c| c.abs() <= 1));
            assert_eq!(is_minuscule(&r, k).unwrap(), small, "{} omega_{}", ct, k);
            if ct.simply_laced() {
                assert_eq!(is_cominuscule(&r, k).unwrap(), small);
            }
            let j = ParabolicSet::full(r.rank()).without(k);
            if let Ok(reps) = collect_min_reps(&r, j, 20_000) {
                assert_eq!(reps.len(), o.len(), "{} omega_{}", ct, k);
            }
        }
    }
}

#[test]
fn transporters_match_brute_force() {
    for ct in [CartanType::a(3), CartanType::d(4), CartanType::b2()] {
        let r = rs(ct);
        let all = enumerate(&r);
        let long = r.inner(&r.highest().0, &r.highest().0);
        for beta in r.roots() {
            if r.inner(&beta.0, &beta.0) != long {
                assert!(minimal_transporter(&r, &beta).is_err());
                continue;
            }
            let hits: Vec<(&WeylElement, usize)> = all
                .iter()
                .filter(|(w, _)| Root(w.apply_inv_coords(&r.highest().0)) == beta)
                .map(|(w, &d)| (w, d))
                .collect();
            let best = hits.iter().map(|x| x.1).min().unwrap();
            let argmin: Vec<&WeylElement> =
                hits.iter().filter(|x| x.1 == best).map(|x| x.0).collect();
            let t = minimal_transporter(&r, &beta).unwrap();
            assert_eq!(t.length, best, "{} {}", ct, beta);
            assert_eq!(t.unique, argmin.len() == 1, "{} {}", ct, beta);
            assert!(argmin.contains(&&t.element.clone().without_word()));
        }
    }
}

/// `s_i` stabilizes `X(w)` iff `(s_i w)^J <= w` in Bruhat order, which for a
/// simple reflection reduces to a length comparison.
#[test]
fn stabilizers_match_bruhat_criterion() {
    for ct in [CartanType::a(3), CartanType::d(4), CartanType::b2()] {
        let r = rs(ct);
        for j in ParabolicSet::all_subsets(r.rank()) {
            for w in collect_min_reps(&r, j, DEFAULT_CAP).unwrap() {
                let lw = w.length(&r);
                let want = ParabolicSet::of((1..=r.rank()).filter(|&i| {
                    let (rep, _) = coset_decompose(&r, &w.left_mul_simple(&r, i), j);
                    rep.length(&r) <= lw
                }));
                assert_eq!(
                    stabilizer_simples(&r, &w, j).unwrap(),
                    want,
                    "{} J={}",
                    ct,
                    j
                );
            }
        }
    }
}

/// `prod over beta > 0 of <lambda + rho, beta^vee> / <rho, beta^vee>`.
fn weyl_dimension(r: &RootSystem, lam: &Weight) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for b in r.positives() {
        // beta^vee = 2 beta / (beta, beta) expressed through symmetrizers
        let norm = r.inner(&b.0, &b.0);
        let mut a: i128 = 0;
        let mut c: i128 = 0;
        for i in 0..r.rank() {
            let coef = 2 * b.0[i] * r.symmetrizer(i);
            a += (coef * (lam.0[i] + 1)) as i128;
            c += coef as i128;
        }
        num *= a / norm as i128;
        den *= c / norm as i128;
    }
    (num / den) as i64
}

#[test]
fn demazure_longest_word_gives_weyl_dimension() {
    for ct in [
        CartanType::a(2),
        CartanType::a(3),
        CartanType::b2(),
        CartanType::d(4),
    ] {
        let r = rs(ct);
        let n = r.rank();
        let word = longest_element(&r, ParabolicSet::full(n)).reduced_word(&r);
        let mut lams: Vec<Weight> = (1..=n).map(|i| Weight::fundamental(n, i)).collect();
        lams.push(Weight::zero(n));
        lams.push(Weight((0..n).map(|i| (i % 2) as i64 + 1).collect()));
        for lam in lams {
            let chi = demazure_apply(&r, &word, &Character::monomial(lam.clone())).unwrap();
            assert!(chi.is_nonnegative());
            assert_eq!(chi.dimension(), weyl_dimension(&r, &lam), "{} {}", ct, lam);
            // the result is W-invariant
            for i in 1..=n {
                let m: BTreeMap<Weight, i64> = chi
                    .terms()
                    .iter()
                    .map(|(l, &k)| (reflect(&r, i, l), k))
                    .collect();
                assert_eq!(&m, chi.terms());
            }
        }
    }
}
