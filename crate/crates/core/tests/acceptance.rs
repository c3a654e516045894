//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schubert_aut::classify::{is_minuscule, minuscule_indices};
use schubert_aut::constructions::{construction, verify_all_suites, D_RANKS, E6_V2, E7_V4, E8_V6};
use schubert_aut::demazure::{
    adjoint_character, demazure_step, dot_action, h0_module_character, Character,
};
use schubert_aut::extremal::{dual_coxeter, minimal_negator, minimal_transporter};
use schubert_aut::schubert::{minuscule_obstruction, search_witnesses, verify_witness};
use schubert_aut::weyl::{collect_min_reps, from_word, longest_element, parabolic_order};
use schubert_aut::{CartanType, ParabolicSet, Root, RootSystem, Weight, WeylElement, DEFAULT_CAP};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion(n: usize, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let res = f();
    let el = start.elapsed();
    let (pass, detail) = match res {
        Ok(d) if el <= budget => (true, d),
        Ok(d) => (false, format!("{} but took {:.2?}", d, el)),
        Err(e) => (false, e),
    };
    println!(
        "{} [{:2}] {} ({:.2?} / budget {:?}): {}",
        if pass { "PASS" } else { "FAIL" },
        n,
        title,
        el,
        budget,
        detail
    );
    pass
}

fn rs(ct: CartanType) -> RootSystem {
    RootSystem::build(ct)
}

fn c1() -> Outcome {
    let mut cases: Vec<(CartanType, Vec<usize>)> = Vec::new();
    for n in 1..=8 {
        cases.push((CartanType::a(n), (1..=n).collect()));
    }
    for n in 4..=8 {
        cases.push((CartanType::d(n), vec![1, n - 1, n]));
    }
    cases.push((CartanType::e(6), vec![1, 6]));
    cases.push((CartanType::e(7), vec![7]));
    cases.push((CartanType::e(8), vec![]));
    for (ct, want) in &cases {
        let got = minuscule_indices(&rs(*ct));
        ensure!(
            got == *want,
            "{}: minuscule {:?}, expected {:?}",
            ct,
            got,
            want
        );
    }
    Ok(format!("{} types match", cases.len()))
}

fn c2() -> Outcome {
    let mut cases: Vec<(CartanType, Vec<i64>)> = vec![
        (CartanType::e(6), vec![1, 2, 2, 3, 2, 1]),
        (CartanType::e(7), vec![2, 2, 3, 4, 3, 2, 1]),
        (CartanType::e(8), vec![2, 3, 4, 6, 5, 4, 3, 2]),
    ];
    for n in 4..=10 {
        let mut c = vec![2; n];
        c[0] = 1;
        c[n - 2] = 1;
        c[n - 1] = 1;
        cases.push((CartanType::d(n), c));
    }
    for (ct, want) in &cases {
        let r = rs(*ct);
        ensure!(
            r.highest().coords() == want.as_slice(),
            "{}: highest root {}",
            ct,
            r.highest()
        );
    }
    Ok(format!("{} highest roots match", cases.len()))
}

fn c3() -> Outcome {
    let mut cases: Vec<(CartanType, i64)> = Vec::new();
    for n in 1..=6 {
        cases.push((CartanType::a(n), n as i64 + 1));
    }
    for n in 4..=6 {
        cases.push((CartanType::d(n), 2 * n as i64 - 2));
    }
    cases.push((CartanType::e(6), 12));
    cases.push((CartanType::e(7), 18));
    cases.push((CartanType::e(8), 30));
    let mut count = 0;
    for (ct, g) in &cases {
        let r = rs(*ct);
        ensure!(
            dual_coxeter(&r) == *g,
            "{}: g = {}, expected {}",
            ct,
            dual_coxeter(&r),
            g
        );
        let ht = r.highest().height();
        for i in 1..=r.rank() {
            let u = lift(minimal_transporter(&r, &r.simple(i)))?;
            ensure!(
                u.length as i64 == g - 2 && u.unique,
                "{} a{}: transporter length {} unique {}",
                ct,
                i,
                u.length,
                u.unique
            );
            let v = lift(minimal_negator(&r, i))?;
            ensure!(
                v.length as i64 == ht && v.unique,
                "{} a{}: negator length {} unique {}",
                ct,
                i,
                v.length,
                v.unique
            );
            count += 1;
        }
    }
    Ok(format!("{} simple roots checked", count))
}

fn c4() -> Outcome {
    for (n, k, word, letters) in [(6, 2, E6_V2, 11), (7, 4, E7_V4, 17), (8, 6, E8_V6, 29)] {
        let r = rs(CartanType::e(n));
        ensure!(
            word.len() == letters,
            "E{} word has {} letters",
            n,
            word.len()
        );
        let v = lift(from_word(&r, word))?;
        ensure!(v.length(&r) == letters, "E{} v_{} is not reduced", n, k);
        let img = Root(v.apply_inv_coords(&r.highest().0));
        ensure!(img == -r.simple(k), "E{}: v^-1(a0) = {}", n, img);
        let neg = lift(minimal_negator(&r, k))?;
        ensure!(
            neg.element == v,
            "E{}: word differs from the BFS negator",
            n
        );
    }
    Ok("v_2, v_4, v_6 reduced, negating, equal to BFS".into())
}

fn c5() -> Outcome {
    let ranks: Vec<usize> = D_RANKS.collect();
    let suites = lift(verify_all_suites(&ranks))?;
    let mut checks = 0;
    let mut errata = 0;
    let mut proof = 0;
    for s in &suites {
        let failing: Vec<&str> = s.failures().map(|c| c.description.as_str()).collect();
        ensure!(s.all_pass, "{} failing: {:?}", s.suite_id, failing);
        checks += s.checks.len();
        errata += s.errata.len();
        proof += s.proof_lines.iter().filter(|p| !p.pass).count();
    }
    Ok(format!(
        "{} suites, {} checks pass; {} refuted misprints and {} proof-line mismatches reported separately",
        suites.len(),
        checks,
        errata,
        proof
    ))
}

fn c6() -> Outcome {
    let mut cases: Vec<(CartanType, usize, usize)> = Vec::new();
    for n in 4..=10 {
        for i in 2..=n - 2 {
            cases.push((CartanType::d(n), i, i));
        }
    }
    for i in 2..=5 {
        cases.push((CartanType::e(6), i, 4));
    }
    for i in 1..=6 {
        cases.push((CartanType::e(7), i, 3));
    }
    for i in 1..=8 {
        cases.push((CartanType::e(8), i, 7));
    }
    for (ct, i, amb) in &cases {
        let r = rs(*ct);
        let (j, w) = lift(construction(&r, *i))?;
        ensure!(
            j == ParabolicSet::single(*amb),
            "{} w_{}: ambient {}",
            ct,
            i,
            j
        );
        let rep = lift(verify_witness(&r, *i, j, &w))?;
        ensure!(rep.verdict, "{} w_{}: {:?}", ct, i, rep.failures);
    }
    Ok(format!("{} constructions verified", cases.len()))
}

fn oracle(types: &[CartanType]) -> Outcome {
    let mut summary = Vec::new();
    for &ct in types {
        let r = rs(ct);
        for i in 1..=r.rank() {
            let found = lift(search_witnesses(&r, i, DEFAULT_CAP))?;
            if lift(is_minuscule(&r, i))? {
                ensure!(
                    found.is_empty(),
                    "{} minuscule {}: {} witnesses",
                    ct,
                    i,
                    found.len()
                );
            } else {
                ensure!(!found.is_empty(), "{} target {}: no witness", ct, i);
                let c = lift(construction(&r, i))?;
                ensure!(
                    found.contains(&c),
                    "{} target {}: construction not among witnesses",
                    ct,
                    i
                );
                summary.push(format!("{}:{}={}", ct, i, found.len()));
            }
        }
    }
    Ok(format!("witness counts {}", summary.join(" ")))
}

fn c7() -> Outcome {
    let start = Instant::now();
    let base = oracle(&[CartanType::a(2), CartanType::a(3), CartanType::d(4)])?;
    let t_base = start.elapsed();
    ensure!(
        t_base <= Duration::from_secs(30),
        "default oracle took {:.2?}",
        t_base
    );
    let start = Instant::now();
    let deep = oracle(&[CartanType::d(5), CartanType::e(6)])?;
    let t_deep = start.elapsed();
    ensure!(
        t_deep <= Duration::from_secs(15 * 60),
        "deep oracle took {:.2?}",
        t_deep
    );
    Ok(format!(
        "default {} ({:.2?}); deep {} ({:.2?})",
        base, t_base, deep, t_deep
    ))
}

fn c8() -> Outcome {
    let mut types: Vec<CartanType> = (1..=8).map(CartanType::a).collect();
    types.extend((4..=10).map(CartanType::d));
    types.extend([CartanType::e(6), CartanType::e(7), CartanType::e(8)]);
    let mut count = 0;
    for ct in types {
        let r = rs(ct);
        for m in minuscule_indices(&r) {
            ensure!(
                lift(minuscule_obstruction(&r, m))?,
                "{} omega_{}: obstruction fails",
                ct,
                m
            );
            count += 1;
        }
    }
    let e7 = rs(CartanType::e(7));
    ensure!(lift(minuscule_obstruction(&e7, 7))?, "E7 omega_7");
    Ok(format!("{} minuscule weights, including E7 omega_7", count))
}

fn c9() -> Outcome {
    let b2 = rs(CartanType::b2());
    let w = lift(from_word(&b2, &[2, 1]))?;
    let h0 = lift(h0_module_character(&b2, &w, ParabolicSet::single(2)))?;
    let adj = adjoint_character(&b2);
    ensure!(h0 == adj, "H^0 = {}, adjoint = {}", h0, adj);
    ensure!(h0.dimension() == 10, "dimension {}", h0.dimension());
    let mut want = Character::new();
    for c in [[1, 0], [1, 1], [1, 2], [0, 1]] {
        let b = Root::from_slice(&c);
        want.add_term(b2.to_weight(&b), 1);
        want.add_term(b2.to_weight(&-b), 1);
    }
    want.add_term(Weight::zero(2), 2);
    ensure!(h0 == want, "weight multiset {}", h0);
    Ok(format!("H^0(s2 s1, g/p_2) = {}", h0))
}

fn random_element(r: &RootSystem, rng: &mut ChaCha8Rng) -> (Vec<usize>, WeylElement) {
    let len = rng.gen_range(0..=2 * r.num_positive().min(60));
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=r.rank())).collect();
    let w = from_word(r, &word).expect("valid word");
    (word, w)
}

fn random_weight(n: usize, rng: &mut ChaCha8Rng) -> Weight {
    Weight((0..n).map(|_| rng.gen_range(-5..=5)).collect())
}

fn random_character(n: usize, rng: &mut ChaCha8Rng) -> Character {
    let k = rng.gen_range(1..=4);
    Character::from_terms((0..k).map(|_| (random_weight(n, rng), rng.gen_range(-2..=3))))
}

fn c10() -> Outcome {
    let mut types: Vec<CartanType> = (1..=8).map(CartanType::a).collect();
    types.extend((4..=10).map(CartanType::d));
    types.extend([
        CartanType::e(6),
        CartanType::e(7),
        CartanType::e(8),
        CartanType::b2(),
    ]);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);

    let mut pairs = 0;
    for &ct in &types {
        let r = rs(ct);
        for i in 1..=r.rank() {
            let s = lift(from_word(&r, &[i, i]))?;
            ensure!(s.is_identity(), "{}: s_{}^2 != e", ct, i);
            for j in i + 1..=r.rank() {
                let m = r.coxeter_m(i, j);
                let a: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let b: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                ensure!(
                    lift(from_word(&r, &a))? == lift(from_word(&r, &b))?,
                    "{}: braid ({}, {})",
                    ct,
                    i,
                    j
                );
                pairs += 1;
            }
        }
    }

    let mut elements = 0;
    for &ct in &types {
        let r = rs(ct);
        for _ in 0..1000 {
            let (word, w) = random_element(&r, &mut rng);
            let l = w.length(&r);
            let inv = w.inversion_set(&r).len();
            let red = w.reduced_word(&r);
            ensure!(
                l == inv && l == red.len() && lift(from_word(&r, &red))? == w,
                "{} word {:?}: length {}, inversions {}, reduced word {:?}",
                ct,
                word,
                l,
                inv,
                red
            );
            elements += 1;
        }
    }

    let mut probes = 0;
    for ct in [CartanType::a(2), CartanType::b2(), CartanType::d(4)] {
        let r = rs(ct);
        let n = r.rank();
        for _ in 0..200 {
            let i = rng.gen_range(1..=n);
            let chi = random_character(n, &mut rng);
            let once = lift(demazure_step(&r, i, &chi))?;
            ensure!(
                lift(demazure_step(&r, i, &once))? == once,
                "{}: D_{} not idempotent on {}",
                ct,
                i,
                chi
            );

            let lam = random_weight(n, &mut rng);
            if lam.0[i - 1] != -1 {
                let a = lift(demazure_step(&r, i, &Character::monomial(lam.clone())))?;
                let b = lift(demazure_step(
                    &r,
                    i,
                    &Character::monomial(dot_action(&r, i, &lam)),
                ))?;
                let mut sum = a.clone();
                sum.add_char(&b);
                ensure!(
                    sum.is_empty(),
                    "{}: antisymmetry fails at {} for i = {}",
                    ct,
                    lam,
                    i
                );
            }
            probes += 1;
        }
    }

    let mut subsets = 0;
    for ct in [CartanType::a(3), CartanType::d(4)] {
        let r = rs(ct);
        let order = lift(parabolic_order(
            &r,
            ParabolicSet::full(r.rank()),
            DEFAULT_CAP,
        ))?;
        let expected = if ct == CartanType::a(3) { 24 } else { 192 };
        ensure!(order == expected, "|W({})| = {}", ct, order);
        for j in ParabolicSet::all_subsets(r.rank()) {
            let reps = lift(collect_min_reps(&r, j, DEFAULT_CAP))?.len();
            let wj = lift(parabolic_order(&r, j, DEFAULT_CAP))?;
            ensure!(
                reps * wj == order,
                "{} J = {}: {} * {} != {}",
                ct,
                j,
                reps,
                wj,
                order
            );
            let w0j = longest_element(&r, j);
            ensure!(
                w0j.length(&r)
                    == r.positives()
                        .iter()
                        .filter(|b| b.support().iter().all(|&k| j.contains(k)))
                        .count(),
                "{}: l(w0_J) for J = {}",
                ct,
                j
            );
            subsets += 1;
        }
    }

    Ok(format!(
        "{} braid pairs over {} types, {} random elements, {} Demazure probes, {} parabolic subsets",
        pairs,
        types.len(),
        elements,
        probes,
        subsets
    ))
}

fn main() {
    let s = Duration::from_secs;
    let results: BTreeMap<usize, bool> = [
        (1, criterion(1, "minuscule classification", s(1), c1)),
        (2, criterion(2, "highest roots", s(1), c2)),
        (3, criterion(3, "transporter and negator lengths", s(5), c3)),
        (4, criterion(4, "printed negator words", s(1), c4)),
        (5, criterion(5, "identity suites", s(10), c5)),
        (6, criterion(6, "witness verdicts", s(10), c6)),
        (
            7,
            criterion(7, "exhaustive witness oracle", s(15 * 60 + 30), c7),
        ),
        (8, criterion(8, "minuscule obstruction", s(5), c8)),
        (9, criterion(9, "B2 Demazure character", s(1), c9)),
        (10, criterion(10, "property suites", s(30), c10)),
    ]
    .into_iter()
    .collect();
    let failed: Vec<usize> = results
        .iter()
        .filter(|(_, &p)| !p)
        .map(|(&k, _)| k)
        .collect();
    if failed.is_empty() {
        println!("acceptance: all 10 criteria pass");
    } else {
        println!("acceptance: failing criteria {:?}", failed);
        std::process::exit(1);
    }
}
