//! Stabilizers of Schubert varieties `X_{P_J}(w)`, the faithfulness test
//! `w^{-1}(alpha_0) < 0`, witness verification and exhaustive witness search.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::is_minuscule;
use crate::error::{Error, Result};
use crate::rootsys::{in_support, ParabolicSet, RootSystem};
use crate::weyl::{
    coset_decompose, diagram_automorphism, longest_element, min_reps, ElementView, WeylElement,
};

/// Simple `i` with `w^{-1}(alpha_i) < 0` or `w^{-1}(alpha_i)` a positive root
/// supported in `J`. Requires `w` in `W^J`.
pub fn stabilizer_simples(
    rs: &RootSystem,
    w: &WeylElement,
    j: ParabolicSet,
) -> Result<ParabolicSet> {
    if let Some(a) = w.first_violation(j) {
        return Err(Error::NotMinimalRepresentative { alpha: a });
    }
    Ok(stabilizer_unchecked(rs, w, j))
}

fn stabilizer_unchecked(rs: &RootSystem, w: &WeylElement, j: ParabolicSet) -> ParabolicSet {
    ParabolicSet::of((1..=rs.rank()).filter(|&i| {
        let x = w.inv_image_of_simple(i);
        x.is_negative() || in_support(&x.0, j)
    }))
}

/// `w^{-1}(alpha_0)` is a negative root.
pub fn is_faithful(rs: &RootSystem, w: &WeylElement) -> bool {
    w.inverse().inverts(&rs.highest().0)
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub ctype: String,
    pub target: usize,
    pub ambient: ParabolicSet,
    pub element: ElementView,
    pub min_rep: bool,
    pub stabilizer: Option<ParabolicSet>,
    pub faithful: bool,
    pub verdict: bool,
    pub failures: Vec<String>,
}

/// Evaluate a candidate; every failing condition lands in `failures`.
pub fn verify_witness(
    rs: &RootSystem,
    target: usize,
    j: ParabolicSet,
    w: &WeylElement,
) -> Result<WitnessReport> {
    rs.check_index(target)?;
    if let Some(bad) = j.iter().find(|&a| a > rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    let mut failures = Vec::new();
    let min_rep = match w.first_violation(j) {
        None => true,
        Some(a) => {
            failures.push(format!("not in W^J: w(alpha_{}) is negative", a));
            false
        }
    };
    let stabilizer = if min_rep {
        let s = stabilizer_unchecked(rs, w, j);
        if s != ParabolicSet::single(target) {
            failures.push(format!("stabilizer is {}, not {{{}}}", s, target));
        }
        Some(s)
    } else {
        None
    };
    let faithful = is_faithful(rs, w);
    if !faithful {
        failures.push("w^{-1}(alpha_0) is positive".to_string());
    }
    Ok(WitnessReport {
        ctype: rs.ctype().to_string(),
        target,
        ambient: j,
        element: w.view(rs),
        min_rep,
        stabilizer,
        faithful,
        verdict: failures.is_empty(),
        failures,
    })
}

fn is_witness(rs: &RootSystem, target: usize, j: ParabolicSet, w: &WeylElement) -> bool {
    is_faithful(rs, w) && stabilizer_unchecked(rs, w, j) == ParabolicSet::single(target)
}

/// All `(J, w)` with `J` nonempty, `w` in `W^J` and a true verdict, sorted by
/// `J` (cardinality, then lexicographic) and then by matrix.
pub fn search_witnesses(
    rs: &RootSystem,
    target: usize,
    cap: usize,
) -> Result<Vec<(ParabolicSet, WeylElement)>> {
    rs.check_index(target)?;
    let subsets: Vec<ParabolicSet> = ParabolicSet::all_subsets(rs.rank())
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let per_subset: Vec<Result<Vec<(ParabolicSet, WeylElement)>>> = subsets
        .par_iter()
        .map(|&j| {
            let mut found = Vec::new();
            for w in min_reps(rs, j, cap) {
                let w = w?;
                if is_witness(rs, target, j, &w) {
                    found.push((j, w));
                }
            }
            Ok(found)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_subset {
        out.extend(r?);
    }
    out.sort();
    Ok(out)
}

/// For minuscule `r`, the only possible witness element is
/// `w_0^{S\{sigma(r)}}`. Returns true when no nonempty `J` with that element in
/// `W^J` has stabilizer exactly `{r}`.
pub fn minuscule_obstruction(rs: &RootSystem, r: usize) -> Result<bool> {
    if !is_minuscule(rs, r)? {
        return Err(Error::NotMinuscule {
            ctype: rs.ctype().to_string(),
            index: r,
        });
    }
    let n = rs.rank();
    let sigma = diagram_automorphism(rs);
    let full = ParabolicSet::full(n);
    let w0 = longest_element(rs, full);
    let k = full.without(sigma[r - 1]);
    let (cand, _) = coset_decompose(rs, &w0, k);

    // the same element is w_0 w_{0,K}, and its inverse is w_0^{S\{r}}
    if cand != w0.mul(&longest_element(rs, k)) {
        return Err(Error::Internal("w_0^K differs from w_0 w_{0,K}".into()));
    }
    let (other, _) = coset_decompose(rs, &w0, full.without(r));
    if cand.inverse() != other {
        return Err(Error::Internal(
            "(w_0^K)^{-1} differs from w_0^{S\\{r}}".into(),
        ));
    }

    let target = ParabolicSet::single(r);
    Ok(ParabolicSet::all_subsets(n)
        .into_iter()
        .filter(|j| !j.is_empty() && cand.is_min_rep(*j))
        .all(|j| stabilizer_unchecked(rs, &cand, j) != target))
}
