//! Dual Coxeter number, minimal transporters `u` with `u^{-1}(alpha_0) = alpha`,
//! and minimal negators `v` with `v^{-1}(alpha_0) = -alpha_k`.
//!
//! Both are found by breadth-first search on the root graph (vertices are
//! roots, `beta -- s_i(beta)` whenever the two differ). A walk
//! `alpha_0 -> s_{i1} alpha_0 -> .. -> s_{ik} .. s_{i1} alpha_0 = alpha` gives
//! `u = s_{i1} .. s_{ik}`, and minimal-length elements correspond exactly to
//! shortest walks. Every shortest walk is followed, so uniqueness is tested.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{ElementView, WeylElement};

/// `1 + sum of the coefficients of alpha_0^vee` in the simple coroots.
pub fn dual_coxeter(rs: &RootSystem) -> i64 {
    let h = rs.highest();
    let norm = rs.inner(&h.0, &h.0);
    1 + (0..rs.rank())
        .map(|i| {
            let num = 2 * h.0[i] * rs.symmetrizer(i);
            debug_assert_eq!(num % norm, 0);
            num / norm
        })
        .sum::<i64>()
}

#[derive(Debug, Clone)]
pub struct TransporterResult {
    pub target: Root,
    pub element: WeylElement,
    pub length: usize,
    pub unique: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransporterView {
    pub target: Root,
    pub length: usize,
    pub unique: bool,
    pub element: ElementView,
}

impl TransporterResult {
    pub fn view(&self, rs: &RootSystem) -> TransporterView {
        TransporterView {
            target: self.target.clone(),
            length: self.length,
            unique: self.unique,
            element: self.element.view(rs),
        }
    }
}

/// Simple-reflection action on root positions: `table[pos][i]` is the
/// position of `s_{i+1}` applied to the root at `pos`.
fn reflection_table(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank();
    (0..2 * rs.num_positive())
        .map(|p| {
            let beta = rs.root_at(p);
            (0..n)
                .map(|i| {
                    let k = rs.pair0(&beta.0, i);
                    let mut img = beta.0.clone();
                    img[i] -= k;
                    rs.root_position(&img).expect("reflections preserve roots")
                })
                .collect()
        })
        .collect()
}

/// Every element of minimal length sending `alpha_0` to `target`
/// (as `x` with `x(alpha_0) = target`), sorted by matrix.
fn shortest_products(rs: &RootSystem, target: &Root) -> Result<(usize, Vec<WeylElement>)> {
    rs.check_root(target)?;
    let n = rs.rank();
    let table = reflection_table(rs);
    let nv = table.len();
    let start = rs.root_position(&rs.highest().0).unwrap();
    let goal = rs.root_position(&target.0).unwrap();

    let mut dist = vec![usize::MAX; nv];
    let mut order = Vec::with_capacity(nv);
    dist[start] = 0;
    let mut q = VecDeque::from([start]);
    while let Some(p) = q.pop_front() {
        order.push(p);
        for i in 0..n {
            let t = table[p][i];
            if t != p && dist[t] == usize::MAX {
                dist[t] = dist[p] + 1;
                q.push_back(t);
            }
        }
    }

    // products over all shortest walks, propagated in BFS order
    let mut prods: Vec<BTreeSet<WeylElement>> = vec![BTreeSet::new(); nv];
    prods[start].insert(WeylElement::identity(n));
    for &p in &order {
        if p == goal {
            break;
        }
        if dist[p] >= dist[goal] {
            continue;
        }
        let here: Vec<WeylElement> = prods[p].iter().cloned().collect();
        for i in 0..n {
            let t = table[p][i];
            if t != p && dist[t] == dist[p] + 1 {
                for x in &here {
                    prods[t].insert(x.left_mul_simple(rs, i + 1));
                }
            }
        }
    }
    if dist[goal] == usize::MAX {
        return Err(Error::BadArgument(format!(
            "{} is not in the W-orbit of the highest root",
            target
        )));
    }
    Ok((dist[goal], prods[goal].iter().cloned().collect()))
}

fn transporter_to(rs: &RootSystem, target: &Root) -> Result<TransporterResult> {
    let (d, xs) = shortest_products(rs, target)?;
    let mut us: Vec<WeylElement> = xs.iter().map(|x| x.inverse()).collect();
    us.sort();
    let unique = us.len() == 1;
    let element = us.swap_remove(0);
    let length = element.length(rs);
    if length != d {
        return Err(Error::Internal(format!(
            "walk length {} disagrees with element length {}",
            d, length
        )));
    }
    let element = element.with_reduced_word(rs);
    Ok(TransporterResult {
        target: target.clone(),
        element,
        length,
        unique,
    })
}

/// Minimal `u` with `u^{-1}(alpha_0) = alpha`. In simply-laced types the
/// length for a simple target must be `g - 2`.
pub fn minimal_transporter(rs: &RootSystem, alpha: &Root) -> Result<TransporterResult> {
    let res = transporter_to(rs, alpha)?;
    if rs.ctype().simply_laced() && alpha.is_simple() {
        let g = dual_coxeter(rs);
        if res.length as i64 != g - 2 {
            return Err(Error::Internal(format!(
                "transporter to {} has length {}, expected g-2 = {}",
                alpha,
                res.length,
                g - 2
            )));
        }
    }
    Ok(res)
}

/// Minimal `v` with `v^{-1}(alpha_0) = -alpha_k`. In simply-laced types its
/// length must be `ht(alpha_0)` and it must equal `u s_k` for the transporter `u`.
pub fn minimal_negator(rs: &RootSystem, k: usize) -> Result<TransporterResult> {
    rs.check_index(k)?;
    let res = transporter_to(rs, &-rs.simple(k))?;
    if rs.ctype().simply_laced() {
        let ht = rs.highest().height();
        if res.length as i64 != ht {
            return Err(Error::Internal(format!(
                "negator for alpha_{} has length {}, expected {}",
                k, res.length, ht
            )));
        }
        let u = minimal_transporter(rs, &rs.simple(k))?;
        let us = u.element.right_mul_simple(rs, k);
        if us != res.element {
            return Err(Error::Internal(format!(
                "negator for alpha_{} differs from transporter times s_{}",
                k, k
            )));
        }
    }
    Ok(res)
}
