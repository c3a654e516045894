//! Minuscule and cominuscule fundamental weights, and the images
//! `w_{0,S\{r}}(alpha_r)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, ParabolicSet, Root, RootSystem};
use crate::weyl::{coset_decompose, longest_element, min_reps};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinusculeReport {
    pub index: usize,
    pub minuscule: bool,
    pub cominuscule: bool,
    pub w0j_image: Root,
}

/// `<omega_r, beta^vee> <= 1` for every positive root, checked root by root.
///
/// `<omega_r, beta^vee> = 2 k_r e_r / (beta, beta)` where `k_r` is the
/// `alpha_r`-coefficient of `beta` and `(alpha_r, alpha_r) = 2 e_r`.
pub fn is_minuscule(rs: &RootSystem, r: usize) -> Result<bool> {
    rs.check_index(r)?;
    let e = rs.symmetrizer(r - 1);
    Ok(rs.positives().iter().all(|b| {
        let norm = rs.inner(&b.0, &b.0);
        let num = 2 * b.0[r - 1] * e;
        debug_assert_eq!(num % norm, 0, "coroot coefficients are integral");
        num / norm <= 1
    }))
}

/// `alpha_r` has coefficient 1 in the highest root.
pub fn is_cominuscule(rs: &RootSystem, r: usize) -> Result<bool> {
    rs.check_index(r)?;
    Ok(rs.highest().coeff(r) == 1)
}

/// `w_{0,S\{r}}(alpha_r)`.
pub fn parabolic_longest_image(rs: &RootSystem, r: usize) -> Result<Root> {
    rs.check_index(r)?;
    let j = ParabolicSet::full(rs.rank()).without(r);
    Ok(longest_element(rs, j).image_of_simple(r))
}

/// Enumerates `W^{S\{r}}` and confirms that `w_0^{S\{r}}` is the only element
/// sending the highest root negative.
pub fn check_minimal_negative_rep(rs: &RootSystem, r: usize, cap: usize) -> Result<bool> {
    if !is_minuscule(rs, r)? {
        return Err(Error::NotMinuscule {
            ctype: rs.ctype().to_string(),
            index: r,
        });
    }
    let n = rs.rank();
    let j = ParabolicSet::full(n).without(r);
    let w0 = longest_element(rs, ParabolicSet::full(n));
    let (expected, _) = coset_decompose(rs, &w0, j);
    let mut hits = Vec::new();
    for v in min_reps(rs, j, cap) {
        let v = v?;
        if v.inverts(&rs.highest().0) {
            hits.push(v);
        }
    }
    Ok(hits.len() == 1 && hits[0] == expected)
}

pub fn classify(rs: &RootSystem) -> Result<Vec<MinusculeReport>> {
    (1..=rs.rank())
        .map(|r| {
            Ok(MinusculeReport {
                index: r,
                minuscule: is_minuscule(rs, r)?,
                cominuscule: is_cominuscule(rs, r)?,
                w0j_image: parabolic_longest_image(rs, r)?,
            })
        })
        .collect()
}

pub fn minuscule_indices(rs: &RootSystem) -> Vec<usize> {
    (1..=rs.rank())
        .filter(|&r| is_minuscule(rs, r).unwrap_or(false))
        .collect()
}

/// The standard table of minuscule fundamental weights, in this crate's
/// node numbering. Used as a reference oracle.
pub fn reference_minuscule(ct: CartanType) -> Vec<usize> {
    let n = ct.rank();
    match ct.family() {
        Family::A => (1..=n).collect(),
        Family::D => vec![1, n - 1, n],
        Family::E => match n {
            6 => vec![1, 6],
            7 => vec![7],
            _ => vec![],
        },
        Family::B => vec![2],
        Family::C => vec![1],
    }
}

/// The node `s` with `alpha_0 = omega_s` in types D and E.
pub fn adjoint_node(ct: CartanType) -> Option<usize> {
    match (ct.family(), ct.rank()) {
        (Family::D, _) => Some(2),
        (Family::E, 6) => Some(2),
        (Family::E, 7) => Some(1),
        (Family::E, 8) => Some(8),
        _ => None,
    }
}
