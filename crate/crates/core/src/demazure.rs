//! Characters over the weight lattice and Demazure operators.
//!
//! For a weight `lambda` with `k = <lambda, alpha_i^vee>`:
//!
//! * `k >= 0`: `D_i e^lambda = e^lambda + e^{lambda - alpha_i} + .. + e^{lambda - k alpha_i}`
//! * `k = -1`: `D_i e^lambda = 0`
//! * `k <= -2`: `D_i e^lambda = -(e^{lambda + alpha_i} + .. + e^{lambda + (-k-1) alpha_i})`
//!
//! The zero-weight lines `h(alpha_i)` are tracked only as multiplicity at weight 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{in_support, ParabolicSet, RootSystem, Weight};
use crate::weyl::{from_word, WeylElement};

/// Finite formal sum of `e^lambda`; zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(lambda: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(lambda, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut c = Self::new();
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, lambda: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_char(&mut self, other: &Character) {
        for (w, &m) in &other.terms {
            self.add_term(w.clone(), m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn mult(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &m)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if m < 0 { " - " } else { " + " })?;
            } else if m < 0 {
                write!(f, "-")?;
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "e^({})", w)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term<'a> {
    weight: &'a Weight,
    mult: i64,
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (weight, &mult) in &self.terms {
            seq.serialize_element(&Term { weight, mult })?;
        }
        seq.end()
    }
}

/// `alpha_i` in fundamental-weight coordinates.
pub fn simple_weight(rs: &RootSystem, i: usize) -> Weight {
    rs.to_weight(&rs.simple(i))
}

fn shift(lambda: &Weight, a: &Weight, t: i64) -> Weight {
    Weight(
        lambda
            .0
            .iter()
            .zip(a.0.iter())
            .map(|(x, y)| x + t * y)
            .collect(),
    )
}

/// `s_i(lambda)`.
pub fn reflect(rs: &RootSystem, i: usize, lambda: &Weight) -> Weight {
    shift(lambda, &simple_weight(rs, i), -lambda.0[i - 1])
}

/// `s_i . lambda = s_i(lambda + rho) - rho`.
pub fn dot_action(rs: &RootSystem, i: usize, lambda: &Weight) -> Weight {
    let rho = rs.rho();
    &reflect(rs, i, &(lambda + &rho)) - &rho
}

pub fn demazure_step(rs: &RootSystem, i: usize, chi: &Character) -> Result<Character> {
    rs.check_index(i)?;
    let a = simple_weight(rs, i);
    let mut out = Character::new();
    for (lambda, &m) in chi.terms() {
        let k = lambda.0[i - 1];
        if k >= 0 {
            for j in 0..=k {
                out.add_term(shift(lambda, &a, -j), m);
            }
        } else {
            for j in 1..-k {
                out.add_term(shift(lambda, &a, j), -m);
            }
        }
    }
    Ok(out)
}

/// `D_{i1} .. D_{ik} chi` for a reduced word `[i1, .., ik]`, innermost last.
pub fn demazure_apply(rs: &RootSystem, word: &[usize], chi: &Character) -> Result<Character> {
    let w = from_word(rs, word)?;
    let length = w.length(rs);
    if length != word.len() {
        return Err(Error::NonReducedWord {
            word: word.to_vec(),
            length,
        });
    }
    let mut cur = chi.clone();
    for &i in word.iter().rev() {
        cur = demazure_step(rs, i, &cur)?;
    }
    Ok(cur)
}

/// `sum of e^beta` over `R^+ \ R_J^+`: the weights of `g/p_J`.
pub fn module_character(rs: &RootSystem, j: ParabolicSet) -> Character {
    Character::from_terms(
        rs.positives()
            .iter()
            .filter(|b| !in_support(&b.0, j))
            .map(|b| (rs.to_weight(b), 1)),
    )
}

/// Sum over the filtration weights `beta` of `D_w e^beta`.
pub fn h0_module_character(rs: &RootSystem, w: &WeylElement, j: ParabolicSet) -> Result<Character> {
    let word = w.reduced_word(rs);
    let mut out = Character::new();
    for b in rs.positives().iter().filter(|b| !in_support(&b.0, j)) {
        out.add_char(&demazure_apply(
            rs,
            &word,
            &Character::monomial(rs.to_weight(b)),
        )?);
    }
    Ok(out)
}

/// As [`h0_module_character`], additionally requiring `w` in `W^J` and a
/// genuine (nonnegative) result.
pub fn h0_module_character_strict(
    rs: &RootSystem,
    w: &WeylElement,
    j: ParabolicSet,
) -> Result<Character> {
    if let Some(a) = w.first_violation(j) {
        return Err(Error::NotMinimalRepresentative { alpha: a });
    }
    let c = h0_module_character(rs, w, j)?;
    if !c.is_nonnegative() {
        return Err(Error::Internal(format!("virtual H^0 character {}", c)));
    }
    Ok(c)
}

/// `sum over all roots of e^beta + rank e^0`.
pub fn adjoint_character(rs: &RootSystem) -> Character {
    let mut c = Character::from_terms(rs.roots().map(|b| (rs.to_weight(&b), 1)));
    c.add_term(Weight::zero(rs.rank()), rs.rank() as i64);
    c
}

/// `H^0(s_2 s_1, g/p_2)` in type B2 against the adjoint character.
pub fn b2_adjoint_example() -> Result<(Character, Character)> {
    let rs = RootSystem::build(crate::rootsys::CartanType::b2());
    let w = from_word(&rs, &[2, 1])?;
    let h0 = h0_module_character_strict(&rs, &w, ParabolicSet::single(2))?;
    Ok((h0, adjoint_character(&rs)))
}
