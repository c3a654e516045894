//! Weyl group elements as integer matrices on root-lattice coordinates.
//!
//! Column `j` of the matrix holds `w(alpha_j)` in the simple-root basis. A word
//! `[i1, .., ik]` denotes the product `s_{i1} s_{i2} .. s_{ik}`, so the last
//! letter acts first.

use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Coords, ParabolicSet, Root, RootSystem};

/// Default bound on the number of elements any coset enumeration may yield.
pub const DEFAULT_CAP: usize = 200_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    n: usize,
    m: Vec<i64>,
    inv: Vec<i64>,
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.m.hash(h);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.m.cmp(&o.m)
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

fn matvec(n: usize, a: &[i64], v: &[i64]) -> Coords {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
        .collect()
}

/// Sign of a sign-coherent vector: the first nonzero entry decides.
fn first_sign(n: usize, a: &[i64], v: &[i64]) -> i64 {
    for i in 0..n {
        let x: i64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
        if x != 0 {
            return x.signum();
        }
    }
    0
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            n,
            m: identity_matrix(n),
            inv: identity_matrix(n),
            word: Some(Vec::new()),
        }
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        Ok(Self::identity(rs.rank()).left_mul_simple(rs, i))
    }

    /// `s_{i1} .. s_{ik}`; the word is cached verbatim, reduced or not.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        for &i in word {
            rs.check_index(i)?;
        }
        let mut w = Self::identity(rs.rank());
        for &i in word.iter().rev() {
            w = w.left_mul_simple(rs, i);
        }
        w.word = Some(word.to_vec());
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.m == identity_matrix(self.n)
    }

    /// The cached word, if any. Not necessarily reduced.
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn without_word(mut self) -> Self {
        self.word = None;
        self
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        (0..n)
            .map(|i| self.m[i * n..(i + 1) * n].to_vec())
            .collect()
    }

    pub fn flat_matrix(&self) -> &[i64] {
        &self.m
    }

    pub fn determinant_sign(&self, rs: &RootSystem) -> i64 {
        if self.length(rs).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `s_i w`: only row `i` changes.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let n = self.n;
        let i0 = i - 1;
        let mut m = self.m.clone();
        for col in 0..n {
            let mut v = self.m[i0 * n + col];
            for k in 0..n {
                v -= rs.c(i0, k) * self.m[k * n + col];
            }
            m[i0 * n + col] = v;
        }
        // (s_i w)^{-1} = w^{-1} s_i: column j -= C[i][j] * column i
        let mut inv = self.inv.clone();
        for j in 0..n {
            let c = rs.c(i0, j);
            if j == i0 || c == 0 {
                continue;
            }
            for r in 0..n {
                inv[r * n + j] -= c * self.inv[r * n + i0];
            }
        }
        for r in 0..n {
            inv[r * n + i0] = -self.inv[r * n + i0];
        }
        let word = self.word.as_ref().map(|w| {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(i);
            v.extend_from_slice(w);
            v
        });
        WeylElement { n, m, inv, word }
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        self.inverse().left_mul_simple(rs, i).inverse()
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            n: self.n,
            m: self.inv.clone(),
            inv: self.m.clone(),
            word: self
                .word
                .as_ref()
                .map(|w| w.iter().rev().copied().collect()),
        }
    }

    /// Product `self * other` (other acts first).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).copied().collect()),
            _ => None,
        };
        WeylElement {
            n,
            m: matmul(n, &self.m, &other.m),
            inv: matmul(n, &other.inv, &self.inv),
            word,
        }
    }

    pub fn apply_coords(&self, c: &[i64]) -> Coords {
        matvec(self.n, &self.m, c)
    }

    pub fn apply_inv_coords(&self, c: &[i64]) -> Coords {
        matvec(self.n, &self.inv, c)
    }

    /// `w(beta)`; a non-root image means the element is corrupted.
    pub fn apply(&self, rs: &RootSystem, beta: &Root) -> Result<Root> {
        rs.check_root(beta)?;
        let img = Root(self.apply_coords(&beta.0));
        if rs.is_root(&img.0) {
            Ok(img)
        } else {
            Err(Error::Internal(format!(
                "element maps {} to non-root {:?}",
                beta, img.0
            )))
        }
    }

    /// `w^{-1}(beta)`.
    pub fn apply_inv(&self, rs: &RootSystem, beta: &Root) -> Result<Root> {
        self.inverse().apply(rs, beta)
    }

    /// `w(alpha_j)` for 1-based `j`: a column read.
    pub fn image_of_simple(&self, j: usize) -> Root {
        let n = self.n;
        Root((0..n).map(|r| self.m[r * n + j - 1]).collect())
    }

    /// `w^{-1}(alpha_j)` for 1-based `j`.
    pub fn inv_image_of_simple(&self, j: usize) -> Root {
        let n = self.n;
        Root((0..n).map(|r| self.inv[r * n + j - 1]).collect())
    }

    /// Sign of `w(alpha_j)`, 0-based `j`.
    #[inline]
    fn col_sign(&self, j: usize) -> i64 {
        let n = self.n;
        (0..n)
            .map(|r| self.m[r * n + j])
            .find(|&x| x != 0)
            .map_or(0, i64::signum)
    }

    /// Sign of `w^{-1}(alpha_j)`, 0-based `j`.
    #[inline]
    fn inv_col_sign(&self, j: usize) -> i64 {
        let n = self.n;
        (0..n)
            .map(|r| self.inv[r * n + j])
            .find(|&x| x != 0)
            .map_or(0, i64::signum)
    }

    /// Whether `w` sends the positive root `beta` to a negative root.
    pub fn inverts(&self, beta: &[i64]) -> bool {
        first_sign(self.n, &self.m, beta) < 0
    }

    /// Number of positive roots sent negative.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positives().iter().filter(|b| self.inverts(&b.0)).count()
    }

    /// `{beta > 0 : w(beta) < 0}` in root-table order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positives()
            .iter()
            .filter(|b| self.inverts(&b.0))
            .cloned()
            .collect()
    }

    /// Right descents: simple `i` with `w(alpha_i) < 0`.
    pub fn right_descents(&self) -> ParabolicSet {
        ParabolicSet::of((0..self.n).filter(|&j| self.col_sign(j) < 0).map(|j| j + 1))
    }

    /// Left descents: simple `i` with `w^{-1}(alpha_i) < 0`.
    pub fn left_descents(&self) -> ParabolicSet {
        ParabolicSet::of(
            (0..self.n)
                .filter(|&j| self.inv_col_sign(j) < 0)
                .map(|j| j + 1),
        )
    }

    /// A reduced word, found by stripping the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone().without_word();
        let mut out = Vec::new();
        while let Some(j) = (0..self.n).find(|&j| w.col_sign(j) < 0) {
            w = w.right_mul_simple(rs, j + 1);
            out.push(j + 1);
        }
        out.reverse();
        out
    }

    /// Same element with a freshly computed reduced word cached.
    pub fn with_reduced_word(&self, rs: &RootSystem) -> Self {
        let mut w = self.clone();
        w.word = Some(self.reduced_word(rs));
        w
    }

    /// `w(alpha) > 0` for every `alpha` in `J`.
    pub fn is_min_rep(&self, j: ParabolicSet) -> bool {
        j.iter().all(|a| self.col_sign(a - 1) > 0)
    }

    /// First `alpha` in `J` that `w` sends negative.
    pub fn first_violation(&self, j: ParabolicSet) -> Option<usize> {
        j.iter().find(|&a| self.col_sign(a - 1) < 0)
    }

    /// Belongs to the parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, rs: &RootSystem, j: ParabolicSet) -> bool {
        self.inversion_set(rs)
            .iter()
            .all(|b| crate::rootsys::in_support(&b.0, j))
    }

    pub fn view(&self, rs: &RootSystem) -> ElementView {
        let word = self.reduced_word(rs);
        ElementView {
            length: word.len(),
            word,
            matrix: self.matrix(),
        }
    }
}

/// Serializable snapshot of an element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementView {
    pub word: Vec<usize>,
    pub length: usize,
    pub matrix: Vec<Vec<i64>>,
}

pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    WeylElement::from_word(rs, word)
}

/// `w_{0,J}`, by greedy ascent inside `W_J`.
pub fn longest_element(rs: &RootSystem, j: ParabolicSet) -> WeylElement {
    let mut w = WeylElement::identity(rs.rank());
    let mut word = Vec::new();
    while let Some(a) = j.iter().find(|&a| w.col_sign(a - 1) > 0) {
        w = w.right_mul_simple(rs, a);
        word.push(a);
    }
    w.word = Some(word);
    w
}

/// `w = w^J w_J` with `w^J` in `W^J` and `w_J` in `W_J`; lengths add.
pub fn coset_decompose(
    rs: &RootSystem,
    w: &WeylElement,
    j: ParabolicSet,
) -> (WeylElement, WeylElement) {
    let mut cur = w.clone().without_word();
    let mut stripped = Vec::new();
    while let Some(a) = cur.first_violation(j) {
        cur = cur.right_mul_simple(rs, a);
        stripped.push(a);
    }
    stripped.reverse();
    let wj = WeylElement::from_word(rs, &stripped).expect("letters come from J");
    (cur.with_reduced_word(rs), wj)
}

/// `-w_0` as a permutation: entry `i-1` holds `sigma(i)`.
pub fn diagram_automorphism(rs: &RootSystem) -> Vec<usize> {
    let n = rs.rank();
    let w0 = longest_element(rs, ParabolicSet::full(n));
    (1..=n)
        .map(|i| {
            let img = -w0.image_of_simple(i);
            debug_assert!(img.is_simple());
            img.0.iter().position(|&k| k == 1).unwrap() + 1
        })
        .collect()
}

/// Minimal coset representatives `W^J`, streamed by length.
///
/// Each layer is sorted by matrix, so the order is fully deterministic. The
/// stream yields an `EnumerationTooLarge` error instead of element `cap + 1`.
pub struct MinReps<'a> {
    rs: &'a RootSystem,
    j: ParabolicSet,
    cap: usize,
    layer: Vec<WeylElement>,
    pos: usize,
    produced: usize,
    finished: bool,
}

pub fn min_reps(rs: &RootSystem, j: ParabolicSet, cap: usize) -> MinReps<'_> {
    MinReps {
        rs,
        j,
        cap,
        layer: vec![WeylElement::identity(rs.rank())],
        pos: 0,
        produced: 0,
        finished: false,
    }
}

/// Collect `W^J`, failing once the cap is exceeded.
pub fn collect_min_reps(rs: &RootSystem, j: ParabolicSet, cap: usize) -> Result<Vec<WeylElement>> {
    min_reps(rs, j, cap).collect()
}

impl MinReps<'_> {
    fn next_layer(&self) -> Vec<WeylElement> {
        let rs = self.rs;
        let n = rs.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut next = Vec::new();
        for w in &self.layer {
            for i in 1..=n {
                if w.inv_col_sign(i - 1) < 0 {
                    continue;
                }
                // s_i w leaves W^J exactly when w(alpha_a) = alpha_i for some a in J
                let blocked = self
                    .j
                    .iter()
                    .any(|a| (0..n).all(|r| w.m[r * n + a - 1] == (r + 1 == i) as i64));
                if blocked {
                    continue;
                }
                let v = w.left_mul_simple(rs, i);
                if seen.insert(v.m.clone()) {
                    next.push(v);
                }
            }
        }
        next.sort();
        next
    }
}

impl Iterator for MinReps<'_> {
    type Item = Result<WeylElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        if self.pos == self.layer.len() {
            self.layer = self.next_layer();
            self.pos = 0;
            if self.layer.is_empty() {
                self.finished = true;
                return None;
            }
        }
        if self.produced == self.cap {
            self.finished = true;
            return Some(Err(Error::EnumerationTooLarge {
                what: format!(
                    "minimal coset representatives W^J, J={} in {}",
                    self.j,
                    self.rs.ctype()
                ),
                produced: self.produced,
                cap: self.cap,
            }));
        }
        let w = self.layer[self.pos].clone();
        self.pos += 1;
        self.produced += 1;
        Some(Ok(w))
    }
}

/// `|W_J|`, by breadth-first search over left multiplication by `s_i`, `i` in `J`.
pub fn parabolic_order(rs: &RootSystem, j: ParabolicSet, cap: usize) -> Result<usize> {
    let mut layer = vec![WeylElement::identity(rs.rank())];
    let mut total = 0usize;
    while !layer.is_empty() {
        total += layer.len();
        if total > cap {
            return Err(Error::EnumerationTooLarge {
                what: format!("parabolic subgroup W_J, J={} in {}", j, rs.ctype()),
                produced: total - layer.len(),
                cap,
            });
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for w in &layer {
            for i in j.iter() {
                if w.inv_col_sign(i - 1) > 0 {
                    let v = w.left_mul_simple(rs, i);
                    if seen.insert(v.m.clone()) {
                        next.push(v);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(total)
}
