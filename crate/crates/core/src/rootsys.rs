//! Finite crystallographic root systems built exactly from Cartan data.
//!
//! Roots live in the simple-root basis, weights in the fundamental-weight
//! basis. All public indices are 1-based, matching the usual Dynkin labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Integer coordinate vector. Rank never exceeds 8 in practice, so this stays
/// on the stack.
pub type Coords = SmallVec<[i64; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            _ => None,
        }
    }
}

/// Admitted types: A_n (n >= 1), D_n (n >= 4), E6, E7, E8 and B2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

/// Ranks above this would overflow the bitset used for parabolic subsets.
pub const MAX_RANK: usize = 31;

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::B => rank == 2,
            Family::C => false,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("A_n needs n >= 1")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("D_n needs n >= 4")
    }

    pub fn e(n: usize) -> Self {
        Self::new(Family::E, n).expect("E_n needs n in 6..=8")
    }

    pub fn b2() -> Self {
        CartanType {
            family: Family::B,
            rank: 2,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Cartan matrix, row-major, with `C[i][j] = <alpha_j, alpha_i^vee>`.
    fn cartan_matrix(&self) -> Vec<i64> {
        let n = self.rank;
        let mut c = vec![0i64; n * n];
        for i in 0..n {
            c[i * n + i] = 2;
        }
        let mut edge = |i: usize, j: usize| {
            c[(i - 1) * n + (j - 1)] = -1;
            c[(j - 1) * n + (i - 1)] = -1;
        };
        match self.family {
            Family::A => {
                for i in 1..n {
                    edge(i, i + 1);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    edge(i, i + 1);
                }
                edge(n - 2, n);
            }
            Family::E => {
                edge(1, 3);
                edge(3, 4);
                edge(4, 5);
                edge(5, 6);
                edge(2, 4);
                for i in 6..n {
                    edge(i, i + 1);
                }
            }
            Family::B => {
                // alpha_1 long: <alpha_1, alpha_2^vee> = -2, <alpha_2, alpha_1^vee> = -1
                c[1] = -1;
                c[2] = -2;
            }
            Family::C => unreachable!("C is never admitted"),
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadTypeName(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeName(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A vector in the simple-root basis. Usually a root, but also used for
/// sums and differences of roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Coords);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(SmallVec::from_elem(0, rank))
    }

    /// `alpha_i`, 1-based.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut r = Self::zero(rank);
        r.0[i - 1] = 1;
        r
    }

    pub fn from_slice(c: &[i64]) -> Self {
        Root(SmallVec::from_slice(c))
    }

    /// Sum of simple roots with the given 1-based indices (repeats allowed).
    pub fn sum_of(rank: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Self::zero(rank);
        for i in idx {
            r.0[i - 1] += 1;
        }
        r
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&k| k > 0) && self.0.iter().all(|&k| k >= 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().any(|&k| k < 0) && self.0.iter().all(|&k| k <= 0)
    }

    /// Coefficient of `alpha_i`, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.is_positive() && self.height() == 1
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, o: &Root) -> Root {
        Root(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, o: &Root) -> Root {
        Root(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl Mul<&Root> for i64 {
    type Output = Root;
    fn mul(self, r: &Root) -> Root {
        Root(r.0.iter().map(|a| self * a).collect())
    }
}

fn write_combination(f: &mut fmt::Formatter<'_>, c: &[i64], sym: &str) -> fmt::Result {
    let mut first = true;
    for (i, &k) in c.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "{}", if k > 0 { "+" } else { "-" })?;
        } else if k < 0 {
            write!(f, "-")?;
        }
        if k.abs() != 1 {
            write!(f, "{}", k.abs())?;
        }
        write!(f, "{}{}", sym, i + 1)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-(")?;
            write_combination(f, &(-self).0, "a")?;
            write!(f, ")")
        } else {
            write_combination(f, &self.0, "a")
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// A weight in the fundamental-weight basis: entry `i` is `<lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Coords);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// `omega_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn from_slice(c: &[i64]) -> Self {
        Weight(SmallVec::from_slice(c))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, "w")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// A subset of simple indices, stored as a bitmask (bit `i-1` for index `i`).
///
/// Ordered by cardinality, then lexicographically on the sorted index list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ParabolicSet(u32);

impl ParabolicSet {
    pub fn empty() -> Self {
        ParabolicSet(0)
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSet(((1u64 << rank) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        ParabolicSet(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    /// Indices are 1-based; zero or out-of-range entries panic in debug builds.
    pub fn of(idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty();
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn single(i: usize) -> Self {
        Self::of([i])
    }

    /// Validating constructor.
    pub fn checked(rank: usize, idx: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty();
        for i in idx {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!((1..=MAX_RANK).contains(&i));
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn complement(&self, rank: usize) -> Self {
        ParabolicSet(!self.0 & Self::full(rank).0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (1..=32).filter(move |&i| bits & (1u64 << (i - 1)) as u32 != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `{1..rank}`, in the canonical order.
    pub fn all_subsets(rank: usize) -> Vec<ParabolicSet> {
        let mut v: Vec<ParabolicSet> = (0..(1u64 << rank))
            .map(|b| ParabolicSet(b as u32))
            .collect();
        v.sort();
        v
    }
}

impl Ord for ParabolicSet {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&o.len())
            .then_with(|| self.to_vec().cmp(&o.to_vec()))
    }
}

impl PartialOrd for ParabolicSet {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ParabolicSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// An immutable root system with its full positive-root table.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<i64>,
    sym: Vec<i64>,
    positives: Vec<Root>,
    index: HashMap<Coords, usize>,
    highest: Root,
}

impl RootSystem {
    pub fn build(ctype: CartanType) -> Self {
        let n = ctype.rank();
        let cartan = ctype.cartan_matrix();
        let sym = symmetrizer(n, &cartan);
        let positives = close_positive_roots(n, &cartan);
        let index: HashMap<Coords, usize> = positives
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        let highest = positives.last().cloned().expect("nonempty root system");
        let rs = RootSystem {
            ctype,
            cartan,
            sym,
            positives,
            index,
            highest,
        };
        debug_assert!((1..=n).all(|i| !rs.is_root(&(&rs.highest + &Root::simple(n, i)).0)));
        rs
    }

    /// Parse a type name such as `"E6"` and build it.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::build(name.parse()?))
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    /// Cartan entry `<alpha_j, alpha_i^vee>` with 0-based indices.
    #[inline]
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank() + j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| self.cartan[i * n..(i + 1) * n].to_vec())
            .collect()
    }

    /// Half the squared length of `alpha_i` (0-based), normalized so short roots give 1.
    #[inline]
    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.sym[i]
    }

    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    /// All roots: positives in table order followed by their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positives
            .iter()
            .cloned()
            .chain(self.positives.iter().map(|r| -r))
    }

    pub fn highest(&self) -> &Root {
        &self.highest
    }

    pub fn rho(&self) -> Weight {
        Weight(SmallVec::from_elem(1, self.rank()))
    }

    pub fn simple(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Position in `0..2N`: positives first, then negatives in the same order.
    pub fn root_position(&self, c: &[i64]) -> Option<usize> {
        if c.len() != self.rank() {
            return None;
        }
        if c.iter().any(|&k| k > 0) {
            self.index.get(c).copied()
        } else {
            let neg: Coords = c.iter().map(|k| -k).collect();
            self.index.get(&neg).map(|&k| k + self.positives.len())
        }
    }

    pub fn root_at(&self, pos: usize) -> Root {
        let n = self.positives.len();
        if pos < n {
            self.positives[pos].clone()
        } else {
            -&self.positives[pos - n]
        }
    }

    pub fn is_root(&self, c: &[i64]) -> bool {
        self.root_position(c).is_some()
    }

    pub fn check_root(&self, beta: &Root) -> Result<()> {
        if self.is_root(&beta.0) {
            Ok(())
        } else {
            Err(Error::NotARoot(beta.0.to_vec()))
        }
    }

    pub fn height(&self, beta: &Root) -> Result<i64> {
        self.check_root(beta)?;
        Ok(beta.height())
    }

    pub fn support(&self, beta: &Root) -> Result<BTreeSet<usize>> {
        self.check_root(beta)?;
        Ok(beta.support())
    }

    /// `<beta, alpha_i^vee>` for a vector in the simple-root basis, 1-based `i`.
    pub fn pair(&self, beta: &Root, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.pair0(&beta.0, i - 1))
    }

    /// `<lambda, alpha_i^vee>` for a weight: a coordinate read.
    pub fn pair_weight(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(lambda.0[i - 1])
    }

    /// Unchecked pairing with a 0-based index.
    #[inline]
    pub fn pair0(&self, c: &[i64], i: usize) -> i64 {
        let n = self.rank();
        let row = &self.cartan[i * n..(i + 1) * n];
        row.iter().zip(c).map(|(a, b)| a * b).sum()
    }

    pub fn in_subsystem(&self, beta: &Root, j: ParabolicSet) -> Result<bool> {
        self.check_root(beta)?;
        Ok(in_support(&beta.0, j))
    }

    /// Symmetric form `(a, b)` with `(alpha_i, alpha_i) = 2 e_i`.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * b[j] * self.sym[i] * self.c(i, j);
            }
        }
        s
    }

    pub fn to_weight(&self, beta: &Root) -> Weight {
        Weight((0..self.rank()).map(|i| self.pair0(&beta.0, i)).collect())
    }

    /// Inverse of [`to_weight`](Self::to_weight); `None` when the weight is
    /// not in the root lattice.
    pub fn weight_to_root(&self, lambda: &Weight) -> Option<Root> {
        solve_integer(self.rank(), &self.cartan, &lambda.0).map(Root)
    }

    /// Coxeter exponent `m_ij` for 1-based indices.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.c(i - 1, j - 1) * self.c(j - 1, i - 1) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => panic!("non-crystallographic Cartan product {}", p),
        }
    }
}

#[inline]
pub(crate) fn in_support(c: &[i64], j: ParabolicSet) -> bool {
    c.iter()
        .enumerate()
        .all(|(i, &k)| k == 0 || j.contains(i + 1))
}

/// Positive roots by height induction along root strings, sorted by
/// (height, coordinates).
fn close_positive_roots(n: usize, cartan: &[i64]) -> Vec<Root> {
    use std::collections::HashSet;
    let mut seen: HashSet<Coords> = HashSet::new();
    let mut all: Vec<Root> = Vec::new();
    let mut layer: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    for r in &layer {
        seen.insert(r.0.clone());
    }
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next: Vec<Root> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.0.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pr: i64 = (0..n).map(|j| cartan[i * n + j] * beta.0[j]).sum();
                if p - pr > 0 {
                    let mut up = beta.0.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(Root(up));
                    }
                }
            }
        }
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
    all
}

/// Smallest positive integers `e` with `e_i C[i][j] = e_j C[j][i]`.
fn symmetrizer(n: usize, cartan: &[i64]) -> Vec<i64> {
    // rational e_j = num/den, propagated along the (connected) diagram
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    num[0] = 1;
    den[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            let (cij, cji) = (cartan[i * n + j], cartan[j * n + i]);
            if j != i && cij != 0 && den[j] == 0 {
                num[j] = num[i] * cij;
                den[j] = den[i] * cji;
                let g = gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
    }
    let l = den.iter().fold(1, |acc, &d| lcm(acc, d));
    let mut e: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).collect();
    let g = e.iter().fold(0, |acc, &x| gcd(acc, x));
    for x in &mut e {
        *x /= g;
    }
    e
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Solve `C x = y` over the integers by fraction-free elimination; `None`
/// when the solution is not integral.
fn solve_integer(n: usize, c: &[i64], y: &[i64]) -> Option<Coords> {
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut row: Vec<i128> = (0..n).map(|j| c[i * n + j] as i128).collect();
            row.push(y[i] as i128);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, piv);
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let (a, b) = (m[col][col], m[r][col]);
                for k in 0..=n {
                    m[r][k] = m[r][k] * a - m[col][k] * b;
                }
                let g = m[r].iter().fold(0i128, |acc, &x| gcd128(acc, x));
                if g > 1 {
                    for k in 0..=n {
                        m[r][k] /= g;
                    }
                }
            }
        }
    }
    let mut out = Coords::new();
    for i in 0..n {
        if m[i][n] % m[i][i] != 0 {
            return None;
        }
        out.push((m[i][n] / m[i][i]) as i64);
    }
    Some(out)
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
