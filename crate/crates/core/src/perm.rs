//! Permutations in one-line notation, descent sets, and the statistics built on
//! them.
//!
//! Positions and values are 1-indexed throughout the crate. Multiplication is
//! function composition, `(p ∘ q)(i) = p(q(i))`, so right multiplication by an
//! adjacent transposition swaps two neighbouring positions and left
//! multiplication relabels values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::StandardTableau;

/// Largest degree supported. Descent sets are stored as `u64` bitmasks.
pub const MAX_DEGREE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking that `values` is a
    /// bijection on `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Self {
            values: values.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Internal constructor for values already known to form a permutation.
    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(Self::new(values.iter().map(|&v| v as usize).collect()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw((1..=n as u8).collect())
    }

    /// The longest element `n … 2 1`.
    pub fn longest(n: usize) -> Self {
        Self::from_raw((1..=n as u8).rev().collect())
    }

    /// The `n`-cycle `(1, 2, …, n)` sending `i` to `i + 1` and `n` to `1`.
    pub fn long_cycle(n: usize) -> Self {
        Self::from_raw((1..=n as u8).map(|v| v % n as u8 + 1).collect())
    }

    /// The transposition `(i, j)` of degree `n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut values: Vec<u8> = (1..=n as u8).collect();
        values.swap(i - 1, j - 1);
        Self::from_raw(values)
    }

    /// The adjacent transposition `σ_i = (i, i+1)`.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// `p(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn values(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.values.iter().map(|&v| v as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values().collect()
    }

    /// Position of value `v`, i.e. `p⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x as usize == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self::from_raw(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Self::from_raw(
            other.values.iter().map(|&j| self.values[j as usize - 1]).collect(),
        ))
    }

    /// `γ^k ∘ self` where `γ` is the long cycle; adds `k` to every value mod `n`.
    pub fn left_cycle_shift(&self, k: i64) -> Self {
        let n = self.degree() as i64;
        Self::from_raw(
            self.values
                .iter()
                .map(|&v| ((v as i64 - 1 + k).rem_euclid(n) + 1) as u8)
                .collect(),
        )
    }

    /// Right multiplication by `σ_i`: swaps the letters at positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, i);
        Self { values }
    }

    /// Left multiplication by the transposition `(a, b)`: exchanges the values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let values = self
            .values
            .iter()
            .map(|&v| match v as usize {
                x if x == a => b as u8,
                x if x == b => a as u8,
                _ => v,
            })
            .collect();
        Self { values }
    }

    /// The reversal `p(n) … p(1)`.
    pub fn reverse(&self) -> Self {
        Self::from_raw(self.values.iter().rev().copied().collect())
    }

    /// The complement `n + 1 − p(i)`.
    pub fn complement(&self) -> Self {
        let n = self.degree() as u8;
        Self::from_raw(self.values.iter().map(|&v| n + 1 - v).collect())
    }

    /// `w0 ∘ self ∘ w0`, i.e. reverse-complement.
    pub fn conjugate_by_longest(&self) -> Self {
        self.reverse().complement()
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut bits = 0u64;
        for i in 1..self.degree() {
            if self.values[i - 1] > self.values[i] {
                bits |= 1 << i;
            }
        }
        DescentSet::from_bits(self.degree(), bits)
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.values[i - 1] > self.values[i]
    }

    pub fn inversions(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
            .sum()
    }

    /// Coxeter length with respect to adjacent transpositions.
    pub fn length(&self) -> usize {
        self.inversions()
    }

    pub fn major_index(&self) -> usize {
        self.descent_set().major_index()
    }

    pub fn statistics(&self) -> Statistics {
        let inv = self.inversions();
        Statistics {
            inv,
            maj: self.major_index(),
            length: inv,
        }
    }

    /// Row-insertion RSK; returns `(P, Q)`.
    pub fn rsk(&self) -> (StandardTableau, StandardTableau) {
        let mut p_rows: Vec<Vec<usize>> = Vec::new();
        let mut q_rows: Vec<Vec<usize>> = Vec::new();
        for (step, x) in self.values().enumerate() {
            let mut bumped = x;
            let mut row = 0;
            loop {
                if row == p_rows.len() {
                    p_rows.push(vec![bumped]);
                    q_rows.push(vec![step + 1]);
                    break;
                }
                let r = &mut p_rows[row];
                match r.iter().position(|&y| y > bumped) {
                    Some(idx) => {
                        bumped = std::mem::replace(&mut r[idx], bumped);
                        row += 1;
                    }
                    None => {
                        r.push(bumped);
                        q_rows[row].push(step + 1);
                        break;
                    }
                }
            }
        }
        (
            StandardTableau::from_rows_unchecked(p_rows, false),
            StandardTableau::from_rows_unchecked(q_rows, false),
        )
    }

    /// Does some subsequence of `self` have the same relative order as `pattern`?
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.degree();
        if k > self.degree() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        extend_occurrence(&self.values, &pattern.values, 0, &mut chosen)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|pat| !self.contains_pattern(pat))
    }
}

/// Backtracking search for an occurrence. `chosen` holds the values already
/// matched to `pattern[..chosen.len()]`; every new value must sit in the same
/// relative order against all of them.
fn extend_occurrence(text: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let t = chosen.len();
    if t == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - t;
    for pos in start..=text.len() - remaining {
        let v = text[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (p < pattern[t]) == (c < v));
        if consistent {
            chosen.push(v);
            if extend_occurrence(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts values separated by whitespace and/or commas, or a compact digit
    /// string such as `4352176` when no separator is present.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let has_separator = s.chars().any(|c| c.is_whitespace() || c == ',');
        let values: Vec<usize> = if has_separator {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad token `{tok}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub inv: usize,
    pub maj: usize,
    pub length: usize,
}

/// A subset of `{1, …, n−1}`, stored as a bitmask with bit `i` for position `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    bits: u64,
}

impl DescentSet {
    pub fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(bits & 1 == 0 && (n == 0 || bits >> n.max(1) == 0));
        Self { n, bits }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, bits: 0 }
    }

    /// `{1, …, n−1}`.
    pub fn full(n: usize) -> Self {
        Self::from_positions(n, 1..n).expect("positions in range")
    }

    pub fn from_positions(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for i in positions {
            if i == 0 || i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "descent position {i} outside 1..{n}"
                )));
            }
            bits |= 1 << i;
        }
        Ok(Self { n, bits })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.bits >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    pub fn major_index(&self) -> usize {
        self.iter().sum()
    }

    /// Comma-separated positions, e.g. `2,5`; the empty set is the empty string.
    pub fn to_key(&self) -> String {
        self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl Ord for DescentSet {
    /// Lexicographic on the sorted position lists, then by degree.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for DescentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_key())
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentSet{self}")
    }
}

/// All of `S_n` in lexicographic order.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation::from_raw(cur.clone()));
        if !next_permutation(&mut cur) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parses a list of patterns such as `["132", "312"]`.
pub fn patterns(list: &[&str]) -> Vec<Permutation> {
    list.iter()
        .map(|s| s.parse().expect("pattern literal"))
        .collect()
}
