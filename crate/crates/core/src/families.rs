//! Left-unimodal, unimodal and arc permutations, the non-unimodal arc
//! permutations `Z_n = A_n \ U_n`, and the two encodings of arc permutations:
//! the position code [`PsiCode`] and the descent word [`DescentWord`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{patterns, DescentSet, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Left-unimodal: every prefix is an interval in `Z`.
    L,
    /// Unimodal: every prefix, or every suffix, is an interval in `Z`.
    U,
    /// Arc: every prefix is an interval in `Z_n`.
    A,
    /// Arc but not unimodal.
    Z,
}

impl Family {
    pub fn contains(self, p: &Permutation) -> bool {
        match self {
            Family::L => is_left_unimodal(p),
            Family::U => is_unimodal(p),
            Family::A => is_arc(p),
            Family::Z => is_arc(p) && !is_unimodal(p),
        }
    }

    /// Closed-form family size.
    pub fn expected_size(self, n: usize) -> u64 {
        let n64 = n as u64;
        match (self, n) {
            (_, 0) => 0,
            (Family::L, _) => 1 << (n - 1),
            (Family::U | Family::A, 1) => 1,
            (Family::Z, 1) => 0,
            (Family::U, _) => (1 << n) - 2,
            (Family::A, _) => n64 << (n - 2),
            // 2^{n-2}(n-4) + 2, which is 0 at n = 2, 3
            (Family::Z, _) => ((n64 << (n - 2)) + 2).saturating_sub(1 << n),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "L" => Ok(Family::L),
            "U" => Ok(Family::U),
            "A" => Ok(Family::A),
            "Z" => Ok(Family::Z),
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}

/// The eight patterns of length four with `|τ(1) − τ(2)| = 2`.
pub fn arc_patterns() -> Vec<Permutation> {
    patterns(&["1324", "1342", "2413", "2431", "3124", "3142", "4213", "4231"])
}

/// The arc patterns together with `2143` and `3412`.
pub fn unimodal_patterns() -> Vec<Permutation> {
    patterns(&[
        "1324", "1342", "2143", "2413", "2431", "3124", "3142", "3412", "4213", "4231",
    ])
}

pub fn left_unimodal_patterns() -> Vec<Permutation> {
    patterns(&["132", "312"])
}

/// Length of the longest prefix that is an interval in `Z`.
fn interval_prefix_len(values: impl Iterator<Item = usize>) -> usize {
    let (mut lo, mut hi) = (usize::MAX, 0);
    let mut len = 0;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
        if hi - lo != len {
            return len;
        }
        len += 1;
    }
    len
}

pub fn is_left_unimodal(p: &Permutation) -> bool {
    interval_prefix_len(p.values()) == p.degree()
}

pub fn is_unimodal(p: &Permutation) -> bool {
    is_left_unimodal(p) || interval_prefix_len(p.values().rev()) == p.degree()
}

/// Smallest `k` such that `{p(1), …, p(k)}` is not an interval in `Z`, if any.
pub fn first_non_interval_prefix(p: &Permutation) -> Option<usize> {
    let len = interval_prefix_len(p.values());
    (len < p.degree()).then_some(len + 1)
}

pub fn is_arc(p: &Permutation) -> bool {
    let n = p.degree();
    let mut present = vec![false; n + 2];
    // number of runs of the prefix on the cycle 1 → 2 → … → n → 1
    let mut runs = 0i32;
    let succ = |v: usize| if v == n { 1 } else { v + 1 };
    let pred = |v: usize| if v == 1 { n } else { v - 1 };
    for (len, v) in p.values().enumerate() {
        let left = n > 1 && present[pred(v)];
        let right = n > 1 && present[succ(v)];
        runs += 1 - left as i32 - right as i32;
        present[v] = true;
        // a full cycle has zero runs in this count
        if runs > 1 || (runs == 0 && len + 1 < n) {
            return false;
        }
    }
    true
}

/// The members of a family in lexicographic order.
///
/// Arc permutations are built constructively: choose `p(1)`, then repeatedly
/// extend the current cyclic interval at its upper or lower end. The other
/// families are filtered out of `A_n` with their defining predicates, so the
/// pattern engine is never involved.
pub fn generate_family(n: usize, family: Family) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    let mut all = generate_arc(n);
    if family != Family::A {
        all.retain(|p| family.contains(p));
    }
    all
}

fn generate_arc(n: usize) -> Vec<Permutation> {
    let wrap_up = |v: usize| if v == n { 1 } else { v + 1 };
    let wrap_down = |v: usize| if v == 1 { n } else { v - 1 };
    let mut out = Vec::with_capacity(n << n.saturating_sub(2));
    for first in 1..=n {
        if n <= 2 {
            let mut values = vec![first];
            values.extend((1..=n).filter(|&v| v != first));
            out.push(Permutation::new(values).expect("valid"));
            continue;
        }
        for choice in 0u64..1 << (n - 2) {
            let (mut lo, mut hi) = (first, first);
            let mut values = Vec::with_capacity(n);
            values.push(first);
            for step in 0..n - 2 {
                if choice >> step & 1 == 1 {
                    hi = wrap_up(hi);
                    values.push(hi);
                } else {
                    lo = wrap_down(lo);
                    values.push(lo);
                }
            }
            values.push(wrap_up(hi));
            out.push(Permutation::new(values).expect("valid"));
        }
    }
    out.sort();
    out
}

/// `#{p ∈ A_n : Des(p) = B} = 1 + #{i ∈ [n−2] : |B ∩ {i, i+1}| = 1}`.
pub fn count_by_descent_set(b: &DescentSet) -> u64 {
    let n = b.degree();
    1 + (1..n.saturating_sub(1))
        .filter(|&i| b.contains(i) != b.contains(i + 1))
        .count() as u64
}

/// `ψ(π) = (ψ_0, ψ_1, …, ψ_{n−2})` with `ψ_0 = π(1) − 1` and `ψ_i = 1` when
/// `π(i+1)` extends the prefix interval upwards, `0` when downwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiCode {
    n: usize,
    psi0: usize,
    bits: Vec<u8>,
}

impl PsiCode {
    pub fn new(n: usize, psi0: usize, bits: Vec<u8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPsiCode("degree must be positive".into()));
        }
        if psi0 >= n {
            return Err(Error::InvalidPsiCode(format!("psi0 = {psi0} must be below {n}")));
        }
        if bits.len() != n.saturating_sub(2) {
            return Err(Error::InvalidPsiCode(format!(
                "expected {} bits, got {}",
                n.saturating_sub(2),
                bits.len()
            )));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidPsiCode("bits must be 0 or 1".into()));
        }
        Ok(Self { n, psi0, bits })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn psi0(&self) -> usize {
        self.psi0
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// `(ψ_0, ψ_1, …, ψ_{n−2})` as one vector.
    pub fn entries(&self) -> Vec<i64> {
        std::iter::once(self.psi0 as i64)
            .chain(self.bits.iter().map(|&b| b as i64))
            .collect()
    }

    pub fn encode(p: &Permutation) -> Result<Self> {
        if !is_arc(p) {
            return Err(Error::NotArc { perm: p.to_string() });
        }
        let n = p.degree();
        let mut present = vec![false; n + 1];
        present[p.at(1)] = true;
        let mut bits = Vec::with_capacity(n.saturating_sub(2));
        for i in 1..n.saturating_sub(1) {
            let v = p.at(i + 1);
            let below = if v == 1 { n } else { v - 1 };
            bits.push(present[below] as u8);
            present[v] = true;
        }
        Self::new(n, p.at(1) - 1, bits)
    }

    pub fn decode(&self) -> Permutation {
        let n = self.n;
        let first = self.psi0 + 1;
        let (mut lo, mut hi) = (first, first);
        let mut values = vec![first];
        for &b in &self.bits {
            if b == 1 {
                hi = if hi == n { 1 } else { hi + 1 };
                values.push(hi);
            } else {
                lo = if lo == 1 { n } else { lo - 1 };
                values.push(lo);
            }
        }
        if n >= 2 {
            let last = (1..=n).find(|v| !values.contains(v)).expect("one value left");
            values.push(last);
        }
        Permutation::new(values).expect("decoded arc permutation")
    }

    /// Every code of degree `n`, ordered by `(ψ_0, bits)`.
    pub fn all(n: usize) -> Vec<PsiCode> {
        let m = n.saturating_sub(2);
        let mut out = Vec::new();
        for psi0 in 0..n {
            for mask in 0u64..1 << m {
                let bits = (0..m).map(|i| (mask >> (m - 1 - i) & 1) as u8).collect();
                out.push(PsiCode { n, psi0, bits });
            }
        }
        out
    }
}

impl fmt::Display for PsiCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.psi0)?;
        for b in &self.bits {
            write!(f, ",{b}")?;
        }
        Ok(())
    }
}

impl FromStr for PsiCode {
    type Err = Error;

    /// Parses `ψ_0,ψ_1,…,ψ_{n−2}`; the degree is the number of entries plus one,
    /// so the single code of degree 1 has no text form of its own.
    fn from_str(s: &str) -> Result<Self> {
        let entries: Vec<usize> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPsiCode(format!("bad entry `{t}`")))
            })
            .collect::<Result<_>>()?;
        if entries.is_empty() {
            return Err(Error::InvalidPsiCode("empty code".into()));
        }
        if entries.len() >= crate::perm::MAX_DEGREE {
            return Err(Error::InvalidPsiCode("code too long".into()));
        }
        let n = entries.len() + 1;
        let bits = entries[1..]
            .iter()
            .map(|&b| u8::try_from(b).map_err(|_| Error::InvalidPsiCode("bits must be 0 or 1".into())))
            .collect::<Result<_>>()?;
        PsiCode::new(n, entries[0], bits)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    A,
    D,
}

/// A word `w_1 … w_{n−1}` over `{A, D}` with at most one underlined adjacent
/// pair, which must be `AD` or `DA`. The underline is stored as the
/// 1-indexed position of the pair's left letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentWord {
    letters: Vec<Letter>,
    underline: Option<usize>,
}

impl DescentWord {
    pub fn new(letters: Vec<Letter>, underline: Option<usize>) -> Result<Self> {
        if letters.len() + 1 > crate::perm::MAX_DEGREE {
            return Err(Error::InvalidDescentWord("word too long".into()));
        }
        if let Some(k) = underline {
            if k == 0 || k + 1 > letters.len() {
                return Err(Error::InvalidDescentWord(format!(
                    "underline at {k} outside 1..={}",
                    letters.len().saturating_sub(1)
                )));
            }
            if letters[k - 1] == letters[k] {
                return Err(Error::InvalidDescentWord(
                    "underlined pair must be AD or DA".into(),
                ));
            }
        }
        Ok(Self { letters, underline })
    }

    /// Degree of the encoded permutations, `len + 1`.
    pub fn degree(&self) -> usize {
        self.letters.len() + 1
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn underline(&self) -> Option<usize> {
        self.underline
    }

    /// `w(i)` for `1 ≤ i ≤ n−1`.
    fn w(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    pub fn encode(p: &Permutation) -> Result<Self> {
        if !is_arc(p) {
            return Err(Error::NotArc { perm: p.to_string() });
        }
        let letters = (1..p.degree())
            .map(|i| if p.is_descent(i) { Letter::D } else { Letter::A })
            .collect();
        let underline = first_non_interval_prefix(p).map(|k| k - 1);
        Self::new(letters, underline)
    }

    /// Inverse of [`DescentWord::encode`].
    pub fn decode(&self) -> Permutation {
        let n = self.degree();
        let k = self.underline.map_or(n + 1, |u| u + 1);
        let is_da = self
            .underline
            .is_some_and(|u| self.w(u) == Letter::D);
        let delta = if is_da { n + 1 } else { k };
        let count = |from: usize, to: usize, letter: Letter| -> usize {
            (from..=to).filter(|&j| j >= 1 && self.w(j) == letter).count()
        };
        let mut values = Vec::with_capacity(n);
        for i in 1..k.min(n + 1) {
            let upper = i == 1 || self.w(i - 1) == Letter::A;
            let end = k.saturating_sub(2);
            let v = if upper {
                delta - 1 - if i <= end { count(i, end, Letter::A) } else { 0 }
            } else {
                delta + 1 - k + if i <= end { count(i, end, Letter::D) } else { 0 }
            };
            values.push(v);
        }
        if k <= n {
            let delta_mod = delta % n;
            for i in k..=n {
                let ascending = i == n || self.w(i) == Letter::A;
                let v = if ascending {
                    delta_mod + if i > k { count(k, i - 1, Letter::A) } else { 0 }
                } else {
                    delta_mod + n - k - if i > k { count(k, i - 1, Letter::D) } else { 0 }
                };
                values.push((v + n - 1) % n + 1);
            }
        }
        Permutation::new(values).expect("decoded arc permutation")
    }

    /// Every word of `W_n`.
    pub fn all(n: usize) -> Vec<DescentWord> {
        let m = n.saturating_sub(1);
        let mut out = Vec::new();
        for mask in 0u64..1 << m {
            let letters: Vec<Letter> = (0..m)
                .map(|i| if mask >> i & 1 == 1 { Letter::D } else { Letter::A })
                .collect();
            out.push(DescentWord { letters: letters.clone(), underline: None });
            for u in 1..m {
                if letters[u - 1] != letters[u] {
                    out.push(DescentWord { letters: letters.clone(), underline: Some(u) });
                }
            }
        }
        out
    }
}

impl fmt::Display for DescentWord {
    /// Letters with the underlined pair in brackets, e.g. `A[AD]D`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            let pos = idx + 1;
            if self.underline == Some(pos) {
                f.write_str("[")?;
            }
            f.write_str(match l {
                Letter::A => "A",
                Letter::D => "D",
            })?;
            if self.underline == Some(pos - 1) && pos > 1 {
                f.write_str("]")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DescentWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut underline = None;
        let mut open: Option<usize> = None;
        for c in s.trim().chars() {
            match c {
                'A' | 'a' => letters.push(Letter::A),
                'D' | 'd' => letters.push(Letter::D),
                '[' => {
                    if open.is_some() || underline.is_some() {
                        return Err(Error::InvalidDescentWord("more than one underline".into()));
                    }
                    open = Some(letters.len() + 1);
                }
                ']' => {
                    let start = open
                        .take()
                        .ok_or_else(|| Error::InvalidDescentWord("unbalanced `]`".into()))?;
                    if letters.len() + 1 != start + 2 {
                        return Err(Error::InvalidDescentWord(
                            "brackets must enclose exactly two letters".into(),
                        ));
                    }
                    underline = Some(start);
                }
                other => {
                    return Err(Error::InvalidDescentWord(format!("unexpected `{other}`")))
                }
            }
        }
        if open.is_some() {
            return Err(Error::InvalidDescentWord("unbalanced `[`".into()));
        }
        DescentWord::new(letters, underline)
    }
}
