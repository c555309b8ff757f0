//! Straight and shifted shapes, standard Young tableaux, and the partial
//! fillings of the shifted staircase that parametrize left-unimodal
//! permutations.
//!
//! Descent sets of tableaux use the convention that `i` is a descent when
//! `i + 1` sits in a strictly lower row. This is the convention under which
//! `Des(π) = Des(Q)` holds for the RSK recording tableau `Q`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{is_left_unimodal, is_unimodal};
use crate::perm::{DescentSet, Permutation};

/// A partition drawn left-justified.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not a weakly decreasing list of positive parts"
            )));
        }
        Ok(Self { parts })
    }

    /// The hook `(k, 1^{n−k})`.
    pub fn hook(n: usize, k: usize) -> Self {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Self { parts }
    }

    /// A hook plus the box `(2,2)`: `(k, 2, 1^{n−k−2})`.
    pub fn hook_plus_box(n: usize, k: usize) -> Self {
        let mut parts = vec![k, 2];
        parts.extend(std::iter::repeat_n(1, n - k - 2));
        Self { parts }
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Self { parts: vec![cols; if cols == 0 { 0 } else { rows }] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn hook_length_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj[c] - r - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(self.size()) / hooks
    }

    fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A strict partition drawn with row `i` indented `i − 1` cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShiftedShape {
    parts: Vec<usize>,
}

impl ShiftedShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not a strictly decreasing list of positive parts"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The staircase `Δ_n = (n−1, n−2, …, 1)`.
    pub fn staircase(n: usize) -> Self {
        Self { parts: (1..n).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row `i` (1-indexed) of `Δ_n` spans columns `i+1 ..= n`; a shape fits when
    /// `λ_i ≤ n − i`.
    pub fn fits_in_staircase(&self, n: usize) -> bool {
        self.parts.iter().enumerate().all(|(r, &len)| len + r < n)
    }

    pub fn contains(&self, other: &ShiftedShape) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells as `(row, column)` in staircase coordinates: rows from 1, and
    /// row `i` starting at column `i + 1`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r + 1, r + 2 + c)))
    }

    /// Number of standard fillings by Schur's product formula
    /// `N! / ∏ λ_i! · ∏_{i<j} (λ_i − λ_j)/(λ_i + λ_j)`.
    pub fn schur_count(&self) -> BigUint {
        let mut num = factorial(self.size());
        let mut den = BigUint::one();
        for (i, &a) in self.parts.iter().enumerate() {
            den *= factorial(a);
            for &b in &self.parts[i + 1..] {
                num *= BigUint::from(a - b);
                den *= BigUint::from(a + b);
            }
        }
        num / den
    }

    /// Every strict partition fitting in `Δ_n`.
    pub fn all_in_staircase(n: usize) -> Vec<ShiftedShape> {
        let mut out = Vec::new();
        // a strict partition with parts ≤ n − 1 is a subset of {1, …, n−1}
        for mask in 0u64..1 << n.saturating_sub(1) {
            let parts: Vec<usize> = (1..n).rev().filter(|&p| mask >> (p - 1) & 1 == 1).collect();
            out.push(ShiftedShape { parts });
        }
        out.sort();
        out
    }
}

impl fmt::Display for ShiftedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "shifted({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `C(n,2)! · ∏_{i=0}^{n−2} i!/(2i+1)!`, the number of standard fillings of `Δ_n`.
pub fn count_shifted_staircase(n: usize) -> BigUint {
    let m = n * n.saturating_sub(1) / 2;
    let mut num = factorial(m);
    let mut den = BigUint::one();
    for i in 0..n.saturating_sub(1) {
        num *= factorial(i);
        den *= factorial(2 * i + 1);
    }
    num / den
}

/// A filling of a straight or shifted shape. Rows hold entries left to right;
/// for shifted tableaux row `r` (0-indexed) starts in column `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
    shifted: bool,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>, shifted: bool) -> Result<Self> {
        let t = Self { rows, shifted };
        let lens = t.shape();
        let valid_shape = if shifted {
            ShiftedShape::new(lens).is_ok()
        } else {
            Shape::new(lens).is_ok()
        };
        if !valid_shape || !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{:?}", t.rows)));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>, shifted: bool) -> Self {
        Self { rows, shifted }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn offset(&self, row: usize) -> usize {
        if self.shifted {
            row
        } else {
            0
        }
    }

    /// Entry at absolute `(row, column)`, both 0-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let off = self.offset(row);
        self.rows.get(row)?.get(col.checked_sub(off)?).copied()
    }

    /// Rows and columns increase strictly and `1..=size` each appear once.
    pub fn is_standard(&self) -> bool {
        let size = self.size();
        let mut seen = vec![false; size + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return false;
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > size || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
                if c > 0 && row[c - 1] >= v {
                    return false;
                }
                if r > 0 {
                    let abs = c + self.offset(r);
                    match self.entry(r - 1, abs) {
                        Some(above) if above < v => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// Row (0-indexed) of each entry, indexed by entry.
    fn row_of(&self) -> Vec<usize> {
        let mut rows = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                rows[v] = r;
            }
        }
        rows
    }

    /// `{i : i + 1 lies in a strictly lower row than i}`.
    pub fn descent_set(&self) -> DescentSet {
        let size = self.size();
        let rows = self.row_of();
        let positions = (1..size).filter(|&i| rows[i + 1] > rows[i]);
        DescentSet::from_positions(size, positions).expect("positions in range")
    }

    pub fn first_row(&self) -> &[usize] {
        &self.rows[0]
    }

    /// Entries of the first column, top to bottom.
    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn transpose(&self) -> Self {
        debug_assert!(!self.shifted);
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect();
        Self { rows, shifted: false }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    /// Parses a straight tableau written as in `Display`, e.g. `1 2 4 / 3`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidTableau(format!("bad entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows, false)
    }
}

/// All standard fillings of a straight shape.
pub fn generate_syt(shape: &Shape) -> Vec<StandardTableau> {
    generate_fillings(shape.parts(), false)
}

/// All standard fillings of a shifted shape.
pub fn generate_shifted_syt(shape: &ShiftedShape) -> Vec<StandardTableau> {
    generate_fillings(shape.parts(), true)
}

fn generate_fillings(parts: &[usize], shifted: bool) -> Vec<StandardTableau> {
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    let total: usize = parts.iter().sum();
    fill(parts, shifted, &mut rows, 1, total, &mut out);
    out
}

/// Can the next entry go at the end of row `r`?
fn addable(parts: &[usize], shifted: bool, rows: &[Vec<usize>], r: usize) -> bool {
    let len = rows[r].len();
    if len >= parts[r] {
        return false;
    }
    if r == 0 {
        return true;
    }
    // the cell above must already be filled
    let above = rows[r - 1].len();
    if shifted {
        above > len + 1
    } else {
        above > len
    }
}

fn fill(
    parts: &[usize],
    shifted: bool,
    rows: &mut Vec<Vec<usize>>,
    next: usize,
    total: usize,
    out: &mut Vec<StandardTableau>,
) {
    if next > total {
        out.push(StandardTableau { rows: rows.clone(), shifted });
        return;
    }
    for r in 0..parts.len() {
        if addable(parts, shifted, rows, r) {
            rows[r].push(next);
            fill(parts, shifted, rows, next + 1, total, out);
            rows[r].pop();
        }
    }
}

/// Counts standard fillings by dynamic programming over partially filled
/// shapes, without materializing the tableaux.
pub fn count_fillings(parts: &[usize], shifted: bool) -> BigUint {
    fn go(
        parts: &[usize],
        shifted: bool,
        filled: &mut Vec<usize>,
        memo: &mut HashMap<Vec<usize>, BigUint>,
    ) -> BigUint {
        if filled.iter().zip(parts).all(|(a, b)| a == b) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(filled.as_slice()) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for r in 0..parts.len() {
            let len = filled[r];
            let ok = len < parts[r]
                && (r == 0
                    || if shifted {
                        filled[r - 1] > len + 1
                    } else {
                        filled[r - 1] > len
                    });
            if ok {
                filled[r] += 1;
                total += go(parts, shifted, filled, memo);
                filled[r] -= 1;
            }
        }
        memo.insert(filled.clone(), total.clone());
        total
    }
    go(parts, shifted, &mut vec![0; parts.len()], &mut HashMap::new())
}

/// `T_n`: standard tableaux of shape `(k, 2, 1^{n−k−2})` for `2 ≤ k ≤ n−2`.
pub fn generate_t_n(n: usize) -> Vec<StandardTableau> {
    if n < 4 {
        return Vec::new();
    }
    (2..=n - 2)
        .flat_map(|k| generate_syt(&Shape::hook_plus_box(n, k)))
        .collect()
}

/// `Hook_n`: standard tableaux of shape `(k, 1^{n−k})` for `1 ≤ k ≤ n`.
pub fn generate_hook_n(n: usize) -> Vec<StandardTableau> {
    (1..=n).flat_map(|k| generate_syt(&Shape::hook(n, k))).collect()
}

/// Is `t` a straight tableau of shape `(k, 2, 1^{n−k−2})` with `2 ≤ k ≤ n−2`?
pub fn is_in_t_n(t: &StandardTableau) -> bool {
    let shape = t.shape();
    !t.is_shifted()
        && t.is_standard()
        && shape.len() >= 2
        && shape[0] >= 2
        && shape[1] == 2
        && shape[2..].iter().all(|&p| p == 1)
}

/// Product of the transpositions attached to `cells` in order, starting from
/// the identity. Each `(i, j)` exchanges the values `i` and `j`, i.e. the
/// product `t_1 t_2 ⋯ t_k` is accumulated as `t_k ∘ ⋯ ∘ t_1`.
pub fn replay_transpositions(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Permutation {
    cells
        .into_iter()
        .fold(Permutation::identity(n), |acc, (i, j)| acc.swap_values(i, j))
}

/// Cells of a standard filling of a sub-shape of `Δ_n`, in the order of their
/// entries, as staircase coordinates.
pub fn filling_order(t: &StandardTableau) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, (usize, usize))> = Vec::with_capacity(t.size());
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((v, (r + 1, r + 2 + c)));
        }
    }
    cells.sort();
    cells.into_iter().map(|(_, cell)| cell).collect()
}

/// Reads the left-unimodal permutation off the boundary path of a shape in
/// `Δ_n`: starting below the last nonempty row and walking north/east to the
/// top-right corner, east steps emit column labels and north steps emit row
/// labels.
pub fn reading_word(shape: &ShiftedShape, n: usize) -> Result<Permutation> {
    if !shape.fits_in_staircase(n) {
        return Err(Error::InvalidShape(format!("{shape} does not fit in Δ_{n}")));
    }
    let rows = shape.parts().len();
    let mut out = Vec::with_capacity(n);
    let mut reached = rows;
    for row in (1..=rows).rev() {
        let end = row + shape.parts()[row - 1];
        out.extend(reached + 1..=end);
        out.push(row);
        reached = end;
    }
    out.extend(reached + 1..=n);
    Permutation::new(out)
}

/// The shifted shape of the filled boxes of any partial filling of `Δ_n`
/// whose product is `p`. Unimodal permutations outside `L_n` are sent to the
/// shape of `w0 p w0`.
pub fn shape_of_unimodal(p: &Permutation) -> Result<ShiftedShape> {
    if !is_unimodal(p) {
        return Err(Error::NotUnimodal { perm: p.to_string() });
    }
    let q = if is_left_unimodal(p) {
        p.clone()
    } else {
        p.conjugate_by_longest()
    };
    Ok(shape_of_left_unimodal(&q))
}

/// Inverse of [`reading_word`]: the row labels are the values below `p(1)`,
/// read in decreasing order; the row-`i` boundary sits at the number of column
/// labels already emitted.
fn shape_of_left_unimodal(p: &Permutation) -> ShiftedShape {
    let rows = p.at(1) - 1;
    let mut parts = vec![0; rows];
    let mut columns_seen = 0;
    for v in p.values() {
        if v > rows {
            columns_seen += 1;
        } else {
            parts[v - 1] = rows + columns_seen - v;
        }
    }
    ShiftedShape { parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, Family};
    use crate::perm::symmetric_group;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// All partitions of `n` with parts at most `max`, weakly decreasing.
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn syt_examples() {
        assert_eq!(generate_syt(&Shape::new(vec![2, 1]).unwrap()).len(), 2);
        assert_eq!(generate_syt(&Shape::new(vec![3, 2]).unwrap()).len(), 5);
        assert_eq!(generate_shifted_syt(&ShiftedShape::new(vec![3, 2]).unwrap()).len(), 2);
        let shifted = generate_shifted_syt(&ShiftedShape::new(vec![3, 2]).unwrap());
        assert!(shifted.iter().all(StandardTableau::is_standard));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 0..=9 {
            for parts in partitions(n, n) {
                let shape = Shape::new(parts.clone()).unwrap();
                let tabs = generate_syt(&shape);
                assert_eq!(BigUint::from(tabs.len()), shape.hook_length_count(), "{shape}");
                assert!(tabs.iter().all(StandardTableau::is_standard));
                assert_eq!(count_fillings(&parts, false), shape.hook_length_count());
            }
        }
    }

    #[test]
    fn hook_plus_box_formula() {
        // (k−1)(n−k−1)/(n−1) · C(n,k)
        for n in 4..=12 {
            for k in 2..=n - 2 {
                let expected = BigUint::from((k - 1) * (n - k - 1)) * binomial(n, k)
                    / BigUint::from(n - 1);
                assert_eq!(Shape::hook_plus_box(n, k).hook_length_count(), expected);
            }
        }
        assert_eq!(Shape::new(vec![5]).unwrap().hook_length_count(), BigUint::one());
        assert_eq!(Shape::hook_plus_box(5, 3).hook_length_count(), BigUint::from(5u32));
    }

    #[test]
    fn shifted_staircase_counts() {
        assert_eq!(count_shifted_staircase(3), BigUint::from(1u32));
        assert_eq!(count_shifted_staircase(4), BigUint::from(2u32));
        assert_eq!(count_shifted_staircase(5), BigUint::from(12u32));
        for n in 2..=5 {
            let stair = ShiftedShape::staircase(n);
            assert_eq!(
                BigUint::from(generate_shifted_syt(&stair).len()),
                count_shifted_staircase(n)
            );
        }
        for n in 2..=8 {
            let stair = ShiftedShape::staircase(n);
            assert_eq!(stair.schur_count(), count_shifted_staircase(n));
            assert_eq!(count_fillings(stair.parts(), true), count_shifted_staircase(n));
        }
    }

    #[test]
    fn schur_formula_matches_enumeration() {
        for n in 2..=6 {
            for shape in ShiftedShape::all_in_staircase(n) {
                assert_eq!(
                    BigUint::from(generate_shifted_syt(&shape).len()),
                    shape.schur_count(),
                    "{shape}"
                );
            }
        }
    }

    #[test]
    fn tableau_descent_convention() {
        let row = StandardTableau::from_rows(vec![vec![1, 2, 3, 4]], false).unwrap();
        assert!(row.descent_set().is_empty());
        let col = StandardTableau::from_rows(vec![vec![1], vec![2], vec![3], vec![4]], false).unwrap();
        assert_eq!(col.descent_set(), DescentSet::full(4));
        for q in symmetric_group(6) {
            assert_eq!(q.rsk().1.descent_set(), q.descent_set());
        }
    }

    #[test]
    fn from_rows_rejects_bad_tableaux() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]], false).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2, 4], vec![5]], false).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![3, 4, 5]], false).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2, 3], vec![4, 5]], true).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![3, 4]], true).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2]], true).is_err());
    }

    #[test]
    fn worked_partial_filling() {
        // rows of the displayed filling, staircase rows 1..3
        let t = StandardTableau::from_rows(
            vec![vec![1, 2, 3, 6, 8], vec![4, 5, 9, 10], vec![7]],
            true,
        )
        .unwrap();
        let cells = filling_order(&t);
        assert_eq!(
            cells,
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (1, 5), (3, 4), (1, 6), (2, 5), (2, 6)]
        );
        let target = p("4356217");
        assert_eq!(replay_transpositions(7, cells), target);
        let shape = shape_of_unimodal(&target).unwrap();
        assert_eq!(shape.parts(), &[5, 4, 1]);
        assert_eq!(reading_word(&shape, 7).unwrap(), target);
        // a second filling of the same boxes gives the same permutation
        let t2 = StandardTableau::from_rows(
            vec![vec![1, 2, 3, 4, 5], vec![6, 7, 8, 9], vec![10]],
            true,
        )
        .unwrap();
        assert_eq!(replay_transpositions(7, filling_order(&t2)), target);
    }

    #[test]
    fn shape_is_bijection_and_replays() {
        assert_eq!(shape_of_unimodal(&Permutation::identity(5)).unwrap(), ShiftedShape::empty());
        assert!(shape_of_unimodal(&p("2143")).is_err());
        for n in 1..=7 {
            let l = generate_family(n, Family::L);
            let mut shapes: Vec<ShiftedShape> =
                l.iter().map(|q| shape_of_unimodal(q).unwrap()).collect();
            for (q, s) in l.iter().zip(&shapes) {
                assert!(s.fits_in_staircase(n));
                assert_eq!(&reading_word(s, n).unwrap(), q);
                assert_eq!(s.size(), q.length());
                if n <= 6 {
                    for t in generate_shifted_syt(s) {
                        assert_eq!(&replay_transpositions(n, filling_order(&t)), q, "{t}");
                    }
                }
            }
            shapes.sort();
            assert_eq!(shapes, ShiftedShape::all_in_staircase(n));
        }
    }

    #[test]
    fn t_n_and_hook_n_sizes() {
        assert_eq!(generate_t_n(5).len(), 10);
        assert_eq!(generate_t_n(4).len(), 2);
        assert!(generate_t_n(3).is_empty());
        for n in 4..=10 {
            assert_eq!(generate_t_n(n).len() as u64, Family::Z.expected_size(n));
            assert!(generate_t_n(n).iter().all(is_in_t_n));
        }
        for n in 1..=8 {
            assert_eq!(generate_hook_n(n).len(), 1 << (n - 1));
        }
    }
}
