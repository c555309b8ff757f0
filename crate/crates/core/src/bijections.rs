//! Two bijections from non-unimodal arc permutations `Z_n` to the tableaux
//! `T_n` of shape `(k, 2, 1^{n−k−2})`: `φ` preserves descent sets, the second
//! preserves shapes and records `C(π)`.
//!
//! Both split on whether `1` comes after `n` in `π`. The second case of each
//! map is the first case applied to the complement `n + 1 − π(i)`, followed
//! by transposing the tableau; the inverses use the same reduction.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{is_arc, is_unimodal};
use crate::perm::Permutation;
use crate::tableaux::{is_in_t_n, StandardTableau};

fn check_z(p: &Permutation) -> Result<()> {
    if p.degree() < 4 || !is_arc(p) || is_unimodal(p) {
        return Err(Error::NotInZ { perm: p.to_string() });
    }
    Ok(())
}

fn check_t(t: &StandardTableau) -> Result<()> {
    if !is_in_t_n(t) {
        return Err(Error::NotInT(t.to_string()));
    }
    Ok(())
}

/// The tableau with first row `row` (which contains 1), `corner` at `(2,2)`,
/// and every other entry down the first column.
fn hook_plus_box(n: usize, row: &BTreeSet<usize>, corner: usize) -> StandardTableau {
    let mut column: Vec<usize> =
        (1..=n).filter(|v| !row.contains(v) && *v != corner).collect();
    let mut rows = vec![row.iter().copied().collect::<Vec<_>>()];
    if !column.is_empty() {
        let first = column.remove(0);
        rows.push(vec![first, corner]);
    }
    rows.extend(column.into_iter().map(|v| vec![v]));
    StandardTableau::from_rows_unchecked(rows, false)
}

/// `(first row, (2,2) entry)` of a tableau in `T_n`.
fn row_and_corner(t: &StandardTableau) -> (BTreeSet<usize>, usize) {
    (t.first_row().iter().copied().collect(), t.rows()[1][1])
}

/// Does `1` come after `n`?
fn one_after_n(p: &Permutation) -> bool {
    p.position_of(1) > p.position_of(p.degree())
}

/// `I = {i : π(i) ≥ π(1)} ∪ {i > j+1 : π(i−1) < π(n)}` with `j = π⁻¹(1)`.
fn phi_row_set(p: &Permutation) -> (BTreeSet<usize>, usize) {
    let n = p.degree();
    let j = p.position_of(1);
    let mut set: BTreeSet<usize> = (1..=n).filter(|&i| p.at(i) >= p.at(1)).collect();
    set.extend((j + 2..=n).filter(|&i| p.at(i - 1) < p.at(n)));
    (set, j)
}

/// The descent-preserving bijection `Z_n → T_n`.
pub fn phi(p: &Permutation) -> Result<StandardTableau> {
    check_z(p)?;
    if one_after_n(p) {
        let (row, j) = phi_row_set(p);
        Ok(hook_plus_box(p.degree(), &row, j + 1))
    } else {
        let (column, j) = phi_row_set(&p.complement());
        Ok(hook_plus_box(p.degree(), &column, j + 1).transpose())
    }
}

/// The set `I` of [`phi`]: its first row when `1` comes after `n`, its first
/// column otherwise.
pub fn phi_set(p: &Permutation) -> Result<BTreeSet<usize>> {
    check_z(p)?;
    Ok(if one_after_n(p) {
        phi_row_set(p).0
    } else {
        phi_row_set(&p.complement()).0
    })
}

pub fn phi_inverse(t: &StandardTableau) -> Result<Permutation> {
    check_t(t)?;
    let (row, corner) = row_and_corner(t);
    let j = corner - 1;
    let p = if row.contains(&j) {
        let (column, _) = row_and_corner(&t.transpose());
        invert_phi_first_case(t.size(), &column, j)?.complement()
    } else {
        invert_phi_first_case(t.size(), &row, j)?
    };
    if phi(&p).as_ref() != Ok(t) {
        return Err(Error::NotInT(t.to_string()));
    }
    Ok(p)
}

/// Rebuilds `π` with `1` after `n` from `I` and `j = π⁻¹(1)`. Before `j`,
/// positions in `I` carry the values climbing from `π(1)` and the others the
/// values falling below it; after `j`, position `p` carries the next value of
/// the low run `2, 3, …` when `p + 1 ∈ I` and of the high run otherwise.
fn invert_phi_first_case(n: usize, row: &BTreeSet<usize>, j: usize) -> Result<Permutation> {
    let bad = || Error::NotInT(format!("no permutation for I = {row:?}, j = {j}"));
    if j < 2 || j >= n {
        return Err(bad());
    }
    let climbing = (1..j).filter(|i| row.contains(i)).count();
    let first = (n + 1).checked_sub(climbing).filter(|&v| v >= 2).ok_or_else(bad)?;
    let mut values = vec![first];
    let (mut up, mut down) = (first + 1, first - 1);
    for i in 2..j {
        if row.contains(&i) {
            values.push(up);
            up += 1;
        } else {
            values.push(down);
            down = down.wrapping_sub(1);
        }
    }
    values.push(1);
    let (mut low, mut high) = (2, down);
    for i in j + 1..n {
        if row.contains(&(i + 1)) {
            values.push(low);
            low += 1;
        } else {
            values.push(high);
            high = high.wrapping_sub(1);
        }
    }
    values.push(low);
    Permutation::new(values).map_err(|_| bad())
}

/// `C(π)`: values `i ∈ 3..=n` such that `π(i−1) − 1` (taken mod `n` in
/// `1..=n`) already occurs among `π(1), …, π(i−2)`.
pub fn c_set(p: &Permutation) -> Result<BTreeSet<usize>> {
    if !is_arc(p) {
        return Err(Error::NotArc { perm: p.to_string() });
    }
    let n = p.degree();
    let mut seen = vec![false; n + 1];
    let mut out = BTreeSet::new();
    for i in 3..=n {
        seen[p.at(i - 2)] = true;
        let v = p.at(i - 1);
        let below = if v == 1 { n } else { v - 1 };
        if seen[below] {
            out.insert(i);
        }
    }
    Ok(out)
}

/// `S = {1} ∪ {i+1 : π(1) ≥ π(i) > π(n)}`.
fn shape_column_set(p: &Permutation) -> (BTreeSet<usize>, usize) {
    let n = p.degree();
    let mut set = BTreeSet::from([1]);
    set.extend((1..=n).filter(|&i| p.at(1) >= p.at(i) && p.at(i) > p.at(n)).map(|i| i + 1));
    (set, p.position_of(1))
}

/// The shape-preserving bijection `Z_n → T_n`.
pub fn psi_shape_map(p: &Permutation) -> Result<StandardTableau> {
    check_z(p)?;
    if one_after_n(p) {
        let (column, j) = shape_column_set(p);
        Ok(hook_plus_box(p.degree(), &column, j + 1).transpose())
    } else {
        let (row, j) = shape_column_set(&p.complement());
        Ok(hook_plus_box(p.degree(), &row, j + 1))
    }
}

/// The set `S` of [`psi_shape_map`]: its first column when `1` comes after
/// `n`, its first row otherwise.
pub fn psi_shape_set(p: &Permutation) -> Result<BTreeSet<usize>> {
    check_z(p)?;
    Ok(if one_after_n(p) {
        shape_column_set(p).0
    } else {
        shape_column_set(&p.complement()).0
    })
}

pub fn psi_shape_inverse(t: &StandardTableau) -> Result<Permutation> {
    check_t(t)?;
    let (row, corner) = row_and_corner(t);
    let j = corner - 1;
    let p = if row.contains(&2) {
        invert_shape_first_case(t.size(), &row, j)?.complement()
    } else {
        let (column, _) = row_and_corner(&t.transpose());
        invert_shape_first_case(t.size(), &column, j)?
    };
    if psi_shape_map(&p).as_ref() != Ok(t) {
        return Err(Error::NotInT(t.to_string()));
    }
    Ok(p)
}

/// Rebuilds `π` with `1` after `n` from `S` and `j = π⁻¹(1)`. Before `j`,
/// position `p` is on the falling run when `p + 1 ∈ S`; after `j`, it is on
/// the high run when `p + 1 ∈ S`.
fn invert_shape_first_case(n: usize, column: &BTreeSet<usize>, j: usize) -> Result<Permutation> {
    let bad = || Error::NotInT(format!("no permutation for S = {column:?}, j = {j}"));
    if j < 2 || j >= n {
        return Err(bad());
    }
    let climbing = (2..j).filter(|i| !column.contains(&(i + 1))).count();
    let first = n.checked_sub(climbing).filter(|&v| v >= 2).ok_or_else(bad)?;
    let mut values = vec![first];
    let (mut up, mut down) = (first + 1, first - 1);
    for i in 2..j {
        if column.contains(&(i + 1)) {
            values.push(down);
            down = down.wrapping_sub(1);
        } else {
            values.push(up);
            up += 1;
        }
    }
    values.push(1);
    let (mut low, mut high) = (2, down);
    for i in j + 1..n {
        if column.contains(&(i + 1)) {
            values.push(high);
            high = high.wrapping_sub(1);
        } else {
            values.push(low);
            low += 1;
        }
    }
    values.push(low);
    Permutation::new(values).map_err(|_| bad())
}
