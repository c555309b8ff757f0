//! Shuffles of `1..k` with `k+1..n`, their pattern characterization, rectangle
//! fillings and the weak order on their union.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{patterns, symmetric_group, Permutation};
use crate::tableaux::{binomial, generate_syt, replay_transpositions, Shape};
use crate::weak_order::induced_weak_order;

/// Every interleaving of `1..k` and `k+1..k+m`, sorted.
pub fn generate_shuffles(k: usize, m: usize) -> Vec<Permutation> {
    let n = k + m;
    let mut out = Vec::new();
    // choose the positions holding the small values
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let (mut lo, mut hi) = (1, k + 1);
        let values: Vec<usize> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    lo += 1;
                    lo - 1
                } else {
                    hi += 1;
                    hi - 1
                }
            })
            .collect();
        out.push(Permutation::new(values).expect("interleaving is a permutation"));
    }
    out.sort();
    out
}

/// The union `barSh_n` of `Sh_{k,n−k}` over all `k`, sorted.
pub fn shuffle_union(n: usize) -> Vec<Permutation> {
    let set: BTreeSet<Permutation> = (0..=n).flat_map(|k| generate_shuffles(k, n - k)).collect();
    set.into_iter().collect()
}

/// `π_k = (k+1)(k+2)…n 1 2…k`.
pub fn pi_k(n: usize, k: usize) -> Permutation {
    let values: Vec<usize> = (k + 1..=n).chain(1..=k).collect();
    Permutation::new(values).expect("rotation is a permutation")
}

/// Descent set of the inverse is empty or `{k}` for some `k`.
pub fn is_shuffle_by_inverse_descents(p: &Permutation) -> bool {
    p.inverse().descent_set().len() <= 1
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::DegreeOutOfRange(n));
    }
    Ok(())
}

/// `barSh_n` equals the class of permutations avoiding 321, 2143 and 2413.
pub fn shuffle_pattern_check(n: usize) -> Result<bool> {
    check_n(n, 8)?;
    let pats = patterns(&["321", "2143", "2413"]);
    let avoiders: Vec<Permutation> =
        symmetric_group(n).into_iter().filter(|p| p.avoids_all(&pats)).collect();
    let mut union = shuffle_union(n);
    union.sort();
    let mut av = avoiders;
    av.sort();
    Ok(union == av)
}

/// Permutations obtained from every standard filling of every order ideal of
/// the `k × m` rectangle. Rows are labeled `k, …, 1` from the top, columns
/// `k+1, …, k+m`, and the entry order gives the order of the transpositions.
pub fn rectangle_filling_images(k: usize, m: usize) -> Result<BTreeSet<Permutation>> {
    if k * m > 16 {
        return Err(Error::InvalidInput(format!("{k}×{m} rectangle is too large")));
    }
    let n = k + m;
    let mut out = BTreeSet::new();
    for shape in shapes_in_box(k, m) {
        if shape.is_empty() {
            out.insert(Permutation::identity(n));
            continue;
        }
        let shape = Shape::new(shape)?;
        for t in generate_syt(&shape) {
            let mut cells: Vec<(usize, (usize, usize))> = Vec::new();
            for (r, row) in t.rows().iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    cells.push((v, (k - r, k + 1 + c)));
                }
            }
            cells.sort_unstable();
            out.insert(replay_transpositions(n, cells.into_iter().map(|(_, cell)| cell)));
        }
    }
    Ok(out)
}

pub fn rectangle_filling_check(k: usize, m: usize) -> Result<bool> {
    let images = rectangle_filling_images(k, m)?;
    let shuffles: BTreeSet<Permutation> = generate_shuffles(k, m).into_iter().collect();
    Ok(images == shuffles)
}

/// Partitions fitting in `rows × cols`, including the empty one.
fn shapes_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleIntervalRow {
    pub k: usize,
    pub top: String,
    pub interval_size: usize,
    pub expected_size: String,
    pub interval_is_shuffles: bool,
    pub chains: String,
    pub expected_chains: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleOrderReport {
    pub n: usize,
    pub maxima: Vec<String>,
    pub maxima_ok: bool,
    pub rows: Vec<ShuffleIntervalRow>,
    pub passed: bool,
}

/// Weak order on `barSh_n`: its maximal elements, the lower intervals of the
/// `π_k`, and their maximal chain counts against rectangular SYT counts.
pub fn shuffle_weak_order_check(n: usize) -> Result<ShuffleOrderReport> {
    check_n(n, 7)?;
    if n < 2 {
        return Err(Error::DegreeOutOfRange(n));
    }
    let poset = induced_weak_order(shuffle_union(n))?;
    let bottom = poset.index_of(&Permutation::identity(n))?;

    let found: BTreeSet<Permutation> =
        poset.maximal_elements().into_iter().map(|i| poset.elements()[i].clone()).collect();
    let expected: BTreeSet<Permutation> = (1..n).map(|k| pi_k(n, k)).collect();
    let maxima_ok = found == expected;

    let mut rows = Vec::new();
    for k in 1..n {
        let top = pi_k(n, k);
        let hi = poset.index_of(&top)?;
        let interval: BTreeSet<Permutation> =
            poset.interval(bottom, hi).into_iter().map(|i| poset.elements()[i].clone()).collect();
        let shuffles: BTreeSet<Permutation> = generate_shuffles(k, n - k).into_iter().collect();
        let chains = poset.count_maximal_chains(bottom, hi)?;
        let expected_chains = Shape::rectangle(k, n - k).hook_length_count();
        rows.push(ShuffleIntervalRow {
            k,
            top: top.to_string(),
            interval_size: interval.len(),
            expected_size: binomial(n, k).to_string(),
            interval_is_shuffles: interval == shuffles,
            chains: chains.to_string(),
            expected_chains: expected_chains.to_string(),
        });
    }
    let passed = maxima_ok
        && rows.iter().all(|r| {
            r.interval_is_shuffles
                && r.interval_size.to_string() == r.expected_size
                && r.chains == r.expected_chains
        });
    Ok(ShuffleOrderReport {
        n,
        maxima: found.iter().map(|p| p.to_string()).collect(),
        maxima_ok,
        rows,
        passed,
    })
}

/// Every Knuth class (same insertion tableau) of `S_n` lies entirely inside
/// or entirely outside `barSh_n`.
pub fn shuffles_are_knuth_closed(n: usize) -> Result<bool> {
    check_n(n, 8)?;
    let mut classes: HashMap<Vec<Vec<usize>>, (usize, usize)> = HashMap::new();
    for p in symmetric_group(n) {
        let (pt, _) = p.rsk();
        let entry = classes.entry(pt.rows().to_vec()).or_insert((0, 0));
        entry.0 += 1;
        if is_shuffle_by_inverse_descents(&p) {
            entry.1 += 1;
        }
    }
    Ok(classes.values().all(|&(total, inside)| inside == 0 || inside == total))
}

/// `f^{k × m}` via the hook length formula.
pub fn rectangle_syt_count(k: usize, m: usize) -> BigUint {
    Shape::rectangle(k, m).hook_length_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(generate_shuffles(2, 2).len(), 6);
        assert_eq!(generate_shuffles(0, 5), vec![Permutation::identity(5)]);
        assert_eq!(generate_shuffles(3, 0), vec![Permutation::identity(3)]);
        for n in 2..=10 {
            assert_eq!(shuffle_union(n).len(), (1 << n) - n, "n={n}");
        }
        assert!(generate_shuffles(2, 2).contains(&p("1324")));
        assert!(!generate_shuffles(2, 2).contains(&p("2134")));
    }

    #[test]
    fn pattern_class() {
        let u3: Vec<String> = shuffle_union(3).iter().map(|q| q.to_string()).collect();
        assert_eq!(u3.len(), 5);
        assert!(!u3.contains(&"321".to_string()));
        assert_eq!(shuffle_union(4).len(), 12);
        for n in 1..=8 {
            assert!(shuffle_pattern_check(n).unwrap(), "n={n}");
        }
        assert!(shuffle_pattern_check(9).is_err());
    }

    #[test]
    fn inverse_descent_characterization() {
        for n in 1..=8 {
            let by_des: Vec<Permutation> =
                symmetric_group(n).into_iter().filter(is_shuffle_by_inverse_descents).collect();
            assert_eq!(by_des, shuffle_union(n));
        }
        for k in 1..5 {
            for q in generate_shuffles(k, 5 - k) {
                let des: Vec<usize> = q.inverse().descent_set().iter().collect();
                assert!(des.is_empty() || des == vec![k]);
            }
        }
    }

    #[test]
    fn rectangle_fillings() {
        assert_eq!(replay_transpositions(4, std::iter::empty()), Permutation::identity(4));
        for (k, m) in [(1, 1), (2, 2), (3, 2), (2, 3), (1, 4), (3, 3), (4, 2), (4, 4)] {
            assert!(rectangle_filling_check(k, m).unwrap(), "{k}×{m}");
        }
        assert!(rectangle_filling_check(5, 4).is_err());
    }

    #[test]
    fn weak_order_on_shuffles() {
        let r = shuffle_weak_order_check(4).unwrap();
        let row = &r.rows[1];
        assert_eq!((row.top.as_str(), row.interval_size, row.chains.as_str()), ("3412", 6, "2"));
        let r3 = shuffle_weak_order_check(3).unwrap();
        assert_eq!(r3.rows[0].top, "231");
        assert_eq!(r3.rows[0].chains, "1");
        for n in 2..=7 {
            let report = shuffle_weak_order_check(n).unwrap();
            assert!(report.passed, "{report:?}");
        }
    }

    #[test]
    fn knuth_closure() {
        for n in 1..=7 {
            assert!(shuffles_are_knuth_closed(n).unwrap());
        }
        assert_eq!(rectangle_syt_count(2, 2), BigUint::from(2u32));
        assert_eq!(rectangle_syt_count(3, 3), BigUint::from(42u32));
    }
}
