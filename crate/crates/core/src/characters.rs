//! μ-left-unimodal permutations, signed enumeration over arc permutations and
//! a Murnaghan–Nakayama oracle for irreducible characters of `S_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{generate_family, Family};
use crate::perm::{DescentSet, Permutation};
use crate::tableaux::{generate_syt, Shape, StandardTableau};

/// An integer partition, stored weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts; zeros are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p)).is_none() {
            return Err(Error::InvalidPartition("parts overflow".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts larger than one.
    pub fn r(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 1).count()
    }

    /// Number of parts equal to one.
    pub fn s(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Prefix sums `μ_(1), …, μ_(t)`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// The marker set `S(μ)` as a descent-set-shaped object.
    pub fn marker_set(&self) -> DescentSet {
        let n = self.size();
        DescentSet::from_positions(n, self.prefix_sums().into_iter().filter(|&x| x < n))
            .expect("prefix sums are in range")
    }

    /// Half-open position ranges `[start, end)` of the blocks, 1-indexed.
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let b = (start, start + p);
                start += p;
                b
            })
            .collect()
    }

    /// Centralizer order `z_μ = ∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            for j in 1..=m {
                z *= (p as u128) * (j as u128);
            }
            i += m;
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let even_parts = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even_parts % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(4,3,1)`, `4,3,1` or `4 3 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidPartition(format!("{s:?} has no parts")));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn check_degree(n: usize, mu: &Partition) -> Result<()> {
    if mu.size() != n {
        return Err(Error::DegreeMismatch { left: n, right: mu.size() });
    }
    Ok(())
}

fn is_v_shaped(seq: &[usize]) -> bool {
    let mut rising = false;
    for w in seq.windows(2) {
        if w[0] < w[1] {
            rising = true;
        } else if rising {
            return false;
        }
    }
    true
}

/// Whether every block of `p` (cut at the prefix sums of `mu`) first
/// decreases and then increases, i.e. `p⁻¹` is μ-left-unimodal.
pub fn is_mu_left_unimodal(p: &Permutation, mu: &Partition) -> Result<bool> {
    check_degree(p.degree(), mu)?;
    let v = p.to_vec();
    Ok(mu.blocks().iter().all(|&(a, b)| is_v_shaped(&v[a - 1..b - 1])))
}

/// The descents inside each block form a prefix of that block's interior.
fn descents_are_blockwise_prefix(des: &DescentSet, mu: &Partition) -> bool {
    mu.blocks().iter().all(|&(a, b)| {
        let mut seen_ascent = false;
        for i in a..b - 1 {
            if des.contains(i) {
                if seen_ascent {
                    return false;
                }
            } else {
                seen_ascent = true;
            }
        }
        true
    })
}

/// μ-unimodality of a standard Young tableau, read off its descent set.
pub fn is_mu_unimodal_tableau(t: &StandardTableau, mu: &Partition) -> Result<bool> {
    check_degree(t.size(), mu)?;
    Ok(descents_are_blockwise_prefix(&t.descent_set(), mu))
}

fn sign_outside(des: &DescentSet, mu: &Partition) -> i64 {
    let markers = mu.marker_set();
    let k = des.iter().filter(|&i| !markers.contains(i)).count();
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn exact_count(q: BigRational, what: &str) -> Result<u64> {
    if !q.is_integer() {
        return Err(Error::NonIntegral(format!("{what} evaluated to {q}")));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral(format!("{what} does not fit in u64")))
}

/// `|A_n ∩ L_μ⁻¹| = μ_1⋯μ_r · 2^{r+s} · (r + s/4 − Σ 1/μ_i)`, in exact
/// rational arithmetic.
pub fn count_arc_mu(n: usize, mu: &Partition) -> Result<u64> {
    check_degree(n, mu)?;
    if n < 2 {
        // the formula gives 1/2 at n = 1
        return Err(Error::DegreeOutOfRange(n));
    }
    let big = mu.parts().iter().filter(|&&p| p > 1);
    let (r, s) = (mu.r() as i64, mu.s() as i64);
    let prod: BigInt = big.clone().map(|&p| BigInt::from(p)).product();
    let inv_sum: BigRational =
        big.map(|&p| BigRational::new(BigInt::one(), BigInt::from(p))).sum();
    let inner = BigRational::from_integer(BigInt::from(r))
        + BigRational::new(BigInt::from(s), BigInt::from(4))
        - inv_sum;
    let total = BigRational::from_integer(prod * (BigInt::one() << ((r + s) as usize))) * inner;
    exact_count(total, "count_arc_mu")
}

/// Brute-force `|A_n ∩ L_μ⁻¹|`.
pub fn count_arc_mu_brute(n: usize, mu: &Partition) -> Result<u64> {
    check_degree(n, mu)?;
    let arcs = generate_family(n, Family::A);
    Ok(arcs.iter().filter(|p| is_mu_left_unimodal(p, mu).unwrap_or(false)).count() as u64)
}

fn signed_sum_over<'a>(perms: impl IntoIterator<Item = &'a Permutation>, mu: &Partition) -> i64 {
    perms
        .into_iter()
        .filter(|p| is_mu_left_unimodal(p, mu).unwrap_or(false))
        .map(|p| sign_outside(&p.descent_set(), mu))
        .sum()
}

/// `Σ_{π ∈ A_n ∩ L_μ⁻¹} (−1)^{|Des(π) ∖ S(μ)|}`, by enumeration.
pub fn signed_sum_arc_mu(n: usize, mu: &Partition) -> Result<i64> {
    check_degree(n, mu)?;
    Ok(signed_sum_over(&generate_family(n, Family::A), mu))
}

/// `χ^λ(μ)` as a signed sum over μ-unimodal standard Young tableaux.
pub fn irreducible_character(lambda: &Shape, mu: &Partition) -> Result<i64> {
    check_degree(lambda.size(), mu)?;
    Ok(tableau_signed_sum(&generate_syt(lambda), mu))
}

fn tableau_signed_sum(tabs: &[StandardTableau], mu: &Partition) -> i64 {
    tabs.iter()
        .map(|t| t.descent_set())
        .filter(|d| descents_are_blockwise_prefix(d, mu))
        .map(|d| sign_outside(&d, mu))
        .sum()
}

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `k` moves
/// one bead from `b` to `b − k`, with sign given by the beads jumped over.
pub fn mn_character(lambda: &Shape, mu: &Partition) -> Result<i64> {
    check_degree(lambda.size(), mu)?;
    let len = lambda.parts().len();
    let beads: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    Ok(mn_beads(beads, mu.parts()))
}

fn mn_beads(beads: Vec<usize>, rest: &[usize]) -> i64 {
    let Some((&k, tail)) = rest.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beads.clone();
        next[idx] = target;
        let value = mn_beads(next, tail);
        total += if jumped % 2 == 0 { value } else { -value };
    }
    total
}

/// `(1/4) · s · ∏ (1 + (−1)^{μ_j − 1})`.
pub fn regev_character(n: usize, mu: &Partition) -> Result<i64> {
    check_degree(n, mu)?;
    if n < 2 {
        return Err(Error::DegreeOutOfRange(n));
    }
    if mu.parts().iter().any(|&p| p % 2 == 0) {
        return Ok(0);
    }
    let t = mu.len() as u32;
    let s = mu.s() as i64;
    // all parts odd: every factor is 2
    let numer = BigInt::from(s) << t as usize;
    let q = BigRational::new(numer, BigInt::from(4));
    if !q.is_integer() {
        return Err(Error::NonIntegral(format!("Regev formula at {mu} gives {q}")));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegral("Regev formula overflow".into()))
}

/// The multiset of shapes in the decomposition of the induced exterior algebra.
pub fn regev_decomposition_shapes(n: usize) -> Vec<Shape> {
    let mut shapes: Vec<Shape> = (1..=n).map(|k| Shape::hook(n, k)).collect();
    shapes.extend((2..n).map(|k| Shape::hook(n, k)));
    shapes.extend((2..n.saturating_sub(1)).map(|k| Shape::hook_plus_box(n, k)));
    shapes
}

/// One row of the Regev verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegevRow {
    pub mu: String,
    pub closed_form: i64,
    pub decomposition: i64,
    pub signed_sum: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegevReport {
    pub n: usize,
    pub rows: Vec<RegevRow>,
    pub passed: bool,
}

/// Compares the closed form with the character decomposition (through the
/// MN oracle) and with the signed enumeration, for every `μ ⊢ n`.
pub fn regev_report(n: usize) -> Result<RegevReport> {
    if n < 2 {
        return Err(Error::DegreeOutOfRange(n));
    }
    let shapes = regev_decomposition_shapes(n);
    let arcs = generate_family(n, Family::A);
    let mut rows = Vec::new();
    for mu in partitions(n) {
        let closed_form = regev_character(n, &mu)?;
        let mut decomposition = 0;
        for lambda in &shapes {
            decomposition += mn_character(lambda, &mu)?;
        }
        let signed_sum = signed_sum_over(&arcs, &mu);
        let ok = closed_form == decomposition && closed_form == signed_sum;
        rows.push(RegevRow { mu: mu.to_string(), closed_form, decomposition, signed_sum, ok });
    }
    let passed = rows.iter().all(|r| r.ok);
    Ok(RegevReport { n, rows, passed })
}

pub fn verify_regev(n: usize) -> Result<bool> {
    Ok(regev_report(n)?.passed)
}

/// The three signed sums over `L_n`, `U_n ∖ L_n`, `Z_n` (each restricted to
/// `L_μ⁻¹`) next to the matching tableau sums over hooks, hooks with at least
/// two rows and columns, and the shapes `(k,2,1^{n−k−2})`.
pub fn three_way_split(n: usize, mu: &Partition) -> Result<([i64; 3], [i64; 3])> {
    check_degree(n, mu)?;
    let left = generate_family(n, Family::L);
    let uni = generate_family(n, Family::U);
    let z = generate_family(n, Family::Z);
    let right_only: Vec<Permutation> = uni.into_iter().filter(|p| !left.contains(p)).collect();
    let perms = [signed_sum_over(&left, mu), signed_sum_over(&right_only, mu), signed_sum_over(&z, mu)];

    let sum_shapes = |shapes: Vec<Shape>| -> i64 {
        shapes.iter().map(|s| tableau_signed_sum(&generate_syt(s), mu)).sum()
    };
    let tabs = [
        sum_shapes((1..=n).map(|k| Shape::hook(n, k)).collect()),
        sum_shapes((2..n).map(|k| Shape::hook(n, k)).collect()),
        sum_shapes((2..n.saturating_sub(1)).map(|k| Shape::hook_plus_box(n, k)).collect()),
    ];
    Ok((perms, tabs))
}

/// `Σ f^λ` over the decomposition shapes, via the hook length formula.
pub fn regev_dimension(n: usize) -> num_bigint::BigUint {
    regev_decomposition_shapes(n).iter().map(|s| s.hook_length_count()).sum()
}

/// `n · 2^{n−2}`.
pub fn expected_dimension(n: usize) -> num_bigint::BigUint {
    if n < 2 {
        return num_bigint::BigUint::zero();
    }
    num_bigint::BigUint::from(n) << (n - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;

    fn mu(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn partition_basics() {
        let m = mu("(4,3,1)");
        assert_eq!(m.prefix_sums(), vec![4, 7, 8]);
        assert_eq!((m.r(), m.s()), (2, 1));
        assert_eq!(m.marker_set().iter().collect::<Vec<_>>(), vec![4, 7]);
        assert_eq!(mu("1 3 4"), m);
        assert!("".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(mu("2,1,1").centralizer_order(), 4);
    }

    #[test]
    fn v_shaped_examples() {
        let m = mu("4,3,1");
        for good in ["53687142", "35687412"] {
            assert!(is_mu_left_unimodal(&p(good), &m).unwrap(), "{good}");
        }
        for bad in ["53867142", "53681742"] {
            assert!(!is_mu_left_unimodal(&p(bad), &m).unwrap(), "{bad}");
        }
        for q in symmetric_group(4) {
            assert!(is_mu_left_unimodal(&q, &Partition::ones(4)).unwrap());
        }
        assert!(is_mu_left_unimodal(&p("123"), &m).is_err());
    }

    #[test]
    fn worked_enumeration() {
        let m = mu("3,1");
        let listed: Vec<Permutation> = [
            "1234", "1243", "2134", "2143", "2341", "3214", "3241", "4123", "4132", "4312", "4321",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        let mut found: Vec<Permutation> = generate_family(4, Family::A)
            .into_iter()
            .filter(|q| is_mu_left_unimodal(q, &m).unwrap())
            .collect();
        found.sort();
        assert_eq!(found, listed);
        assert_eq!(count_arc_mu(4, &m).unwrap(), 11);
        assert_eq!(signed_sum_arc_mu(4, &m).unwrap(), 1);
        assert_eq!(regev_character(4, &m).unwrap(), 1);
    }

    #[test]
    fn unsigned_formula_matches_enumeration() {
        assert!(count_arc_mu(1, &Partition::ones(1)).is_err());
        for n in 2..=8 {
            assert_eq!(count_arc_mu(n, &Partition::ones(n)).unwrap(), Family::A.expected_size(n));
            for m in partitions(n) {
                assert_eq!(count_arc_mu(n, &m).unwrap(), count_arc_mu_brute(n, &m).unwrap(), "{m}");
            }
        }
    }

    #[test]
    fn signed_formula_matches_enumeration() {
        for n in 2..=8 {
            for m in partitions(n) {
                assert_eq!(signed_sum_arc_mu(n, &m).unwrap(), regev_character(n, &m).unwrap(), "{m}");
            }
        }
        assert_eq!(signed_sum_arc_mu(10, &mu("5,3,1,1")).unwrap(), 8);
        assert_eq!(regev_character(10, &mu("5,3,1,1")).unwrap(), 8);
        assert_eq!(signed_sum_arc_mu(6, &mu("4,1,1")).unwrap(), 0);
    }

    #[test]
    fn mn_oracle_small_values() {
        let s21 = Shape::new(vec![2, 1]).unwrap();
        assert_eq!(mn_character(&s21, &mu("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&s21, &mu("3")).unwrap(), -1);
        assert_eq!(mn_character(&s21, &mu("2,1")).unwrap(), 0);
    }

    #[test]
    fn mn_orthogonality() {
        for n in 1..=6 {
            let shapes: Vec<Shape> =
                partitions(n).iter().map(|l| Shape::new(l.parts().to_vec()).unwrap()).collect();
            for m in partitions(n) {
                let sq: i64 = shapes.iter().map(|l| mn_character(l, &m).unwrap().pow(2)).sum();
                assert_eq!(sq as u128, m.centralizer_order(), "{m}");
            }
            // the trivial class gives dimensions
            for l in &shapes {
                let d = mn_character(l, &Partition::ones(n)).unwrap();
                assert_eq!(num_bigint::BigUint::from(d as u64), l.hook_length_count());
            }
        }
    }

    #[test]
    fn tableau_sum_equals_mn() {
        for n in 1..=7 {
            for l in partitions(n) {
                let lambda = Shape::new(l.parts().to_vec()).unwrap();
                for m in partitions(n) {
                    assert_eq!(
                        irreducible_character(&lambda, &m).unwrap(),
                        mn_character(&lambda, &m).unwrap(),
                        "lambda {l} mu {m}"
                    );
                }
            }
            let row = Shape::new(vec![n]).unwrap();
            let col = Shape::new(vec![1; n]).unwrap();
            for m in partitions(n) {
                assert_eq!(irreducible_character(&row, &m).unwrap(), 1);
                assert_eq!(irreducible_character(&col, &m).unwrap(), m.sign());
            }
        }
    }

    #[test]
    fn tableau_condition_matches_rsk() {
        for n in 1..=6 {
            let group = symmetric_group(n);
            for m in partitions(n) {
                for q in &group {
                    let (_, qt) = q.rsk();
                    assert_eq!(
                        is_mu_left_unimodal(q, &m).unwrap(),
                        is_mu_unimodal_tableau(&qt, &m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn regev_verification() {
        for n in 4..=8 {
            let report = regev_report(n).unwrap();
            assert!(report.passed, "{report:?}");
        }
        let r4 = regev_report(4).unwrap();
        let row = r4.rows.iter().find(|r| r.mu == "(3,1)").unwrap();
        assert_eq!((row.closed_form, row.decomposition, row.signed_sum), (1, 1, 1));
        let json = serde_json::to_string(&r4).unwrap();
        assert!(json.contains("\"closed_form\""));
        assert!(regev_character(1, &mu("1")).is_err());
    }

    #[test]
    fn dimension_identity() {
        for n in 2..=10 {
            assert_eq!(regev_character(n, &Partition::ones(n)).unwrap() as u64, Family::A.expected_size(n));
            assert_eq!(regev_dimension(n), expected_dimension(n), "n={n}");
        }
    }

    #[test]
    fn split_matches_term_by_term() {
        for n in 4..=7 {
            for m in partitions(n) {
                let (perms, tabs) = three_way_split(n, &m).unwrap();
                assert_eq!(perms, tabs, "n={n} mu={m}");
            }
        }
    }
}
