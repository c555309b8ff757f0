//! Descent-set distributions `Σ x^{Des}` and major-index polynomials
//! `Σ q^{maj}` over the families, with their closed forms expanded exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::families::{generate_family, Family};
use crate::perm::{DescentSet, Permutation};
use crate::tableaux::{generate_hook_n, generate_t_n, StandardTableau};

/// A histogram of descent sets of degree-`n` objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentDistribution {
    n: usize,
    table: BTreeMap<DescentSet, u64>,
}

impl DescentDistribution {
    pub fn new(n: usize) -> Self {
        Self { n, table: BTreeMap::new() }
    }

    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = DescentSet>) -> Self {
        let mut out = Self::new(n);
        for d in sets {
            debug_assert_eq!(d.degree(), n);
            *out.table.entry(d).or_insert(0) += 1;
        }
        out
    }

    pub fn of_permutations<'a>(n: usize, perms: impl IntoIterator<Item = &'a Permutation>) -> Self {
        Self::from_sets(n, perms.into_iter().map(Permutation::descent_set))
    }

    pub fn of_tableaux<'a>(n: usize, tabs: impl IntoIterator<Item = &'a StandardTableau>) -> Self {
        Self::from_sets(n, tabs.into_iter().map(StandardTableau::descent_set))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, d: &DescentSet) -> u64 {
        self.table.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.table.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DescentSet, u64)> {
        self.table.iter().map(|(d, &c)| (d, c))
    }

    /// `x_i → q^i`.
    pub fn specialize_maj(&self) -> Polynomial {
        let mut coeffs = vec![0i64; self.n * self.n.saturating_sub(1) / 2 + 1];
        for (d, &c) in &self.table {
            coeffs[d.major_index()] += c as i64;
        }
        Polynomial::new(coeffs)
    }

    fn from_multilinear(poly: &Multilinear) -> Option<Self> {
        let mut table = BTreeMap::new();
        for (&mask, &c) in &poly.terms {
            if c < 0 {
                return None;
            }
            if c > 0 {
                table.insert(DescentSet::from_bits(poly.n, mask), c as u64);
            }
        }
        Some(Self { n: poly.n, table })
    }
}

impl Serialize for DescentDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.table.len()))?;
        for (d, c) in &self.table {
            map.serialize_entry(&d.to_key(), c)?;
        }
        map.end()
    }
}

/// Multilinear polynomials in `x_1..x_{n−1}` keyed by the bitmask of the
/// monomial; bit `i` stands for `x_i`, as in [`DescentSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
struct Multilinear {
    n: usize,
    terms: BTreeMap<u64, i64>,
}

impl Multilinear {
    fn constant(n: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(0, c);
        }
        Self { n, terms }
    }

    fn monomial(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mask = vars.into_iter().fold(0u64, |m, i| m | 1 << i);
        Self { n, terms: BTreeMap::from([(mask, 1)]) }
    }

    fn var(n: usize, i: usize) -> Self {
        Self::monomial(n, [i])
    }

    /// `∏_{i ∈ range} (1 + x_i)`.
    fn one_plus_product(n: usize, range: impl IntoIterator<Item = usize>) -> Self {
        range
            .into_iter()
            .fold(Self::constant(n, 1), |acc, i| acc * (Self::constant(n, 1) + Self::var(n, i)))
    }

    fn combine(mut self, rhs: Self, sign: i64) -> Self {
        for (m, c) in rhs.terms {
            let entry = self.terms.entry(m).or_insert(0);
            *entry += sign * c;
            if *entry == 0 {
                self.terms.remove(&m);
            }
        }
        self
    }
}

impl Add for Multilinear {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, 1)
    }
}

impl Sub for Multilinear {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, -1)
    }
}

impl Mul for Multilinear {
    type Output = Self;
    /// Only products of factors in disjoint variables occur here, so no
    /// square ever appears.
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::constant(self.n, 0);
        for (&a, &x) in &self.terms {
            for (&b, &y) in &rhs.terms {
                assert_eq!(a & b, 0, "product leaves the multilinear range");
                let entry = out.terms.entry(a | b).or_insert(0);
                *entry += x * y;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }
}

/// Dense integer polynomial in `q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `q^k`.
    pub fn power(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    /// `[n]_q = 1 + q + … + q^{n−1}`.
    pub fn q_integer(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// `∏_{i ∈ range} (1 + q^i)`.
    fn one_plus_powers(range: impl IntoIterator<Item = usize>) -> Self {
        range
            .into_iter()
            .fold(Self::one(), |acc, i| acc * (Self::one() + Self::power(i)))
    }
}

impl Add for Polynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &Self, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        Self::new((0..len).map(|i| at(&self, i) + at(&rhs, i)).collect())
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for Polynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Polynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
                match k {
                    0 => coeff,
                    1 => format!("{coeff}q"),
                    _ => format!("{coeff}q^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

pub fn descent_distribution_of_family(n: usize, family: Family) -> DescentDistribution {
    DescentDistribution::of_permutations(n, &generate_family(n, family))
}

pub fn maj_polynomial<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> Polynomial {
    let mut coeffs = Vec::new();
    for p in perms {
        let m = p.major_index();
        if coeffs.len() <= m {
            coeffs.resize(m + 1, 0);
        }
        coeffs[m] += 1;
    }
    Polynomial::new(coeffs)
}

/// Summands of the arc closed form: the full product, plus for each
/// `1 ≤ i ≤ n−2` the product with `(1+x_i)(1+x_{i+1})` replaced by
/// `x_i + x_{i+1}`.
fn arc_multilinear(n: usize) -> Multilinear {
    let mut total = Multilinear::one_plus_product(n, 1..n);
    for i in 1..n.saturating_sub(1) {
        total = total
            + Multilinear::one_plus_product(n, 1..i)
                * (Multilinear::var(n, i) + Multilinear::var(n, i + 1))
                * Multilinear::one_plus_product(n, i + 2..n);
    }
    total
}

/// `2 ∏(1+x_i) − 1 − x_1⋯x_{n−1}`.
fn unimodal_multilinear(n: usize) -> Multilinear {
    let prod = Multilinear::one_plus_product(n, 1..n);
    prod.clone() + prod - Multilinear::constant(n, 1) - Multilinear::monomial(n, 1..n)
}

fn expect_distribution(poly: Multilinear) -> DescentDistribution {
    DescentDistribution::from_multilinear(&poly).expect("closed form has nonnegative coefficients")
}

pub fn arc_descent_closed_form(n: usize) -> DescentDistribution {
    expect_distribution(arc_multilinear(n))
}

pub fn unimodal_descent_closed_form(n: usize) -> DescentDistribution {
    expect_distribution(unimodal_multilinear(n))
}

pub fn non_unimodal_descent_closed_form(n: usize) -> DescentDistribution {
    expect_distribution(arc_multilinear(n) - unimodal_multilinear(n))
}

pub fn hook_descent_closed_form(n: usize) -> DescentDistribution {
    expect_distribution(Multilinear::one_plus_product(n, 1..n))
}

/// The tableau side, summed by the position `i + 2` of the `(2,2)` entry and
/// whether `i + 1` sits in the first row or the first column.
pub fn t_descent_closed_form(n: usize) -> DescentDistribution {
    let mut total = Multilinear::constant(n, 0);
    for i in 2..=n.saturating_sub(2) {
        let head = Multilinear::one_plus_product(n, 1..i);
        let tail = Multilinear::one_plus_product(n, i + 2..n);
        let row = (head.clone() - Multilinear::constant(n, 1))
            * Multilinear::var(n, i + 1)
            * tail.clone();
        let column = (head - Multilinear::monomial(n, 1..i)) * Multilinear::var(n, i) * tail;
        total = total + row + column;
    }
    expect_distribution(total)
}

/// `(1+q)⋯(1+q^{n−2}) [n]_q`.
pub fn arc_maj_closed_form(n: usize) -> Polynomial {
    Polynomial::one_plus_powers(1..n.saturating_sub(1)) * Polynomial::q_integer(n)
}

/// The arc form minus `2(1+q)⋯(1+q^{n−1})` plus `1 + q^{C(n,2)}`.
pub fn z_maj_closed_form(n: usize) -> Polynomial {
    let full = Polynomial::one_plus_powers(1..n);
    arc_maj_closed_form(n) - full.clone() - full
        + Polynomial::one()
        + Polynomial::power(n * n.saturating_sub(1) / 2)
}

/// The unimodal closed form agrees with brute force over `U_n`.
pub fn unimodal_descent_identity(n: usize) -> bool {
    unimodal_descent_closed_form(n) == descent_distribution_of_family(n, Family::U)
}

/// `Σ_{T ∈ T_n} x^{Des(T)} = Σ_{π ∈ Z_n} x^{Des(π)}`.
pub fn tz_equidistribution(n: usize) -> bool {
    DescentDistribution::of_tableaux(n, &generate_t_n(n))
        == descent_distribution_of_family(n, Family::Z)
}

/// `Σ_{T ∈ Hook_n} x^{Des(T)}` by brute force.
pub fn hook_distribution(n: usize) -> DescentDistribution {
    DescentDistribution::of_tableaux(n, &generate_hook_n(n))
}
