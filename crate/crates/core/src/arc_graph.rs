//! The graph `X_n` on arc permutations, its encoding into the dominance
//! order on `{0..n−1} × {0,1}^{n−2}`, and the action of the affine Weyl
//! group `C̃_{n−2}` on `A_n` whose Schreier graph it is.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{generate_family, is_arc, Family, PsiCode};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::poset::FinitePoset;

/// Largest degree accepted by [`build_arc_graph`].
pub const MAX_GRAPH_DEGREE: usize = 14;

/// `X_n`: vertices `A_n` in lexicographic order, `u ~ uσ_i` whenever both
/// are arc permutations.
#[derive(Clone, Debug)]
pub struct ArcGraph {
    n: usize,
    vertices: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    graph: Graph,
    /// `(u, v, i)` with `u < v` and `v = uσ_i`.
    labeled: Vec<(usize, usize, usize)>,
}

pub fn build_arc_graph(n: usize) -> Result<ArcGraph> {
    if n == 0 || n > MAX_GRAPH_DEGREE {
        return Err(Error::DegreeOutOfRange(n));
    }
    let vertices = generate_family(n, Family::A);
    let index: HashMap<Permutation, usize> =
        vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut graph = Graph::new(vertices.len());
    let mut labeled = Vec::new();
    for (u, p) in vertices.iter().enumerate() {
        for i in 1..n {
            if let Some(&v) = index.get(&p.swap_positions(i)) {
                if u < v {
                    graph.add_edge(u, v);
                    labeled.push((u, v, i));
                }
            }
        }
    }
    labeled.sort_unstable();
    Ok(ArcGraph { n, vertices, index, graph, labeled })
}

impl ArcGraph {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Edges `(u, v, i)` with `u < v` as vertex indices and `v = uσ_i`.
    pub fn labeled_edges(&self) -> &[(usize, usize, usize)] {
        &self.labeled
    }

    pub fn index_of(&self, p: &Permutation) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::UnknownElement(p.to_string()))
    }

    pub fn distance(&self, u: &Permutation, v: &Permutation) -> Result<usize> {
        let d = self.graph.distance(self.index_of(u)?, self.index_of(v)?);
        Ok(d.expect("X_n is connected"))
    }

    pub fn diameter(&self) -> usize {
        self.graph.diameter().expect("X_n is connected")
    }

    pub fn geodesic_vertices(&self, u: &Permutation, v: &Permutation) -> Result<Vec<Permutation>> {
        let mut out: Vec<Permutation> = self
            .graph
            .geodesic_vertices(self.index_of(u)?, self.index_of(v)?)
            .into_iter()
            .map(|w| self.vertices[w].clone())
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn geodesic_count(&self, u: &Permutation, v: &Permutation) -> Result<BigUint> {
        Ok(self.graph.geodesic_count(self.index_of(u)?, self.index_of(v)?))
    }
}

/// A point `(v_0, v_1, …, v_{n−2})` of `{0..n−1} × {0,1}^{n−2}`, ordered by
/// prefix sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominanceVector {
    entries: Vec<i64>,
}

impl DominanceVector {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        let ok = n >= 2
            && entries.len() == n - 1
            && (0..n as i64).contains(&entries[0])
            && entries[1..].iter().all(|&b| b == 0 || b == 1);
        if !ok {
            return Err(Error::InvalidInput(format!("{entries:?} is not in the degree-{n} box")));
        }
        Ok(Self { entries })
    }

    pub fn from_psi(code: &PsiCode) -> Self {
        Self { entries: code.entries() }
    }

    pub fn to_psi(&self) -> PsiCode {
        let bits = self.entries[1..].iter().map(|&b| b as u8).collect();
        PsiCode::new(self.degree(), self.entries[0] as usize, bits).expect("box point is a code")
    }

    pub fn degree(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn prefix_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .scan(0, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    /// Sum of all prefix sums.
    pub fn rank(&self) -> i64 {
        self.prefix_sums().iter().sum()
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && self.prefix_sums().iter().zip(other.prefix_sums()).all(|(a, b)| *a <= b)
    }

    /// The meet in `Z^{n−1}`: prefix sums are pointwise minima.
    pub fn meet(&self, other: &Self) -> Vec<i64> {
        combine_prefix_sums(self, other, std::cmp::min)
    }

    /// The join in `Z^{n−1}`: prefix sums are pointwise maxima.
    pub fn join(&self, other: &Self) -> Vec<i64> {
        combine_prefix_sums(self, other, std::cmp::max)
    }

    /// Every point of the box, in lexicographic order.
    pub fn all(n: usize) -> Vec<DominanceVector> {
        PsiCode::all(n).iter().map(Self::from_psi).collect()
    }
}

fn combine_prefix_sums(a: &DominanceVector, b: &DominanceVector, f: fn(i64, i64) -> i64) -> Vec<i64> {
    let sums: Vec<i64> = a.prefix_sums().into_iter().zip(b.prefix_sums()).map(|(x, y)| f(x, y)).collect();
    let mut prev = 0;
    sums.into_iter()
        .map(|s| {
            let d = s - prev;
            prev = s;
            d
        })
        .collect()
}

impl fmt::Display for DominanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `Σ_j |Σ_{i≤j} (a_i − b_i)|`.
pub fn dominance_distance(a: &DominanceVector, b: &DominanceVector) -> Result<usize> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    let mut acc = 0i64;
    let mut total = 0;
    for (x, y) in a.entries.iter().zip(&b.entries) {
        acc += x - y;
        total += acc.unsigned_abs() as usize;
    }
    Ok(total)
}

/// The dominance order on the degree-`n` box.
pub fn dominance_poset(n: usize) -> Result<FinitePoset<DominanceVector>> {
    if !(2..=MAX_GRAPH_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    FinitePoset::from_relation(DominanceVector::all(n), DominanceVector::leq)
}

/// The extra edges `{(0, 0, r), (n−1, 1, r)}` joining the two ends of the box.
pub fn wrap_edges(n: usize) -> Vec<(DominanceVector, DominanceVector)> {
    if n < 3 {
        return Vec::new();
    }
    let m = n - 3;
    (0u64..1 << m)
        .map(|mask| {
            let rest: Vec<i64> = (0..m).map(|i| (mask >> (m - 1 - i) & 1) as i64).collect();
            let mut low = vec![0, 0];
            low.extend(&rest);
            let mut high = vec![n as i64 - 1, 1];
            high.extend(&rest);
            (DominanceVector { entries: low }, DominanceVector { entries: high })
        })
        .collect()
}

/// Which cases of the code-adjacency rule hold for a pair of distinct codes:
/// (i) two adjacent entries among `ψ_1..ψ_{n−2}` are switched; (ii) only the
/// last entry differs; (iii) `ψ_0 + ψ_1` agrees mod `n` and `ψ_2..` agree.
pub fn adjacency_cases(a: &PsiCode, b: &PsiCode) -> [bool; 3] {
    let n = a.degree();
    let (x, y) = (a.entries(), b.entries());
    let last = n - 2;
    let diff: Vec<usize> = (0..=last).filter(|&i| x[i] != y[i]).collect();
    let switched = diff.len() == 2
        && diff[0] >= 1
        && diff[1] == diff[0] + 1
        && x[diff[0]] == y[diff[1]]
        && x[diff[1]] == y[diff[0]];
    let only_last = diff == [last];
    let wrap_sum = n >= 3
        && (x[0] + x[1]).rem_euclid(n as i64) == (y[0] + y[1]).rem_euclid(n as i64)
        && (2..=last).all(|i| x[i] == y[i])
        && !diff.is_empty();
    [switched, only_last, wrap_sum]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub n: usize,
    /// ψ maps `X_n` edges onto dominance covers plus wrap edges, exactly.
    pub isomorphic: bool,
    pub wrap_edges: usize,
    /// Adjacency holds iff exactly one case of the rule holds, over all pairs.
    pub adjacency_rule_holds: bool,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.isomorphic && self.adjacency_rule_holds && self.wrap_edges == 1 << (self.n - 3)
    }
}

pub fn check_iso_with_dominance(n: usize) -> Result<IsoReport> {
    if n < 3 {
        return Err(Error::DegreeOutOfRange(n));
    }
    let x = build_arc_graph(n)?;
    let codes: Vec<PsiCode> = x
        .vertices()
        .iter()
        .map(|p| PsiCode::encode(p).expect("vertices are arc permutations"))
        .collect();
    let key = |a: DominanceVector, b: DominanceVector| if a <= b { (a, b) } else { (b, a) };

    let x_edges: BTreeSet<(DominanceVector, DominanceVector)> = x
        .graph()
        .edges()
        .into_iter()
        .map(|(u, v)| key(DominanceVector::from_psi(&codes[u]), DominanceVector::from_psi(&codes[v])))
        .collect();
    let poset = dominance_poset(n)?;
    let hasse: BTreeSet<(DominanceVector, DominanceVector)> = poset
        .covers()
        .into_iter()
        .map(|(lo, hi)| key(poset.elements()[lo].clone(), poset.elements()[hi].clone()))
        .collect();
    let wraps: BTreeSet<(DominanceVector, DominanceVector)> =
        wrap_edges(n).into_iter().map(|(a, b)| key(a, b)).collect();

    let disjoint = hasse.is_disjoint(&wraps);
    let union: BTreeSet<_> = hasse.union(&wraps).cloned().collect();
    let isomorphic = disjoint && union == x_edges && codes.len() == poset.len();

    let mut adjacency_rule_holds = true;
    for u in 0..codes.len() {
        for v in u + 1..codes.len() {
            let held = adjacency_cases(&codes[u], &codes[v]).iter().filter(|&&c| c).count();
            if (held == 1) != x.graph().has_edge(u, v) {
                adjacency_rule_holds = false;
            }
        }
    }
    Ok(IsoReport { n, isomorphic, wrap_edges: wraps.len(), adjacency_rule_holds })
}

/// The bound on `d_X(π, τ)` from comparing codes directly and after the
/// cyclic shift that sends `ψ_0(π) − ψ_0(τ)` from `x_0 > 0` to `x_0 − n`.
pub fn shifted_dominance_bound(p: &Permutation, t: &Permutation) -> Result<usize> {
    let (cp, ct) = (PsiCode::encode(p)?, PsiCode::encode(t)?);
    let direct = dominance_distance(&DominanceVector::from_psi(&cp), &DominanceVector::from_psi(&ct))?;
    let (hi, lo) = match cp.psi0().cmp(&ct.psi0()) {
        std::cmp::Ordering::Equal => return Ok(direct),
        std::cmp::Ordering::Greater => (p, t),
        std::cmp::Ordering::Less => (t, p),
    };
    let k = -(lo.at(1) as i64);
    let sh = PsiCode::encode(&hi.left_cycle_shift(k))?;
    let sl = PsiCode::encode(&lo.left_cycle_shift(k))?;
    let shifted = dominance_distance(&DominanceVector::from_psi(&sh), &DominanceVector::from_psi(&sl))?;
    Ok(direct.min(shifted))
}

/// `ρ_i(π) = πσ_{i+1}` when that is an arc permutation, `π` otherwise.
pub fn rho_action(i: usize, p: &Permutation) -> Result<Permutation> {
    if !is_arc(p) {
        return Err(Error::NotArc { perm: p.to_string() });
    }
    if i + 2 > p.degree() {
        return Err(Error::InvalidInput(format!("generator index {i} out of range for degree {}", p.degree())));
    }
    let q = p.swap_positions(i + 1);
    Ok(if is_arc(&q) { q } else { p.clone() })
}

/// Coxeter relations `(s_i s_j)^{m_ij} = 1` of `C̃_{n−2}` on generators
/// `s_0, …, s_{n−2}`, as `(i, j, m)`. For `n = 3` the group is infinite
/// dihedral and only the involution relations apply.
pub fn coxeter_relations(n: usize) -> Vec<(usize, usize, usize)> {
    let gens = n.saturating_sub(1);
    let mut out: Vec<(usize, usize, usize)> = (0..gens).map(|i| (i, i, 1)).collect();
    if n < 4 {
        return out;
    }
    for i in 0..gens {
        for j in i + 1..gens {
            let m = if j > i + 1 {
                2
            } else if i == 0 || i == n - 3 {
                4
            } else {
                3
            };
            out.push((i, j, m));
        }
    }
    out
}

/// Relations of [`coxeter_relations`] that fail at some point of `A_n`.
pub fn coxeter_violations(n: usize) -> Result<Vec<(usize, usize, usize, Permutation)>> {
    let mut bad = Vec::new();
    for p in generate_family(n, Family::A) {
        for &(i, j, m) in &coxeter_relations(n) {
            let mut q = p.clone();
            for _ in 0..m {
                q = rho_action(j, &q)?;
                q = rho_action(i, &q)?;
            }
            if q != p {
                bad.push((i, j, m, p.clone()));
            }
        }
    }
    Ok(bad)
}

/// Does the Schreier graph of the `ρ` action, loops removed, equal `X_n`
/// with matching generator labels?
pub fn schreier_graph_check(n: usize) -> Result<bool> {
    let x = build_arc_graph(n)?;
    let mut edges = BTreeSet::new();
    for (u, p) in x.vertices().iter().enumerate() {
        for i in 0..n - 1 {
            let q = rho_action(i, p)?;
            if q != *p {
                let v = x.index_of(&q)?;
                edges.insert((u.min(v), u.max(v), i + 1));
            }
        }
    }
    let expected: BTreeSet<(usize, usize, usize)> = x.labeled_edges().iter().copied().collect();
    Ok(edges == expected)
}

/// Orbits of `⟨ρ_1, …, ρ_{n−2}⟩` on `A_n`, each sorted, ordered by first
/// element.
pub fn b_orbits(n: usize) -> Result<Vec<Vec<Permutation>>> {
    orbits(n, 1)
}

/// Orbits of the whole group `⟨ρ_0, …, ρ_{n−2}⟩`.
pub fn full_orbits(n: usize) -> Result<Vec<Vec<Permutation>>> {
    orbits(n, 0)
}

fn orbits(n: usize, first_gen: usize) -> Result<Vec<Vec<Permutation>>> {
    let elements = generate_family(n, Family::A);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut out = Vec::new();
    for p in &elements {
        if seen.contains(p) {
            continue;
        }
        let mut orbit = vec![p.clone()];
        seen.insert(p.clone());
        let mut k = 0;
        while k < orbit.len() {
            for i in first_gen..n.saturating_sub(1) {
                let q = rho_action(i, &orbit[k])?;
                if seen.insert(q.clone()) {
                    orbit.push(q);
                }
            }
            k += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    Ok(out)
}
