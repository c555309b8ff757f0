//! Finite posets stored by their cover relation, with reachability bitsets
//! for comparisons and the lattice checks used on weak and dominance orders.

use std::collections::{HashMap, VecDeque};
use std::fmt::Display;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        BitSet { words }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// Summary of the lattice-theoretic checks on a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub is_graded: bool,
    pub is_modular: bool,
    pub is_self_dual: bool,
}

/// A finite poset given by its elements and cover pairs `(lower, upper)`.
#[derive(Clone, Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
}

impl<T: Clone + Eq + Hash + Display> FinitePoset<T> {
    /// Builds a poset from cover pairs given as element indices. Fails if the
    /// pairs contain a cycle or a transitive (redundant) pair.
    pub fn from_covers(elements: Vec<T>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n || lo == hi {
                return Err(Error::InvalidPoset(format!("bad cover pair ({lo}, {hi})")));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let order = topological_order(&up, &down)
            .ok_or_else(|| Error::InvalidPoset("cover relation has a cycle".into()))?;

        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &x in order.iter().rev() {
            let mut set = BitSet::new(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for x in 0..n {
            for y in above[x].iter() {
                below[y].insert(x);
            }
        }
        // a cover pair is redundant if its upper end is reachable through
        // another cover of the lower end
        for x in 0..n {
            for &y in &up[x] {
                if up[x].iter().any(|&z| z != y && above[z].contains(y)) {
                    return Err(Error::InvalidPoset(format!(
                        "pair ({}, {}) is not a cover",
                        elements[x], elements[y]
                    )));
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(Self { elements, index, up, down, above, below })
    }

    /// Builds the poset whose order is `leq`, taking covers as the transitive
    /// reduction. `leq` must be a partial order on `elements`.
    pub fn from_relation(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let n = elements.len();
        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(&elements[i], &elements[j]) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        // i < j is a cover when nothing lies strictly between
        let mut covers = Vec::new();
        for i in 0..n {
            for j in above[i].iter() {
                if above[i].intersection(&below[j]).is_empty() {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(elements, &covers)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn index_of(&self, x: &T) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownElement(x.to_string()))
    }

    /// Cover pairs as element indices, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn leq(&self, x: &T, y: &T) -> Result<bool> {
        Ok(self.leq_index(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// The rank function when every maximal chain of every lower interval
    /// has the same length, measured from the minimal elements.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let order = topological_order(&self.up, &self.down)?;
        let mut rank = vec![0usize; self.len()];
        for &x in &order {
            if let Some(&first) = self.down[x].first() {
                rank[x] = rank[first] + 1;
            }
        }
        let consistent = (0..self.len()).all(|x| self.up[x].iter().all(|&y| rank[y] == rank[x] + 1));
        // all minimal elements share rank 0 by construction, maximal ones must agree
        let maxima = self.maximal_elements();
        let same_top = maxima.windows(2).all(|w| rank[w[0]] == rank[w[1]]);
        (consistent && same_top).then_some(rank)
    }

    pub fn is_graded(&self) -> bool {
        self.rank_function().is_some()
    }

    fn extremum(&self, candidates: &BitSet, sets: &[BitSet]) -> Option<usize> {
        // the unique element of `candidates` below (or above) all others
        candidates
            .iter()
            .find(|&c| candidates.iter().all(|d| sets[c].contains(d)))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper = self.above[i].intersection(&self.above[j]);
        self.extremum(&upper, &self.above)
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower = self.below[i].intersection(&self.below[j]);
        self.extremum(&lower, &self.below)
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        n > 0
            && (0..n).all(|i| (i + 1..n).all(|j| self.join(i, j).is_some() && self.meet(i, j).is_some()))
    }

    /// For a graded lattice: `r(x) + r(y) = r(x∧y) + r(x∨y)` for all pairs.
    pub fn is_modular(&self) -> bool {
        let Some(rank) = self.rank_function() else {
            return false;
        };
        let n = self.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| match (self.meet(i, j), self.join(i, j)) {
                (Some(m), Some(u)) => rank[i] + rank[j] == rank[m] + rank[u],
                _ => false,
            })
        })
    }

    /// Searches for an order-reversing bijection of the Hasse diagram.
    pub fn is_self_dual(&self) -> bool {
        self.find_anti_automorphism().is_some()
    }

    /// Backtracking: elements are mapped in topological order, each candidate
    /// image constrained by the images of its lower covers.
    pub fn find_anti_automorphism(&self) -> Option<Vec<usize>> {
        let n = self.len();
        if n == 0 {
            return Some(Vec::new());
        }
        let rank = self.rank_function()?;
        let top_rank = rank.iter().copied().max().unwrap_or(0);
        let order = topological_order(&self.up, &self.down)?;
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.search_dual(&order, 0, &rank, top_rank, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    fn search_dual(
        &self,
        order: &[usize],
        pos: usize,
        rank: &[usize],
        top_rank: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&x) = order.get(pos) else {
            return true;
        };
        let candidates: Vec<usize> = match self.down[x].first() {
            // an element with lower covers must map to a lower cover of their images
            Some(&y) => self.down[image[y]].clone(),
            None => (0..self.len()).filter(|&c| self.up[c].is_empty()).collect(),
        };
        for c in candidates {
            if used[c]
                || rank[c] + rank[x] != top_rank
                || self.up[c].len() != self.down[x].len()
                || self.down[c].len() != self.up[x].len()
                || !self.down[x].iter().all(|&y| self.up[c].contains(&image[y]))
            {
                continue;
            }
            image[x] = c;
            used[c] = true;
            if self.search_dual(order, pos + 1, rank, top_rank, image, used) {
                return true;
            }
            used[c] = false;
            image[x] = usize::MAX;
        }
        false
    }

    pub fn lattice_report(&self) -> LatticeReport {
        let is_lattice = self.is_lattice();
        let is_graded = self.is_graded();
        LatticeReport {
            is_lattice,
            is_graded,
            is_modular: is_lattice && self.is_modular(),
            is_self_dual: self.is_self_dual(),
        }
    }

    /// Number of maximal chains of the interval `[lo, hi]`.
    pub fn count_maximal_chains(&self, lo: usize, hi: usize) -> Result<BigUint> {
        if !self.leq_index(lo, hi) {
            return Err(Error::NotComparable {
                lo: self.elements[lo].to_string(),
                hi: self.elements[hi].to_string(),
            });
        }
        let order = topological_order(&self.up, &self.down).expect("acyclic by construction");
        let mut paths = vec![BigUint::zero(); self.len()];
        paths[lo] = BigUint::one();
        for &x in &order {
            if paths[x].is_zero() || !self.leq_index(x, hi) {
                continue;
            }
            let here = paths[x].clone();
            for &y in &self.up[x] {
                if self.leq_index(y, hi) {
                    paths[y] += &here;
                }
            }
        }
        Ok(paths[hi].clone())
    }

    /// Elements of the closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.above[lo].intersection(&self.below[hi]).iter().collect()
    }

    /// The undirected Hasse diagram.
    pub fn hasse_graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        for (lo, hi) in self.covers() {
            g.add_edge(lo, hi);
        }
        g
    }
}

/// Kahn's algorithm; `None` on a cycle.
fn topological_order(up: &[Vec<usize>], down: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..up.len()).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(up.len());
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &up[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    (order.len() == up.len()).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(len: usize) -> FinitePoset<usize> {
        let covers: Vec<(usize, usize)> = (0..len).map(|i| (i, i + 1)).collect();
        FinitePoset::from_covers((0..=len).collect(), &covers).unwrap()
    }

    /// Subsets of {0,1,2} under inclusion.
    fn boolean_lattice() -> FinitePoset<usize> {
        FinitePoset::from_relation((0..8).collect(), |a, b| a & b == *a).unwrap()
    }

    #[test]
    fn chain_is_everything() {
        let c = chain(3);
        assert_eq!(
            c.lattice_report(),
            LatticeReport { is_lattice: true, is_graded: true, is_modular: true, is_self_dual: true }
        );
        assert_eq!(c.count_maximal_chains(0, 3).unwrap(), BigUint::one());
        assert!(c.count_maximal_chains(3, 0).is_err());
    }

    #[test]
    fn boolean_lattice_checks() {
        let b = boolean_lattice();
        assert_eq!(b.covers().len(), 12);
        assert!(b.lattice_report().is_modular);
        assert!(b.is_self_dual());
        assert_eq!(b.count_maximal_chains(0, 7).unwrap(), BigUint::from(6u32));
        assert_eq!(b.join(1, 2), Some(3));
        assert_eq!(b.meet(3, 6), Some(2));
        assert_eq!(b.interval(1, 7).len(), 4);
        assert_eq!(b.hasse_graph().distance(0, 7), Some(3));
    }

    #[test]
    fn pentagon_is_not_modular() {
        // 0 < a < b < 1, 0 < c < 1
        let p = FinitePoset::from_covers(
            vec!["0", "a", "b", "c", "1"],
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap();
        assert!(p.is_lattice());
        assert!(!p.is_graded());
        assert!(!p.is_modular());
        assert_eq!(p.count_maximal_chains(0, 4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn non_lattice_and_non_self_dual() {
        // two minima, two maxima, complete bipartite
        let bowtie =
            FinitePoset::from_covers(vec![0, 1, 2, 3], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!bowtie.is_lattice());
        assert!(bowtie.is_self_dual());
        // a "Y": bottom, middle, two tops
        let y = FinitePoset::from_covers(vec![0, 1, 2, 3], &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(!y.is_self_dual());
    }

    #[test]
    fn rejects_bad_cover_lists() {
        assert!(FinitePoset::from_covers(vec![0, 1], &[(0, 1), (1, 0)]).is_err());
        assert!(FinitePoset::from_covers(vec![0, 1, 2], &[(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(FinitePoset::from_covers(vec![0, 1], &[(0, 5)]).is_err());
    }
}
