//! Simple undirected graphs on `0..n` with breadth-first metrics.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertices: usize) -> Self {
        Self { adj: vec![Vec::new(); vertices] }
    }

    /// Adds `{u, v}` unless it is a loop or already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.adj[u].contains(&v) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        true
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn bfs(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0) + 1;
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    /// Largest distance over all pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.len() {
            for d in self.bfs(u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Vertices `w` with `d(u,w) + d(w,v) = d(u,v)`.
    pub fn geodesic_vertices(&self, u: usize, v: usize) -> Vec<usize> {
        let from_u = self.bfs(u);
        let from_v = self.bfs(v);
        let Some(total) = from_u[v] else {
            return Vec::new();
        };
        (0..self.len())
            .filter(|&w| matches!((from_u[w], from_v[w]), (Some(a), Some(b)) if a + b == total))
            .collect()
    }

    /// Number of shortest paths from `u` to `v`, by DP over BFS layers.
    pub fn geodesic_count(&self, u: usize, v: usize) -> BigUint {
        let dist = self.bfs(u);
        if dist[v].is_none() {
            return BigUint::zero();
        }
        let mut order: Vec<usize> = (0..self.len()).filter(|&w| dist[w].is_some()).collect();
        order.sort_by_key(|&w| dist[w]);
        let mut paths = vec![BigUint::zero(); self.len()];
        paths[u] = BigUint::one();
        for &w in &order {
            if paths[w].is_zero() {
                continue;
            }
            let here = paths[w].clone();
            for &y in &self.adj[w] {
                if dist[y] == dist[w].map(|d| d + 1) {
                    paths[y] += &here;
                }
            }
        }
        paths[v].clone()
    }
}
