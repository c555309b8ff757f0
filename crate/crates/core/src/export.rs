//! Deterministic JSON and DOT renderings of the graphs and Hasse diagrams.

use serde::Serialize;

use crate::arc_graph::{build_arc_graph, dominance_poset};
use crate::error::Result;
use crate::weak_order::{build_weak_hasse, Ground};

/// `{n, nodes, edges: [[a, b, label]]}` with nodes and edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphExport {
    pub n: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String, String)>,
    #[serde(skip)]
    directed: bool,
}

impl GraphExport {
    fn new(n: usize, mut nodes: Vec<String>, mut edges: Vec<(String, String, String)>, directed: bool) -> Self {
        nodes.sort();
        edges.sort();
        Self { n, nodes, edges, directed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export is serializable")
    }

    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{kind} G {{\n");
        for v in &self.nodes {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b, label) in &self.edges {
            out.push_str(&format!("  \"{a}\" {arrow} \"{b}\" [label=\"{label}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// `X_n`, edges labeled by the generator index.
pub fn export_arc_graph(n: usize) -> Result<GraphExport> {
    let x = build_arc_graph(n)?;
    let name = |i: usize| x.vertices()[i].to_string();
    let nodes = x.vertices().iter().map(|p| p.to_string()).collect();
    let edges = x
        .labeled_edges()
        .iter()
        .map(|&(u, v, i)| {
            let (a, b) = (name(u), name(v));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            (a, b, i.to_string())
        })
        .collect();
    Ok(GraphExport::new(n, nodes, edges, false))
}

/// Hasse diagram of `Weak(U_n)`, each cover `π → πσ_i` labeled `i`.
pub fn export_weak_u(n: usize) -> Result<GraphExport> {
    let poset = build_weak_hasse(n, Ground::U)?;
    let el = poset.elements();
    let nodes = el.iter().map(|p| p.to_string()).collect();
    let edges = poset
        .covers()
        .into_iter()
        .map(|(lo, hi)| {
            let i = (1..n).find(|&i| el[lo].at(i) != el[hi].at(i)).unwrap_or(0);
            (el[lo].to_string(), el[hi].to_string(), i.to_string())
        })
        .collect();
    Ok(GraphExport::new(n, nodes, edges, true))
}

/// Hasse diagram of the dominance box, each cover labeled by the first
/// coordinate whose prefix sum changes.
pub fn export_dominance(n: usize) -> Result<GraphExport> {
    let poset = dominance_poset(n)?;
    let el = poset.elements();
    let nodes = el.iter().map(|v| v.to_string()).collect();
    let edges = poset
        .covers()
        .into_iter()
        .map(|(lo, hi)| {
            let (a, b) = (el[lo].prefix_sums(), el[hi].prefix_sums());
            let i = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
            (el[lo].to_string(), el[hi].to_string(), i.to_string())
        })
        .collect();
    Ok(GraphExport::new(n, nodes, edges, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_determinism() {
        let x4 = export_arc_graph(4).unwrap();
        assert_eq!((x4.nodes.len(), x4.edges.len()), (16, 20));
        assert_eq!(x4, export_arc_graph(4).unwrap());
        assert_eq!(export_weak_u(4).unwrap().nodes.len(), 14);
        let d3 = export_dominance(3).unwrap();
        // prefix sums make the 3×2 box a chain here; X_3 adds one wrap edge
        assert_eq!((d3.nodes.len(), d3.edges.len()), (6, 5));
        assert!(x4.to_dot().starts_with("graph G {"));
        assert!(d3.to_dot().contains("->"));
        let json: serde_json::Value = serde_json::from_str(&x4.to_json()).unwrap();
        assert_eq!(json["n"], 4);
        assert_eq!(json["edges"][0].as_array().unwrap().len(), 3);
    }
}
