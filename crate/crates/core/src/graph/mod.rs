//! Oriented graphs, simple graphs and their metric primitives.

mod enumerate;
mod generators;
pub(crate) mod metrics;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

pub use enumerate::{
    all_oriented_graphs, all_simple_graphs, canonical_oriented_code, canonical_simple_code,
    oriented_graphs_up_to_iso, simple_graphs_up_to_iso,
};
pub use generators::{
    directed_cycle, directed_path, random_acyclic, random_oriented, random_with_min_girth,
    transitive_tournament,
};
pub use metrics::{
    dipath_conflict_graph, directed_girth, distance, distances_from, is_kdipath_clique,
    longest_directed_path_vertices, power_graph, shortest_cycle, topological_order,
    weak_diameter, weak_distance,
};

/// A non-negative distance, or infinity when no walk exists.
///
/// Variant order makes every finite value compare below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Distance::Infinite)
    }
}

impl From<Option<usize>> for Distance {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Distance::Infinite, Distance::Finite)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// A loop-free digraph without 2-cycles on vertices `0..n`.
///
/// Immutable once built. Arcs are kept as sorted adjacency lists plus bit rows
/// for constant-time arc tests.
#[derive(Clone, Debug)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    out_bits: Vec<BitSet>,
    in_bits: Vec<BitSet>,
    labels: BTreeMap<usize, String>,
}

impl PartialEq for OrientedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out && self.labels == other.labels
    }
}

impl Eq for OrientedGraph {}

impl OrientedGraph {
    /// Builds a graph, rejecting loops, digons and out-of-range endpoints.
    /// Repeated arcs collapse to one.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "arc ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            out[u].insert(v);
        }
        for (u, row) in out.iter().enumerate() {
            for &v in row {
                if out[v].contains(&u) {
                    return Err(Error::input(format!("digon between {u} and {v}")));
                }
            }
        }
        let out: Vec<Vec<usize>> = out.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut inn = vec![Vec::new(); n];
        for (u, row) in out.iter().enumerate() {
            for &v in row {
                inn[v].push(u);
            }
        }
        let mut out_bits = vec![BitSet::new(n); n];
        let mut in_bits = vec![BitSet::new(n); n];
        for (u, row) in out.iter().enumerate() {
            for &v in row {
                out_bits[u].insert(v);
                in_bits[v].insert(u);
            }
        }
        Ok(OrientedGraph {
            n,
            out,
            inn,
            out_bits,
            in_bits,
            labels: BTreeMap::new(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("empty graph is oriented")
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some(&bad) = labels.keys().find(|&&v| v >= self.n) {
            return Err(Error::input(format!("label for missing vertex {bad}")));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_bits[u].contains(v)
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_row(&self, v: usize) -> &BitSet {
        &self.out_bits[v]
    }

    pub fn in_row(&self, v: usize) -> &BitSet {
        &self.in_bits[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len() + self.inn[v].len()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::input(format!("vertex {v} outside 0..{}", self.n)))
        }
    }

    /// The underlying simple graph (power graph with k = 1).
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.arcs()).expect("arcs of an oriented graph are simple edges")
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> OrientedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let arcs = vertices.iter().flat_map(|&u| {
            let index = &index;
            self.out[u]
                .iter()
                .filter(move |&&v| index[v] != usize::MAX)
                .map(move |&v| (index[u], index[v]))
        });
        OrientedGraph::new(vertices.len(), arcs.collect::<Vec<_>>())
            .expect("induced subgraph of an oriented graph")
    }

    /// The same graph with every arc reversed.
    pub fn reversed(&self) -> OrientedGraph {
        OrientedGraph::new(self.n, self.arcs().map(|(u, v)| (v, u))).expect("reversal")
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
            labels: if self.labels.is_empty() {
                None
            } else {
                Some(self.labels.clone())
            },
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph json")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: GraphJson = serde_json::from_str(s)?;
        j.try_into()
    }

    /// DOT text; labels are emitted as node attributes when present.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for (v, label) in &self.labels {
            s.push_str(&format!("  {v} [label=\"{}\"];\n", label.replace('"', "\\\"")));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Canonical JSON form: `{"n": .., "arcs": [[u,v], ..], "labels": {"id": ".."}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, String>>,
}

impl TryFrom<GraphJson> for OrientedGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let g = OrientedGraph::new(j.n, j.arcs.iter().map(|a| (a[0], a[1])))?;
        g.with_labels(j.labels.unwrap_or_default())
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "]")
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<BitSet>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut bits = vec![BitSet::new(n); n];
        for (u, row) in adj.iter().enumerate() {
            for &v in row {
                bits[u].insert(v);
            }
        }
        Ok(SimpleGraph { n, adj, bits })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        SimpleGraph::new(n, edges).expect("complete graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &BitSet {
        &self.bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn to_json(&self) -> SimpleGraphJson {
        SimpleGraphJson {
            n: self.n,
            edges: Some(self.edges().map(|(u, v)| [u, v]).collect()),
            arcs: None,
        }
    }

    /// Accepts `{"n", "edges"}`, or an oriented graph file whose arcs are read as edges.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: SimpleGraphJson = serde_json::from_str(s)?;
        let pairs = j
            .edges
            .or(j.arcs)
            .ok_or_else(|| Error::input("simple graph json needs an \"edges\" array"))?;
        SimpleGraph::new(j.n, pairs.iter().map(|e| (e[0], e[1])))
    }

    /// Chromatic number by exhaustive search over colourings with first-occurrence
    /// colour order. Intended for the small source graphs fed to reductions.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        (1..=self.n)
            .find(|&t| self.is_colourable(t))
            .expect("n colours always suffice")
    }

    pub fn is_colourable(&self, t: usize) -> bool {
        fn go(g: &SimpleGraph, t: usize, v: usize, used: usize, col: &mut Vec<usize>) -> bool {
            if v == g.n {
                return true;
            }
            for c in 0..t.min(used + 1) {
                if g.adj[v].iter().any(|&u| u < v && col[u] == c) {
                    continue;
                }
                col[v] = c;
                if go(g, t, v + 1, used.max(c + 1), col) {
                    return true;
                }
            }
            false
        }
        if self.n == 0 {
            return true;
        }
        go(self, t, 0, 0, &mut vec![usize::MAX; self.n])
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimpleGraphJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<[usize; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_digons_and_range() {
        assert!(matches!(OrientedGraph::new(2, [(0, 0)]), Err(Error::Input(_))));
        assert!(matches!(
            OrientedGraph::new(2, [(0, 1), (1, 0)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(OrientedGraph::new(2, [(0, 2)]), Err(Error::Input(_))));
    }

    #[test]
    fn json_is_sorted_and_parses_back() {
        let g = OrientedGraph::new(3, [(2, 0), (0, 1), (1, 2)]).unwrap();
        let s = g.to_json_string();
        assert_eq!(s, r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#);
        assert_eq!(OrientedGraph::from_json_str(&s).unwrap(), g);
    }

    #[test]
    fn labels_roundtrip_and_dot() {
        let labels = BTreeMap::from([(0, "a".to_string()), (1, "b".to_string())]);
        let g = OrientedGraph::new(2, [(0, 1)])
            .unwrap()
            .with_labels(labels)
            .unwrap();
        let s = g.to_json_string();
        assert!(s.contains(r#""labels":{"0":"a","1":"b"}"#));
        assert_eq!(OrientedGraph::from_json_str(&s).unwrap(), g);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph {"));
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("0 [label=\"a\"];"));
    }

    #[test]
    fn simple_graph_chromatic_numbers() {
        assert_eq!(SimpleGraph::complete(4).chromatic_number(), 4);
        let c5 = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.chromatic_number(), 3);
        assert_eq!(SimpleGraph::new(3, []).unwrap().chromatic_number(), 1);
    }

    #[test]
    fn distance_order() {
        assert!(Distance::Finite(1_000_000) < Distance::Infinite);
        assert!(Distance::Finite(2) < Distance::Finite(3));
    }
}
