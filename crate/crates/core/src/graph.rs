//! Finite simple graphs and digraphs with stable vertex ids, and the
//! one-step minor operations: edge deletion, edge contraction, deletion of an
//! isolated vertex.
//!
//! Undirected graphs are stored as symmetric digraphs (both orientations of
//! every edge are present), so the game engine can treat both kinds of graph
//! uniformly. Vertex ids survive minor operations unchanged; contraction
//! merges an edge into its lower endpoint and leaves a gap at the higher one.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by graph construction, parsing, and minor operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A line of edge-list input could not be parsed.
    Parse { line: usize, reason: String },
    /// Self-loops are rejected everywhere.
    SelfLoop { vertex: u32 },
    /// Malformed graph6 input.
    Graph6(String),
    NoSuchVertex(u32),
    NoSuchEdge(u32, u32),
    /// The operation is defined for undirected graphs only.
    DirectedUnsupported(&'static str),
    /// A [`ContractionMap`] does not describe a contraction of its source.
    InvalidContraction(&'static str),
    /// A brute-force size guard was exceeded.
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Parse { line, reason } => write!(f, "parse error on line {line}: {reason}"),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex} rejected"),
            GraphError::Graph6(reason) => write!(f, "invalid graph6: {reason}"),
            GraphError::NoSuchVertex(v) => write!(f, "vertex {v} is not in the graph"),
            GraphError::NoSuchEdge(u, v) => write!(f, "edge ({u},{v}) is not in the graph"),
            GraphError::DirectedUnsupported(op) => {
                write!(f, "{op} is not supported for directed graphs")
            }
            GraphError::InvalidContraction(reason) => {
                write!(f, "invalid contraction map: {reason}")
            }
            GraphError::TooLarge {
                what,
                limit,
                actual,
            } => write!(f, "{what} limited to {limit}, got {actual}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple graph or digraph over dense non-negative vertex ids.
///
/// Invariants enforced by construction:
/// - no self-loops,
/// - the arc set of an undirected graph is symmetric,
/// - every arc endpoint is a vertex of the graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    directed: bool,
    vertices: BTreeSet<u32>,
    arcs: BTreeSet<(u32, u32)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, V={:?}, E={:?})",
            if self.directed { "directed" } else { "undirected" },
            self.vertices,
            self.edge_list()
        )
    }
}

impl Graph {
    /// An empty graph with no vertices.
    pub fn new(directed: bool) -> Graph {
        Graph {
            directed,
            vertices: BTreeSet::new(),
            arcs: BTreeSet::new(),
        }
    }

    /// A graph with vertex set `{0, …, n-1}` and no edges.
    pub fn with_vertex_count(directed: bool, n: u32) -> Graph {
        Graph {
            directed,
            vertices: (0..n).collect(),
            arcs: BTreeSet::new(),
        }
    }

    /// Builds a graph on `{0, …, n-1}` from an edge slice. Duplicates collapse.
    pub fn from_edges(directed: bool, n: u32, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut g = Graph::with_vertex_count(directed, n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: u32) {
        self.vertices.insert(v);
    }

    /// Inserts the edge `(u,v)`; both orientations when undirected.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if !self.vertices.contains(&u) {
            return Err(GraphError::NoSuchVertex(u));
        }
        if !self.vertices.contains(&v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        self.arcs.insert((u, v));
        if !self.directed {
            self.arcs.insert((v, u));
        }
        Ok(())
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges; an undirected edge counts once.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.arcs.len()
        } else {
            self.arcs.len() / 2
        }
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    pub fn max_vertex_id(&self) -> Option<u32> {
        self.vertices.iter().next_back().copied()
    }

    /// All stored arcs. For an undirected graph each edge appears twice.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.arcs.iter().copied()
    }

    /// Edges in canonical form: every arc when directed, `u < v` otherwise.
    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(u, v)| self.directed || u < v)
            .collect()
    }

    pub fn is_edgeless(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Out-neighbors of `v`, ascending. For undirected graphs these are all
    /// neighbors.
    pub fn neighbors(&self, v: u32) -> Result<Vec<u32>, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        Ok(self
            .arcs
            .range((v, 0)..=(v, u32::MAX))
            .map(|&(_, w)| w)
            .collect())
    }

    fn degree(&self, v: u32) -> usize {
        self.arcs.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Removes one edge, keeping the vertex set.
    pub fn delete_edge(&self, u: u32, v: u32) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.arcs.remove(&(u, v));
        if !self.directed {
            g.arcs.remove(&(v, u));
        }
        Ok(g)
    }

    /// Removes a vertex together with all incident edges. Remaining ids are
    /// unchanged.
    pub fn delete_vertex(&self, v: u32) -> Result<Graph, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        let mut g = Graph::new(self.directed);
        g.vertices = self.vertices.iter().copied().filter(|&w| w != v).collect();
        g.arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        Ok(g)
    }

    /// Contracts the edge `(u,v)` of an undirected graph.
    ///
    /// The merged vertex keeps the id `min(u,v)`; all other ids are preserved.
    /// The result is simple again: the loop arising from the contracted edge
    /// is discarded and parallel edges are merged.
    pub fn contract_edge(&self, u: u32, v: u32) -> Result<(Graph, ContractionMap), GraphError> {
        if self.directed {
            return Err(GraphError::DirectedUnsupported("edge contraction"));
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let merged = u.min(v);
        let removed = u.max(v);
        let map = |x: u32| if x == removed { merged } else { x };
        let mut g = Graph::new(false);
        g.vertices = self
            .vertices
            .iter()
            .copied()
            .filter(|&w| w != removed)
            .collect();
        for &(a, b) in &self.arcs {
            let (a, b) = (map(a), map(b));
            if a != b {
                g.arcs.insert((a, b));
            }
        }
        let cm = ContractionMap {
            source: self.clone(),
            target: g.clone(),
            contracted_edge: (u, v),
            merged_vertex: merged,
        };
        Ok((g, cm))
    }

    /// Every graph reachable by a single minor operation, with the operation
    /// that produces it. Order: edge deletions, edge contractions (undirected
    /// only), isolated-vertex deletions, each ascending.
    pub fn one_step_minors(&self) -> Vec<(MinorOperation, Graph)> {
        let mut out = Vec::new();
        for (u, v) in self.edge_list() {
            let g = self.delete_edge(u, v).expect("listed edge exists");
            out.push((MinorOperation::DeleteEdge(u, v), g));
        }
        if !self.directed {
            for (u, v) in self.edge_list() {
                let (g, _) = self.contract_edge(u, v).expect("listed edge exists");
                out.push((MinorOperation::ContractEdge(u, v), g));
            }
        }
        for v in self.vertices() {
            if self.degree(v) == 0 {
                let g = self.delete_vertex(v).expect("listed vertex exists");
                out.push((MinorOperation::DeleteIsolatedVertex(v), g));
            }
        }
        out
    }

    /// True when `self` is a subgraph of `h` under the identity labeling.
    pub fn is_labeled_subgraph_of(&self, h: &Graph) -> bool {
        self.directed == h.directed
            && self.vertices.is_subset(&h.vertices)
            && self.arcs.is_subset(&h.arcs)
    }
}

/// One application of a minor operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MinorOperation {
    DeleteEdge(u32, u32),
    ContractEdge(u32, u32),
    DeleteIsolatedVertex(u32),
}

impl fmt::Display for MinorOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOperation::DeleteEdge(u, v) => write!(f, "delete_edge({u},{v})"),
            MinorOperation::ContractEdge(u, v) => write!(f, "contract_edge({u},{v})"),
            MinorOperation::DeleteIsolatedVertex(v) => write!(f, "delete_isolated_vertex({v})"),
        }
    }
}

/// The vertex map induced by contracting one edge: both endpoints go to the
/// merged vertex, everything else is fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMap {
    pub source: Graph,
    pub target: Graph,
    pub contracted_edge: (u32, u32),
    pub merged_vertex: u32,
}

impl ContractionMap {
    /// Applies the vertex map.
    pub fn apply(&self, v: u32) -> u32 {
        let (a, b) = self.contracted_edge;
        if v == a || v == b {
            self.merged_vertex
        } else {
            v
        }
    }

    /// Rechecks the defining properties: the contracted edge is a source
    /// edge, the merged id is its minimum, and re-contracting the source
    /// reproduces the target exactly.
    pub fn validate(&self) -> Result<(), GraphError> {
        let (a, b) = self.contracted_edge;
        if self.merged_vertex != a.min(b) {
            return Err(GraphError::InvalidContraction(
                "merged vertex is not the lower endpoint",
            ));
        }
        let (recomputed, _) = self.source.contract_edge(a, b)?;
        if recomputed != self.target {
            return Err(GraphError::InvalidContraction(
                "target does not match the contraction of the source",
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k2() -> Graph {
        Graph::from_edges(false, 2, &[(0, 1)]).unwrap()
    }

    fn c3() -> Graph {
        Graph::from_edges(false, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn path(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(false, n, &edges).unwrap()
    }

    #[test]
    fn undirected_edges_are_symmetric() {
        let g = k2();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn self_loop_rejected() {
        let mut g = Graph::with_vertex_count(false, 2);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop { vertex: 1 }));
    }

    #[test]
    fn neighbors_on_triangle_and_sinks() {
        assert_eq!(c3().neighbors(0).unwrap(), vec![1, 2]);
        let single = Graph::with_vertex_count(false, 1);
        assert!(single.neighbors(0).unwrap().is_empty());
        let dpath = Graph::from_edges(true, 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(dpath.neighbors(2).unwrap().is_empty());
        assert_eq!(dpath.neighbors(0).unwrap(), vec![1]);
        assert_eq!(single.neighbors(5), Err(GraphError::NoSuchVertex(5)));
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        let g = k2().delete_edge(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_edgeless());

        let g = c3().delete_edge(0, 1).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 2), (1, 2)]);

        let two_cycle = Graph::from_edges(true, 2, &[(0, 1), (1, 0)]).unwrap();
        let g = two_cycle.delete_edge(0, 1).unwrap();
        assert_eq!(g.edge_list(), vec![(1, 0)]);

        assert_eq!(
            k2().delete_edge(1, 0).unwrap().edge_count(),
            0,
            "either orientation names the undirected edge"
        );
        assert!(matches!(
            path(2).delete_edge(0, 5),
            Err(GraphError::NoSuchEdge(0, 5))
        ));
    }

    #[test]
    fn delete_vertex_examples() {
        let g = k2().delete_vertex(0).unwrap();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![1]);
        assert!(g.is_edgeless());

        let g = path(3).delete_vertex(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_edgeless());

        let mut with_isolated = c3();
        with_isolated.add_vertex(3);
        let g = with_isolated.delete_vertex(3).unwrap();
        assert_eq!(g, c3());
    }

    #[test]
    fn contract_k2_discards_loop() {
        let (g, cm) = k2().contract_edge(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_edgeless());
        assert_eq!(cm.merged_vertex, 0);
        assert_eq!(cm.apply(1), 0);
        assert_eq!(cm.apply(0), 0);
        cm.validate().unwrap();
    }

    #[test]
    fn contract_triangle_merges_parallel_edges() {
        let (g, cm) = c3().contract_edge(0, 1).unwrap();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.edge_list(), vec![(0, 2)]);
        cm.validate().unwrap();
    }

    #[test]
    fn contract_path_inherits_neighbors() {
        let (g, _) = path(4).contract_edge(1, 2).unwrap();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 3)]);
    }

    #[test]
    fn contract_rejects_directed_and_missing() {
        let d = Graph::from_edges(true, 2, &[(0, 1)]).unwrap();
        assert!(matches!(
            d.contract_edge(0, 1),
            Err(GraphError::DirectedUnsupported(_))
        ));
        assert!(matches!(
            path(3).contract_edge(0, 2),
            Err(GraphError::NoSuchEdge(0, 2))
        ));
    }

    #[test]
    fn one_step_minors_of_k2() {
        let minors = k2().one_step_minors();
        assert_eq!(minors.len(), 2);
        assert_eq!(minors[0].0, MinorOperation::DeleteEdge(0, 1));
        assert_eq!(minors[0].1.vertex_count(), 2);
        assert!(minors[0].1.is_edgeless());
        assert_eq!(minors[1].0, MinorOperation::ContractEdge(0, 1));
        assert_eq!(minors[1].1.vertex_count(), 1);
    }

    #[test]
    fn one_step_minors_of_single_vertex() {
        let g = Graph::with_vertex_count(false, 1);
        let minors = g.one_step_minors();
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0].0, MinorOperation::DeleteIsolatedVertex(0));
        assert_eq!(minors[0].1.vertex_count(), 0);
    }

    #[test]
    fn one_step_minors_of_triangle() {
        let minors = c3().one_step_minors();
        assert_eq!(minors.len(), 6);
        let deletions = minors
            .iter()
            .filter(|(op, _)| matches!(op, MinorOperation::DeleteEdge(_, _)))
            .count();
        let contractions = minors
            .iter()
            .filter(|(op, _)| matches!(op, MinorOperation::ContractEdge(_, _)))
            .count();
        assert_eq!((deletions, contractions), (3, 3));
    }

    #[test]
    fn labeled_subgraph_checks() {
        assert!(k2().is_labeled_subgraph_of(&c3()));
        assert!(c3().is_labeled_subgraph_of(&c3()));
        assert!(!c3().is_labeled_subgraph_of(&k2()));
        let d = Graph::from_edges(true, 2, &[(0, 1)]).unwrap();
        assert!(!d.is_labeled_subgraph_of(&k2()));
    }
}
