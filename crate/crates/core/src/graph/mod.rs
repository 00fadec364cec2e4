//! Labeled simple graphs and the families they are built from.
//!
//! Every family (paths, cycles, stars, complete graphs, circulants, cubic
//! circulants, the four ladder families and disjoint unions) is constructed
//! into the same [`Graph`] value. Vertices are 0-based internally; labels are
//! the 1-based display names (`x1`, `y3`, ...) used in fixtures and output.

mod build;
mod decompose;
mod iso;
mod spec;

pub use build::{build_graph, ladder_position, Rail};
pub use decompose::{decompose_cubic_circulant, validate_report, DecompositionReport, Parity};
pub use iso::{is_isomorphic, ISOMORPHISM_VERTEX_LIMIT};
pub use spec::{GraphSpec, LadderFamily};

use std::collections::HashSet;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("edge {{{0}, {1}}} is a self-loop or out of range")]
    InvalidEdge(usize, usize),
    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),
    #[error("cannot parse graph spec `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("graphs with {0} vertices are too large for exact isomorphism (limit {ISOMORPHISM_VERTEX_LIMIT})")]
    TooLargeForIsomorphism(usize),
    #[error("decomposition of C_{order}({a},{n}) contradicts the claimed structure: {detail}")]
    DecompositionMismatch { order: usize, a: usize, n: usize, detail: String },
}

/// An undirected simple graph with adjacency bitsets and unique vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Graph { adjacency: vec![VertexSet::EMPTY; labels.len()], labels })
    }

    /// Graph on the given labels with the given edges (duplicates collapse).
    pub fn from_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::with_labels(labels)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Unlabeled convenience constructor; vertices are named `x1..xn`.
    pub fn from_edge_list(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        Self::from_edges((1..=n).map(|i| format!("x{i}")), edges)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.num_vertices();
        if u == v || u >= n || v >= n {
            return Err(GraphError::InvalidEdge(u, v));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.num_vertices())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted (descending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.num_vertices()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first().map(|a| a.len())?;
        self.adjacency.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(|a| a.is_empty())
    }

    /// Subgraph induced on `vertices`, keeping the original labels and relative order.
    /// Indices outside the graph are ignored.
    pub fn induced_subgraph(&self, vertices: VertexSet) -> Graph {
        let keep = vertices.intersection(self.vertices());
        let old: Vec<usize> = keep.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &o) in old.iter().enumerate() {
            index[o] = new;
        }
        let adjacency = old
            .iter()
            .map(|&o| self.adjacency[o].intersection(keep).iter().map(|w| index[w]).collect())
            .collect();
        let labels = old.iter().map(|&o| self.labels[o].clone()).collect();
        Graph { adjacency, labels }
    }

    /// Vertex set of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adjacency[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() == 0 || self.component_of(0) == self.vertices()
    }

    /// Maximal connected pieces, ordered by smallest vertex, each with its induced graph.
    pub fn connected_components(&self) -> Vec<(VertexSet, Graph)> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.component_of(v);
            left = left.difference(comp);
            out.push((comp, self.induced_subgraph(comp)));
        }
        out
    }

    /// Disjoint union; labels of part `k` (1-based) get the suffix `_k`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        let total: usize = parts.iter().map(Graph::num_vertices).sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut labels = Vec::with_capacity(total);
        let mut edges = Vec::new();
        let mut offset = 0;
        for (k, part) in parts.iter().enumerate() {
            labels.extend(part.labels.iter().map(|l| format!("{l}_{}", k + 1)));
            edges.extend(part.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += part.num_vertices();
        }
        Graph::from_edges(labels, edges)
    }

    /// The same graph with one extra isolated vertex.
    pub fn with_isolated_vertex(&self, label: &str) -> Result<Graph, GraphError> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Graph::from_edges(labels, self.edges())
    }

    /// Relabel vertices by a permutation: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.num_vertices();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adjacency[perm[v]] = self.adjacency[v].iter().map(|w| perm[w]).collect();
        }
        Graph { adjacency, labels }
    }

    /// Checks the structural invariants (symmetry, no loops, unique labels).
    pub fn check_invariants(&self) -> bool {
        let n = self.num_vertices();
        let labels_unique = self.labels.iter().collect::<HashSet<_>>().len() == n;
        labels_unique
            && (0..n).all(|v| {
                let adj = self.adjacency[v];
                !adj.contains(v) && adj.is_subset(self.vertices()) && adj.iter().all(|w| self.adjacency[w].contains(v))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = cycle4();
        let adjacent = c4.induced_subgraph([0, 1].into_iter().collect());
        assert_eq!((adjacent.num_vertices(), adjacent.num_edges()), (2, 1));
        let opposite = c4.induced_subgraph([0, 2].into_iter().collect());
        assert_eq!((opposite.num_vertices(), opposite.num_edges()), (2, 0));
        assert_eq!(opposite.labels(), ["x1", "x3"]);

        let k4 = Graph::from_edge_list(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        for drop in 0..4 {
            let k3 = k4.induced_subgraph(VertexSet::full(4).without(drop));
            assert_eq!(k3.num_edges(), 3);
            assert_eq!(k3.regular_degree(), Some(2));
        }
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(
            Graph::with_labels(["a", "b", "a"]).unwrap_err(),
            GraphError::DuplicateLabel("a".into())
        );
        assert!(matches!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::InvalidEdge(1, 1))));
        assert!(matches!(Graph::from_edge_list(3, [(0, 5)]), Err(GraphError::InvalidEdge(0, 5))));
        assert!(matches!(Graph::from_edge_list(65, []), Err(GraphError::TooManyVertices(65))));
    }

    #[test]
    fn components_and_union() {
        let p2 = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let u = Graph::disjoint_union(&[p2, p3]).unwrap();
        assert!(u.check_invariants());
        let comps = u.connected_components();
        assert_eq!(comps.iter().map(|(s, _)| s.len()).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(comps[1].1.labels(), ["x1_2", "x2_2", "x3_2"]);
        assert!(!u.is_connected());
        assert!(cycle4().is_connected());
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        assert!(h.check_invariants());
        assert_eq!(h.num_edges(), 3);
        assert!(h.has_edge(3, 2) && h.has_edge(1, 0));
        assert_eq!(h.label(3), "x1");
    }
}
