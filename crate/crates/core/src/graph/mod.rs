//! The cubic multigraph model and its structural queries.

mod coloring;
mod cuts;
mod graph6;
mod iso;
mod two_factor;

use std::collections::VecDeque;

use thiserror::Error;

use crate::edgeset::EdgeSet;

pub use coloring::{is_three_edge_colorable, three_edge_coloring};
pub use cuts::{cyclic_connectivity_at_least, find_bridges};
pub use graph6::{parse_graph6, to_graph6};
pub use iso::{count_automorphisms, is_isomorphic};
pub use two_factor::{Cycle, TwoFactor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph has parallel edges between {0} and {1}; graph6 only encodes simple graphs")]
    NotSimple(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) references a vertex outside the graph")]
    VertexOutOfRange(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a perfect matching")]
    NotPerfectMatching,
    #[error("cut size bound {0} outside 1..=4")]
    InvalidCutBound(usize),
}

/// An immutable 3-regular multigraph without loops.
///
/// Edges are stored sorted by `(min endpoint, max endpoint)`, parallel edges
/// keeping their insertion order, so the same edge multiset always yields the
/// same edge indices. Parallel edges are allowed; loops are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 3]>,
}

impl CubicGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges_with_map(n, edges).map(|(g, _)| g)
    }

    /// Builds the graph and also reports, for each input edge, the index it
    /// received after canonical sorting.
    pub fn from_edges_with_map(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<(Self, Vec<usize>), GraphError> {
        let mut keyed: Vec<(usize, usize, usize)> = Vec::with_capacity(edges.len());
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            keyed.push((u.min(v), u.max(v), pos));
        }
        keyed.sort();

        let mut degree = vec![0usize; n];
        for &(u, v, _) in &keyed {
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some(vertex) = (0..n).find(|&v| degree[v] != 3) {
            return Err(GraphError::NotCubic {
                vertex,
                degree: degree[vertex],
            });
        }

        let mut map = vec![0; edges.len()];
        let mut incidence = vec![[usize::MAX; 3]; n];
        let mut fill = vec![0usize; n];
        let mut sorted = Vec::with_capacity(keyed.len());
        for (idx, &(u, v, pos)) in keyed.iter().enumerate() {
            map[pos] = idx;
            sorted.push((u, v));
            for w in [u, v] {
                incidence[w][fill[w]] = idx;
                fill[w] += 1;
            }
        }
        let g = Self {
            n,
            edges: sorted,
            incidence,
        };
        debug_assert_eq!(g.edges.len() * 2, 3 * g.n);
        Ok((g, map))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Incident edge indices of `v`, ascending. A vertex joined by parallel
    /// edges lists each of them.
    #[inline]
    pub fn incident(&self, v: usize) -> [usize; 3] {
        self.incidence[v]
    }

    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbours in ascending incident-edge order, repeated for parallel edges.
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.incidence[v].map(|e| self.other_end(e, v))
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::empty(self.m())
    }

    /// Index of some edge joining `u` and `v` (the lowest one when parallel).
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        self.incidence[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn edge_multiplicity(&self, u: usize, v: usize) -> usize {
        if u >= self.n {
            return 0;
        }
        self.incidence[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Whether `set` meets every vertex exactly once.
    pub fn is_perfect_matching(&self, set: &EdgeSet) -> bool {
        if set.width() != self.m() || set.len() * 2 != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for e in set {
            let (u, v) = self.edges[e];
            if hit[u] || hit[v] {
                return false;
            }
            hit[u] = true;
            hit[v] = true;
        }
        true
    }

    /// Component label per vertex, restricted to the edges in `keep`
    /// (all edges when `None`).
    pub(crate) fn components_with(&self, keep: Option<&EdgeSet>) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for e in self.incidence[v] {
                    if keep.is_some_and(|k| !k.contains(e)) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_with(None).0 == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle; parallel edges count as 2-cycles.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        if !self.is_simple() {
            return Some(2);
        }
        let mut dist = vec![usize::MAX; self.n];
        let mut parent_edge = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for e in self.incidence[v] {
                    if e == parent_edge[v] {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The cycle decomposition of the complement of the perfect matching `pm`.
    pub fn two_factor_of(&self, pm: &EdgeSet) -> Result<TwoFactor, GraphError> {
        TwoFactor::complement_of(self, pm)
    }

    pub fn is_petersen(&self) -> bool {
        self.n == 10 && is_isomorphic(self, &crate::generators::petersen())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn construction_sorts_edges_and_checks_degrees() {
        let (g, map) =
            CubicGraph::from_edges_with_map(4, &[(3, 2), (0, 1), (0, 2), (1, 3), (0, 3), (1, 2)])
                .unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(map, vec![5, 0, 1, 4, 2, 3]);
        assert_eq!(g.incident(2), [1, 3, 5]);
        let degree_sum: usize = (0..g.n()).map(|v| g.incident(v).len()).sum();
        assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn rejects_non_cubic_and_loops() {
        assert_eq!(
            CubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            Err(GraphError::NotCubic { vertex: 0, degree: 2 })
        );
        assert_eq!(
            CubicGraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]),
            Err(GraphError::Loop(0))
        );
    }

    #[test]
    fn parallel_edges_keep_insertion_order() {
        let (g, map) = CubicGraph::from_edges_with_map(2, &[(1, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert!(!g.is_simple());
        assert_eq!(g.edge_multiplicity(0, 1), 3);
        assert_eq!(g.girth(), Some(2));
    }

    #[test]
    fn bipartiteness() {
        assert!(generators::k33().is_bipartite());
        assert!(!generators::petersen().is_bipartite());
        assert!(generators::theta().is_bipartite());
    }

    #[test]
    fn girths() {
        assert_eq!(generators::petersen().girth(), Some(5));
        assert_eq!(generators::k4().girth(), Some(3));
        assert_eq!(generators::k33().girth(), Some(4));
    }

    #[test]
    fn petersen_recognition() {
        assert!(generators::petersen().is_petersen());
        assert!(!generators::prism(5).unwrap().is_petersen());
    }
}
