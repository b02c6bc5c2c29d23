use serde::Serialize;

use super::{CubicGraph, GraphError};
use crate::edgeset::EdgeSet;

/// One cycle of a 2-factor. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Number of edges walked from position `from` to position `to`
    /// following the orientation.
    pub fn forward_distance(&self, from: usize, to: usize) -> usize {
        (to + self.len() - from) % self.len()
    }

    /// The two alternating edge classes of an even cycle; the first contains
    /// `edges[0]`.
    pub fn alternating_classes(&self) -> (Vec<usize>, Vec<usize>) {
        let even = self.edges.iter().step_by(2).copied().collect();
        let odd = self.edges.iter().skip(1).step_by(2).copied().collect();
        (even, odd)
    }

    /// The unique perfect matching of the path left after deleting the
    /// vertex at `pos` (odd cycles only).
    pub fn path_matching_without(&self, pos: usize) -> Vec<usize> {
        debug_assert!(self.is_odd());
        let len = self.len();
        // Path runs pos+1, pos+2, ..., pos-1; take its 1st, 3rd, ... edges.
        (0..(len - 1) / 2)
            .map(|k| self.edges[(pos + 1 + 2 * k) % len])
            .collect()
    }
}

/// The cycle decomposition of `E(G) \ M` for a perfect matching `M`.
///
/// Each cycle starts at its minimum vertex and proceeds toward the smaller of
/// that vertex's two cycle neighbours; cycles are listed by minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    pub matching: EdgeSet,
    pub cycles: Vec<Cycle>,
    #[serde(skip)]
    location: Vec<(usize, usize)>,
}

impl TwoFactor {
    pub(crate) fn complement_of(g: &CubicGraph, pm: &EdgeSet) -> Result<Self, GraphError> {
        if !g.is_perfect_matching(pm) {
            return Err(GraphError::NotPerfectMatching);
        }
        let n = g.n();
        let on_cycle = |v: usize| -> [usize; 2] {
            let mut out = [usize::MAX; 2];
            let mut k = 0;
            for e in g.incident(v) {
                if !pm.contains(e) {
                    out[k] = e;
                    k += 1;
                }
            }
            out
        };
        let mut location = vec![(usize::MAX, usize::MAX); n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if location[start].0 != usize::MAX {
                continue;
            }
            let [e1, e2] = on_cycle(start);
            let (w1, w2) = (g.other_end(e1, start), g.other_end(e2, start));
            // Toward the smaller neighbour; ties (2-cycles) by edge index.
            let first = if (w1, e1) <= (w2, e2) { e1 } else { e2 };
            let id = cycles.len();
            let mut vertices = vec![start];
            let mut edges = vec![first];
            location[start] = (id, 0);
            let mut v = g.other_end(first, start);
            let mut via = first;
            while v != start {
                location[v] = (id, vertices.len());
                vertices.push(v);
                let [a, b] = on_cycle(v);
                let next = if a == via { b } else { a };
                edges.push(next);
                via = next;
                v = g.other_end(next, v);
            }
            cycles.push(Cycle { vertices, edges });
        }
        Ok(Self {
            matching: pm.clone(),
            cycles,
            location,
        })
    }

    /// `(cycle id, position)` of a vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        self.location[v]
    }

    pub fn odd_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&c| self.cycles[c].is_odd()).collect()
    }

    pub fn even_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&c| !self.cycles[c].is_odd()).collect()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchings::enumerate_perfect_matchings;

    fn check_partition(g: &CubicGraph, tf: &TwoFactor) {
        let mut seen = vec![false; g.n()];
        let mut edges = g.empty_edge_set();
        for c in &tf.cycles {
            for (i, &v) in c.vertices.iter().enumerate() {
                assert!(!seen[v]);
                seen[v] = true;
                let e = c.edges[i];
                let w = c.vertices[(i + 1) % c.len()];
                let (a, b) = g.edge(e);
                assert!((a, b) == (v.min(w), v.max(w)));
                edges.insert(e);
            }
            assert_eq!(c.vertices[0], *c.vertices.iter().min().unwrap());
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(edges, tf.matching.complement());
    }

    #[test]
    fn petersen_two_factors_are_two_pentagons() {
        let g = generators::petersen();
        for pm in enumerate_perfect_matchings(&g).matchings() {
            let tf = g.two_factor_of(pm).unwrap();
            assert_eq!(tf.lengths(), vec![5, 5]);
            assert_eq!(tf.odd_cycles().len(), 2);
            check_partition(&g, &tf);
        }
    }

    #[test]
    fn cube_with_rung_matching_gives_two_squares() {
        let g = generators::prism(4).unwrap();
        let rungs = EdgeSet::from_indices(g.m(), (0..4).map(|i| g.find_edge(i, i + 4).unwrap()));
        let tf = g.two_factor_of(&rungs).unwrap();
        assert_eq!(tf.lengths(), vec![4, 4]);
        assert!(tf.odd_cycles().is_empty());
        assert_eq!(tf.cycles[0].vertices, vec![0, 1, 2, 3]);
        check_partition(&g, &tf);
    }

    #[test]
    fn orientation_goes_toward_smaller_neighbour() {
        let g = generators::petersen();
        let spokes = EdgeSet::from_indices(g.m(), (0..5).map(|i| g.find_edge(i, i + 5).unwrap()));
        let tf = g.two_factor_of(&spokes).unwrap();
        assert_eq!(tf.cycles[0].vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(tf.cycles[1].vertices, vec![5, 7, 9, 6, 8]);
    }

    #[test]
    fn rejects_non_matching() {
        let g = generators::k4();
        let bad = EdgeSet::from_indices(6, [0, 1]);
        assert_eq!(g.two_factor_of(&bad), Err(GraphError::NotPerfectMatching));
    }

    #[test]
    fn every_matching_of_random_graphs_decomposes() {
        for seed in 0..30 {
            let g = generators::random_bridgeless_cubic(12, seed).unwrap();
            for pm in enumerate_perfect_matchings(&g).matchings() {
                check_partition(&g, &g.two_factor_of(pm).unwrap());
            }
        }
    }

    #[test]
    fn path_matching_skips_deleted_vertex() {
        let g = generators::petersen();
        let spokes = EdgeSet::from_indices(g.m(), (0..5).map(|i| g.find_edge(i, i + 5).unwrap()));
        let tf = g.two_factor_of(&spokes).unwrap();
        let c = &tf.cycles[0];
        // Removing vertex 0 leaves the path 1-2-3-4: edges 1-2 and 3-4.
        let pm: Vec<_> = c.path_matching_without(0).iter().map(|&e| g.edge(e)).collect();
        assert_eq!(pm, vec![(1, 2), (3, 4)]);
    }
}
