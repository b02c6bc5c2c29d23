//! The 2-cut and 3-cut joins and the K4-composition.

use thiserror::Error;

use crate::edgeset::EdgeSet;
use crate::generators;
use crate::graph::{find_bridges, CubicGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("edge index {0} out of range")]
    BadEdgeIndex(usize),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

/// A composed graph with the principal edge cuts created by the operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: CubicGraph,
    pub cuts: Vec<EdgeSet>,
}

/// Accumulates copies of operand graphs under fresh vertex labels.
struct Assembly {
    n: usize,
    edges: Vec<(usize, usize)>,
    // Input positions of the linking edges, one group per cut.
    links: Vec<Vec<usize>>,
}

impl Assembly {
    fn new() -> Self {
        Self {
            n: 0,
            edges: Vec::new(),
            links: Vec::new(),
        }
    }

    /// Copies `g` without edge `skip`; returns the vertex offset.
    fn add_without_edge(&mut self, g: &CubicGraph, skip: usize) -> usize {
        let off = self.n;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if e != skip {
                self.edges.push((u + off, v + off));
            }
        }
        self.n += g.n();
        off
    }

    /// Copies `g` without vertex `skip`; returns the new labels of its
    /// neighbours in ascending incident-edge order.
    fn add_without_vertex(&mut self, g: &CubicGraph, skip: usize) -> [usize; 3] {
        let off = self.n;
        let label = |v: usize| off + v - usize::from(v > skip);
        for &(u, v) in g.edges() {
            if u != skip && v != skip {
                self.edges.push((label(u), label(v)));
            }
        }
        self.n += g.n() - 1;
        g.neighbors(skip).map(label)
    }

    fn link(&mut self, group: &[(usize, usize)]) {
        let start = self.edges.len();
        self.edges.extend_from_slice(group);
        self.links.push((start..self.edges.len()).collect());
    }

    fn finish(self) -> Composition {
        let (graph, map) = CubicGraph::from_edges_with_map(self.n, &self.edges)
            .expect("composition of cubic graphs is cubic");
        let cuts = self
            .links
            .iter()
            .map(|group| EdgeSet::from_indices(graph.m(), group.iter().map(|&p| map[p])))
            .collect();
        Composition { graph, cuts }
    }
}

/// Deletes `e1 = u1v1` from `g1` and `e2 = u2v2` from `g2` (endpoints in
/// ascending order) and adds `u1u2`, `v1v2`. Vertices of `g2` are shifted by
/// `g1.n()`. The single recorded cut is the two new edges.
pub fn two_cut_join(
    g1: &CubicGraph,
    e1: usize,
    g2: &CubicGraph,
    e2: usize,
) -> Result<Composition, CompositionError> {
    if e1 >= g1.m() {
        return Err(CompositionError::BadEdgeIndex(e1));
    }
    if e2 >= g2.m() {
        return Err(CompositionError::BadEdgeIndex(e2));
    }
    let mut asm = Assembly::new();
    let (u1, v1) = g1.edge(e1);
    let (u2, v2) = g2.edge(e2);
    asm.add_without_edge(g1, e1);
    let off = asm.add_without_edge(g2, e2);
    asm.link(&[(u1, u2 + off), (v1, v2 + off)]);
    Ok(asm.finish())
}

/// Deletes `v1` from `g1` and `v2` from `g2` and joins their former
/// neighbours pairwise, both listed in ascending incident-edge order. The
/// recorded cut is the three new edges.
pub fn three_cut_join(
    g1: &CubicGraph,
    v1: usize,
    g2: &CubicGraph,
    v2: usize,
) -> Result<Composition, CompositionError> {
    if v1 >= g1.n() {
        return Err(CompositionError::BadVertex(v1));
    }
    if v2 >= g2.n() {
        return Err(CompositionError::BadVertex(v2));
    }
    let mut asm = Assembly::new();
    let a = asm.add_without_vertex(g1, v1);
    let b = asm.add_without_vertex(g2, v2);
    asm.link(&[(a[0], b[0]), (a[1], b[1]), (a[2], b[2])]);
    Ok(asm.finish())
}

/// Replaces the four vertices of K4 by the given blocks, each with one
/// distinguished vertex deleted. Writing `a_i, b_i, c_i` for the neighbours
/// of block `i`'s deleted vertex (ascending incident-edge order), the linking
/// edges are `a1a3, b1a4, c1c2, b2c4, a2c3, b3b4`. One cut is recorded per
/// block: the three linking edges leaving it.
pub fn k4_composition(blocks: [(&CubicGraph, usize); 4]) -> Result<Composition, CompositionError> {
    for &(g, v) in &blocks {
        if v >= g.n() {
            return Err(CompositionError::BadVertex(v));
        }
    }
    let mut asm = Assembly::new();
    let ends: Vec<[usize; 3]> = blocks
        .iter()
        .map(|&(g, v)| asm.add_without_vertex(g, v))
        .collect();
    let (a, b, c) = (|i: usize| ends[i - 1][0], |i: usize| ends[i - 1][1], |i: usize| ends[i - 1][2]);
    let linking = [
        (a(1), a(3)),
        (b(1), a(4)),
        (c(1), c(2)),
        (b(2), c(4)),
        (a(2), c(3)),
        (b(3), b(4)),
    ];
    let start = asm.edges.len();
    asm.edges.extend_from_slice(&linking);
    // Linking edges leaving each block, by position in `linking`.
    const BY_BLOCK: [[usize; 3]; 4] = [[0, 1, 2], [2, 3, 4], [0, 4, 5], [1, 3, 5]];
    for group in BY_BLOCK {
        asm.links.push(group.iter().map(|&k| start + k).collect());
    }
    Ok(asm.finish())
}

/// K4-composition of two Petersen graphs and two theta graphs, each at
/// vertex 0: a simple bridgeless cubic graph on 20 vertices.
pub fn tau5odd_example() -> CubicGraph {
    let p = generators::petersen();
    let t = generators::theta();
    let g = k4_composition([(&p, 0), (&p, 0), (&t, 0), (&t, 0)])
        .expect("vertex 0 exists in every block")
        .graph;
    assert_eq!((g.n(), g.m()), (20, 30));
    assert!(g.is_simple());
    assert!(find_bridges(&g).is_empty());
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cyclic_connectivity_at_least;

    fn is_edge_cut(g: &CubicGraph, cut: &EdgeSet) -> bool {
        g.components_with(Some(&cut.complement())).0 > 1
    }

    #[test]
    fn two_cut_join_shapes() {
        let p = generators::petersen();
        let joined = two_cut_join(&p, 0, &p, 0).unwrap();
        assert_eq!(joined.graph.n(), 20);
        assert_eq!(joined.cuts[0].len(), 2);
        assert!(is_edge_cut(&joined.graph, &joined.cuts[0]));
        assert!(find_bridges(&joined.graph).is_empty());
        assert!(!cyclic_connectivity_at_least(&joined.graph, 3).unwrap());
        let k = generators::k4();
        for e1 in 0..6 {
            for e2 in 0..6 {
                let j = two_cut_join(&k, e1, &k, e2).unwrap();
                assert_eq!(j.graph.n(), 8);
                assert!(!cyclic_connectivity_at_least(&j.graph, 3).unwrap());
            }
        }
        assert_eq!(two_cut_join(&k, 6, &k, 0), Err(CompositionError::BadEdgeIndex(6)));
    }

    #[test]
    fn three_cut_join_shapes() {
        let p = generators::petersen();
        let j = three_cut_join(&p, 0, &generators::k4(), 0).unwrap();
        assert_eq!(j.graph.n(), 12);
        // Contracting the triangle gives back Petersen, so a triangle exists.
        assert_eq!(j.graph.girth(), Some(3));
        assert!(find_bridges(&j.graph).is_empty());
        let j = three_cut_join(&p, 3, &generators::k33(), 4).unwrap();
        assert_eq!(j.graph.n(), 14);
        assert_eq!(j.cuts[0].len(), 3);
        assert!(is_edge_cut(&j.graph, &j.cuts[0]));
        assert!(find_bridges(&j.graph).is_empty());
        // Joining with theta subdivides nothing: the theta side is one vertex.
        let t = three_cut_join(&p, 0, &generators::theta(), 0).unwrap();
        assert_eq!(t.graph.n(), 10);
        assert!(crate::graph::is_isomorphic(&t.graph, &p));
        assert_eq!(three_cut_join(&p, 10, &p, 0), Err(CompositionError::BadVertex(10)));
    }

    #[test]
    fn k4_composition_shapes() {
        let g = tau5odd_example();
        assert_eq!(g.n(), 20);
        let k = generators::k4();
        let c = k4_composition([(&k, 0), (&k, 1), (&k, 2), (&k, 3)]).unwrap();
        assert_eq!(c.graph.n(), 12);
        assert_eq!(c.cuts.len(), 4);
        for cut in &c.cuts {
            assert_eq!(cut.len(), 3);
            assert!(is_edge_cut(&c.graph, cut));
        }
        // Every linking edge lies in exactly two block cuts.
        let mut total = c.graph.empty_edge_set();
        for cut in &c.cuts {
            total.union_with(cut);
        }
        assert_eq!(total.len(), 6);
    }

    #[test]
    fn tau5odd_cuts_match_blocks() {
        let p = generators::petersen();
        let t = generators::theta();
        let c = k4_composition([(&p, 0), (&p, 0), (&t, 0), (&t, 0)]).unwrap();
        // The theta blocks collapse to single vertices 18 and 19.
        for (cut, v) in c.cuts[2..].iter().zip([18, 19]) {
            let at_v = EdgeSet::from_indices(c.graph.m(), c.graph.incident(v));
            assert_eq!(cut, &at_v);
        }
    }

    #[test]
    fn joins_of_random_bridgeless_graphs_stay_bridgeless() {
        for seed in 0..40 {
            let g1 = generators::random_bridgeless_cubic(8, seed).unwrap();
            let g2 = generators::random_bridgeless_cubic(10, seed + 500).unwrap();
            let j = three_cut_join(&g1, seed as usize % 8, &g2, seed as usize % 10).unwrap();
            assert!(find_bridges(&j.graph).is_empty());
            let j = two_cut_join(&g1, seed as usize % 12, &g2, seed as usize % 15).unwrap();
            assert!(find_bridges(&j.graph).is_empty());
        }
    }
}
