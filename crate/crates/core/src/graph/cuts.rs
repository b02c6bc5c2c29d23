use super::{CubicGraph, GraphError};
use crate::edgeset::EdgeSet;

/// Edges whose removal disconnects their component (lowlink search; parallel
/// edges are never bridges).
pub fn find_bridges(g: &CubicGraph) -> EdgeSet {
    let n = g.n();
    let mut bridges = g.empty_edge_set();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    // (vertex, edge used to enter it, next incidence slot)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, via, slot) = *top;
            if slot < 3 {
                top.2 += 1;
                let e = g.incident(v)[slot];
                if e == via {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.insert(via);
                    }
                }
            }
        }
    }
    bridges
}

/// Whether no edge cut with fewer than `k` edges separates two parts that
/// both contain a cycle. Exhaustive over all edge subsets of size `< k`.
pub fn cyclic_connectivity_at_least(g: &CubicGraph, k: usize) -> Result<bool, GraphError> {
    if !(1..=4).contains(&k) {
        return Err(GraphError::InvalidCutBound(k));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let m = g.m();
    let mut chosen = Vec::with_capacity(k);
    for size in 1..k {
        if has_cyclic_cut(g, m, size, 0, &mut chosen) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_cyclic_cut(
    g: &CubicGraph,
    m: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == size {
        let keep = EdgeSet::from_indices(m, 0..m).difference(&EdgeSet::from_indices(
            m,
            chosen.iter().copied(),
        ));
        return cyclic_components(g, &keep) >= 2;
    }
    for e in start..m {
        chosen.push(e);
        let found = has_cyclic_cut(g, m, size, e + 1, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Number of components of `(V, keep)` that contain a cycle.
fn cyclic_components(g: &CubicGraph, keep: &EdgeSet) -> usize {
    let (count, comp) = g.components_with(Some(keep));
    if count < 2 {
        return 0;
    }
    let mut vertices = vec![0usize; count];
    let mut edges = vec![0usize; count];
    for v in 0..g.n() {
        vertices[comp[v]] += 1;
    }
    for e in keep {
        edges[comp[g.edge(e).0]] += 1;
    }
    (0..count).filter(|&c| edges[c] >= vertices[c]).count()
}
