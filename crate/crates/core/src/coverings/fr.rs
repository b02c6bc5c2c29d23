use serde::Serialize;

use super::CoveringError;
use crate::edgeset::EdgeSet;
use crate::graph::CubicGraph;
use crate::matchings::PmCatalog;

/// Edges split by how many of three perfect matchings contain them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrStructure {
    pub t0: EdgeSet,
    pub t1: EdgeSet,
    pub t2: EdgeSet,
    /// The components of `T0 ∪ T2`, each an even cycle alternating between
    /// `T0` and `T2` edges, as vertex sequences.
    pub cycles: Vec<Vec<usize>>,
}

pub fn is_fr_triple(catalog: &PmCatalog, (a, b, c): (usize, usize, usize)) -> bool {
    !catalog.get(a).meets_both(catalog.get(b), catalog.get(c))
}

/// Up to `limit` index triples `a < b < c` with `M_a ∩ M_b ∩ M_c = ∅`, in
/// lexicographic order.
pub fn find_fr_triples(catalog: &PmCatalog, limit: usize) -> Vec<(usize, usize, usize)> {
    let p = catalog.len();
    let mut out = Vec::new();
    for a in 0..p {
        for b in a + 1..p {
            let ab = catalog.get(a).intersection(catalog.get(b));
            for c in b + 1..p {
                if out.len() >= limit {
                    return out;
                }
                if ab.is_disjoint(catalog.get(c)) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// The `T0/T1/T2` partition of an FR-triple, with the alternating even
/// cycles formed by `T0 ∪ T2`.
///
/// Every vertex sees each matching once, so its three edges have
/// multiplicities summing to 3 with none equal to 3: either all are in `T1`
/// or it has one `T0` and one `T2` edge. This is checked while walking the
/// cycles.
pub fn fr_structure(
    g: &CubicGraph,
    catalog: &PmCatalog,
    triple: (usize, usize, usize),
) -> Result<FrStructure, CoveringError> {
    if !catalog.belongs_to(g) {
        return Err(CoveringError::CatalogMismatch);
    }
    let (a, b, c) = triple;
    if [a, b, c].iter().any(|&i| i >= catalog.len()) {
        return Err(CoveringError::IndexOutOfRange(a.max(b).max(c)));
    }
    if !is_fr_triple(catalog, triple) {
        return Err(CoveringError::NotFrTriple);
    }
    let m = g.m();
    let mut count = vec![0u8; m];
    for i in [a, b, c] {
        for e in catalog.get(i) {
            count[e] += 1;
        }
    }
    let class = |k: u8| EdgeSet::from_indices(m, (0..m).filter(|&e| count[e] == k));
    let (t0, t1, t2) = (class(0), class(1), class(2));

    let mut cycles = Vec::new();
    let mut visited = vec![false; g.n()];
    for start in 0..g.n() {
        let on: Vec<usize> = g.incident(start).into_iter().filter(|&e| count[e] != 1).collect();
        if visited[start] || on.is_empty() {
            continue;
        }
        assert_eq!(on.len(), 2, "vertex {start} has {} edges in T0 ∪ T2", on.len());
        let mut cycle = vec![start];
        visited[start] = true;
        let mut via = on[0];
        let mut v = g.other_end(via, start);
        while v != start {
            visited[v] = true;
            cycle.push(v);
            let here: Vec<usize> = g.incident(v).into_iter().filter(|&e| count[e] != 1).collect();
            assert_eq!(here.len(), 2);
            assert_ne!(count[here[0]], count[here[1]], "T0 and T2 do not alternate at {v}");
            via = if here[0] == via { here[1] } else { here[0] };
            v = g.other_end(via, v);
        }
        assert_eq!(cycle.len() % 2, 0);
        cycles.push(cycle);
    }
    debug_assert_eq!(2 * t2.len() + t1.len(), 3 * g.n() / 2);
    Ok(FrStructure { t0, t1, t2, cycles })
}
