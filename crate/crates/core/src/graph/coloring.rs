use super::CubicGraph;

/// A proper 3-edge-colouring (colour per edge index), if one exists.
///
/// Backtracking that always extends the uncoloured edge with the fewest
/// remaining colours. Colours at vertex 0 are fixed up front to break the
/// colour permutation symmetry.
pub fn three_edge_coloring(g: &CubicGraph) -> Option<Vec<u8>> {
    let m = g.m();
    if m == 0 {
        return Some(Vec::new());
    }
    let mut color = vec![u8::MAX; m];
    // used[v] bit c set when colour c is taken at v
    let mut used = vec![0u8; g.n()];
    for (c, e) in g.incident(0).into_iter().enumerate() {
        let (u, v) = g.edge(e);
        if used[u] & (1 << c) != 0 || used[v] & (1 << c) != 0 {
            return None;
        }
        color[e] = c as u8;
        used[u] |= 1 << c;
        used[v] |= 1 << c;
    }
    if extend(g, &mut color, &mut used) {
        Some(color)
    } else {
        None
    }
}

pub fn is_three_edge_colorable(g: &CubicGraph) -> bool {
    three_edge_coloring(g).is_some()
}

fn extend(g: &CubicGraph, color: &mut [u8], used: &mut [u8]) -> bool {
    let mut best: Option<(u32, usize)> = None;
    for e in 0..color.len() {
        if color[e] != u8::MAX {
            continue;
        }
        let (u, v) = g.edge(e);
        let free = (!(used[u] | used[v]) & 0b111).count_ones();
        if free == 0 {
            return false;
        }
        if best.is_none_or(|(f, _)| free < f) {
            best = Some((free, e));
            if free == 1 {
                break;
            }
        }
    }
    let Some((_, e)) = best else {
        return true;
    };
    let (u, v) = g.edge(e);
    for c in 0..3u8 {
        let bit = 1 << c;
        if (used[u] | used[v]) & bit != 0 {
            continue;
        }
        color[e] = c;
        used[u] |= bit;
        used[v] |= bit;
        if extend(g, color, used) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
        color[e] = u8::MAX;
    }
    false
}
