use std::collections::VecDeque;

use super::CubicGraph;

/// Per-vertex invariant: the number of vertices at each BFS distance.
fn distance_profiles(g: &CubicGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::with_capacity(n);
    let mut dist = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut profile = vec![1];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if profile.len() <= dist[w] {
                        profile.push(0);
                    }
                    profile[dist[w]] += 1;
                    queue.push_back(w);
                }
            }
        }
        out.push(profile);
    }
    out
}

fn multiplicity_matrix(g: &CubicGraph) -> Vec<u8> {
    let n = g.n();
    let mut mat = vec![0u8; n * n];
    for &(u, v) in g.edges() {
        mat[u * n + v] += 1;
        mat[v * n + u] += 1;
    }
    mat
}

/// Vertices of `g` in BFS order, each paired with an already-listed neighbour
/// (`None` for the first vertex of each component).
fn bfs_order(g: &CubicGraph) -> Vec<(usize, Option<usize>)> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push((root, None));
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head].0;
            head += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some(v)));
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    n: usize,
    h: &'a CubicGraph,
    gm: Vec<u8>,
    hm: Vec<u8>,
    gp: Vec<Vec<usize>>,
    hp: Vec<Vec<usize>>,
    order: Vec<(usize, Option<usize>)>,
    map: Vec<usize>,
    used: Vec<bool>,
    found: u64,
    limit: u64,
}

impl Matcher<'_> {
    fn consistent(&self, depth: usize, v: usize, x: usize) -> bool {
        if self.used[x] || self.gp[v] != self.hp[x] {
            return false;
        }
        let n = self.n;
        self.order[..depth].iter().all(|&(u, _)| {
            self.gm[v * n + u] == self.hm[x * n + self.map[u]]
        })
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.n {
            self.found += 1;
            return self.found >= self.limit;
        }
        let (v, parent) = self.order[depth];
        let candidates: Vec<usize> = match parent {
            Some(p) => {
                let mut c = self.h.neighbors(self.map[p]).to_vec();
                c.dedup();
                c
            }
            None => (0..self.n).collect(),
        };
        for x in candidates {
            if !self.consistent(depth, v, x) {
                continue;
            }
            self.map[v] = x;
            self.used[x] = true;
            let done = self.search(depth + 1);
            self.used[x] = false;
            self.map[v] = usize::MAX;
            if done {
                return true;
            }
        }
        false
    }
}

fn count_isomorphisms(g: &CubicGraph, h: &CubicGraph, limit: u64) -> u64 {
    if g.n() != h.n() || g.m() != h.m() {
        return 0;
    }
    let gp = distance_profiles(g);
    let hp = distance_profiles(h);
    let mut a = gp.clone();
    let mut b = hp.clone();
    a.sort();
    b.sort();
    if a != b {
        return 0;
    }
    let n = g.n();
    let mut matcher = Matcher {
        n,
        h,
        gm: multiplicity_matrix(g),
        hm: multiplicity_matrix(h),
        gp,
        hp,
        order: bfs_order(g),
        map: vec![usize::MAX; n],
        used: vec![false; n],
        found: 0,
        limit,
    };
    matcher.search(0);
    matcher.found
}

/// Exact isomorphism test by backtracking, intended for n up to a few dozen.
pub fn is_isomorphic(g: &CubicGraph, h: &CubicGraph) -> bool {
    count_isomorphisms(g, h, 1) == 1
}

/// Order of the automorphism group acting on vertices.
pub fn count_automorphisms(g: &CubicGraph) -> u64 {
    count_isomorphisms(g, g, u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn relabel(g: &CubicGraph, perm: &[usize]) -> CubicGraph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        CubicGraph::from_edges(g.n(), &edges).unwrap()
    }

    /// Tries every bijection; only usable for tiny graphs.
    fn brute_isomorphic(g: &CubicGraph, h: &CubicGraph) -> bool {
        fn rec(g: &CubicGraph, h: &CubicGraph, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
            if perm.len() == g.n() {
                let mut a: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                    .collect();
                a.sort();
                return a == h.edges();
            }
            for x in 0..g.n() {
                if !used[x] {
                    used[x] = true;
                    perm.push(x);
                    if rec(g, h, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[x] = false;
                }
            }
            false
        }
        g.n() == h.n() && rec(g, h, &mut Vec::new(), &mut vec![false; g.n()])
    }

    #[test]
    fn petersen_is_the_five_two_permutation_graph() {
        let sigma: Vec<usize> = (0..5).map(|i| 2 * i % 5).collect();
        let pg = generators::permutation_graph(&sigma).unwrap();
        assert!(is_isomorphic(&generators::petersen(), &pg));
        assert!(pg.is_petersen());
    }

    #[test]
    fn non_isomorphic_pairs() {
        let p = generators::petersen();
        assert!(!is_isomorphic(&p, &generators::prism(5).unwrap()));
        assert!(!is_isomorphic(&generators::blanusa1(), &p));
        assert!(!is_isomorphic(&generators::blanusa1(), &generators::blanusa2()));
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(count_automorphisms(&generators::petersen()), 120);
        assert_eq!(count_automorphisms(&generators::k4()), 24);
        assert_eq!(count_automorphisms(&generators::k33()), 72);
        assert_eq!(count_automorphisms(&generators::prism(5).unwrap()), 20);
        assert_eq!(count_automorphisms(&generators::theta()), 2);
    }

    #[test]
    fn random_relabelings_are_recognised() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for seed in 0..40 {
            let g = generators::random_bridgeless_cubic(16, seed).unwrap();
            let mut perm: Vec<usize> = (0..16).collect();
            perm.shuffle(&mut rng);
            assert!(is_isomorphic(&g, &relabel(&g, &perm)));
        }
    }

    #[test]
    fn agrees_with_brute_force_on_eight_vertices() {
        let graphs: Vec<_> = (0..12)
            .map(|s| generators::random_bridgeless_cubic(8, s).unwrap())
            .collect();
        for a in &graphs {
            for b in &graphs {
                assert_eq!(is_isomorphic(a, b), brute_isomorphic(a, b));
            }
        }
    }
}
