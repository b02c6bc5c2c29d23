//! Named graphs, snark families and random cubic graphs.
//!
//! Vertex labellings are part of the contract: the constructions that refer
//! to specific vertices (good triples, proof 2-factors) rely on them.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::edgeset::EdgeSet;
use crate::graph::{find_bridges, is_three_edge_colorable, CubicGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("k must be odd and at least 3, got {0}")]
    EvenK(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("the two cycles of the permutation construction are not chordless")]
    ChordedCycle,
    #[error("no graph accepted after {0} attempts")]
    RetriesExhausted(usize),
}

const MAX_ATTEMPTS: usize = 100_000;

fn build(n: usize, edges: &[(usize, usize)]) -> CubicGraph {
    CubicGraph::from_edges(n, edges).expect("generator produced a non-cubic edge list")
}

/// Outer cycle 0..4, spokes `i`–`i+5`, inner pentagram `5+i`–`5+(i+2)%5`.
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

pub fn k4() -> CubicGraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> CubicGraph {
    let edges: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    build(6, &edges)
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CubicGraph {
    build(2, &[(0, 1), (0, 1), (0, 1)])
}

/// Cycles `0..n` and `n..2n` with rungs `i`–`n+i`.
pub fn prism(n: usize) -> Result<CubicGraph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::InvalidParams(format!("prism needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Ok(build(2 * n, &edges))
}

/// Two `n`-cycles `u_i = i` and `w_j = n + j` joined by spokes `u_i`–`w_σ(i)`.
pub fn permutation_graph(sigma: &[usize]) -> Result<CubicGraph, GeneratorError> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(GeneratorError::NotPermutation(n));
        }
        seen[s] = true;
    }
    if n < 3 {
        return Err(GeneratorError::ChordedCycle);
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + sigma[i]));
    }
    let g = build(2 * n, &edges);
    // Each side must induce exactly its n cycle edges.
    let inside = |lo: usize| {
        g.edges()
            .iter()
            .filter(|&&(u, v)| (lo..lo + n).contains(&u) && (lo..lo + n).contains(&v))
            .count()
    };
    if inside(0) != n || inside(n) != n || !g.is_simple() {
        return Err(GeneratorError::ChordedCycle);
    }
    Ok(g)
}

/// The spokes of a graph built by [`permutation_graph`]: the perfect matching
/// whose complement is the two defining cycles.
pub fn permutation_spokes(g: &CubicGraph) -> EdgeSet {
    let half = g.n() / 2;
    EdgeSet::from_indices(
        g.m(),
        (0..g.m()).filter(|&e| {
            let (u, v) = g.edge(e);
            u < half && v >= half
        }),
    )
}

const BLANUSA1_SIGMA: [usize; 9] = [0, 3, 1, 8, 2, 5, 7, 4, 6];
const BLANUSA2_SIGMA: [usize; 9] = [0, 2, 4, 1, 3, 6, 8, 5, 7];

/// The first Blanuša snark (automorphism group of order 8), labelled as a
/// permutation graph: two chordless 9-cycles `0..9` and `9..18`.
pub fn blanusa1() -> CubicGraph {
    permutation_graph(&BLANUSA1_SIGMA).expect("embedded permutation is valid")
}

/// The second Blanuša snark (automorphism group of order 4), labelled as
/// [`blanusa1`].
pub fn blanusa2() -> CubicGraph {
    permutation_graph(&BLANUSA2_SIGMA).expect("embedded permutation is valid")
}

fn check_odd_k(k: usize) -> Result<(), GeneratorError> {
    if k < 3 || k % 2 == 0 {
        Err(GeneratorError::EvenK(k))
    } else {
        Ok(())
    }
}

/// Flower snark on `4k` vertices: `x_i = i`, `y_i = k+i`, `z_i = 2k+i`,
/// `t_i = 3k+i`. The x's form a k-cycle, `y_0..y_{k-1} z_0..z_{k-1}` a
/// 2k-cycle, and `t_i` is adjacent to `x_i`, `y_i`, `z_i`.
pub fn flower_snark(k: usize) -> Result<CubicGraph, GeneratorError> {
    check_odd_k(k)?;
    let (x, y, z, t) = (0, k, 2 * k, 3 * k);
    let mut edges = Vec::with_capacity(6 * k);
    for i in 0..k {
        edges.push((x + i, x + (i + 1) % k));
        edges.push((t + i, x + i));
        edges.push((t + i, y + i));
        edges.push((t + i, z + i));
    }
    for i in 0..k - 1 {
        edges.push((y + i, y + i + 1));
        edges.push((z + i, z + i + 1));
    }
    edges.push((y + k - 1, z));
    edges.push((z + k - 1, y));
    Ok(build(4 * k, &edges))
}

/// The 2-factor `(C, D)` of the flower snark used in its covering argument:
/// `C = x_0 … x_{k-1}` and `D = y_0 t_0 z_0 z_1 t_1 y_1 y_2 t_2 z_2 …`.
pub fn flower_proof_cycles(k: usize) -> Result<Vec<Vec<usize>>, GeneratorError> {
    check_odd_k(k)?;
    let c: Vec<usize> = (0..k).collect();
    let mut d = Vec::with_capacity(3 * k);
    for i in 0..k {
        let (y, t, z) = (k + i, 3 * k + i, 2 * k + i);
        if i % 2 == 0 {
            d.extend([y, t, z]);
        } else {
            d.extend([z, t, y]);
        }
    }
    Ok(vec![c, d])
}

const GOLDBERG_BLOCK: [(usize, usize); 9] = [
    (A, B),
    (B, D),
    (B, G),
    (D, E),
    (G, F),
    (C, H),
    (C, G),
    (D, H),
    (E, F),
];
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;
const H: usize = 7;

/// Vertex `letter` (0 = a, …, 7 = h) of block `i` of a Goldberg graph.
pub fn goldberg_vertex(i: usize, letter: usize) -> usize {
    8 * i + letter
}

/// Goldberg snark on `8k` vertices built from `k` blocks with vertices
/// `a..h` (block `i` occupies `8i..8i+8`, see [`goldberg_vertex`]). Blocks
/// are joined by `a_i a_{i+1}`, `f_i e_{i+1}` and `h_i c_{i+1}`.
pub fn goldberg_graph(k: usize) -> Result<CubicGraph, GeneratorError> {
    check_odd_k(k)?;
    let v = goldberg_vertex;
    let mut edges = Vec::with_capacity(12 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        edges.extend(GOLDBERG_BLOCK.iter().map(|&(p, q)| (v(i, p), v(i, q))));
        edges.push((v(i, A), v(j, A)));
        edges.push((v(i, F), v(j, E)));
        edges.push((v(i, H), v(j, C)));
    }
    let g = build(8 * k, &edges);
    let cycles = goldberg_proof_cycles(k)?;
    assert!(
        closes_to_two_factor(&g, &cycles),
        "Goldberg wiring does not admit the proof 2-factor"
    );
    Ok(g)
}

/// The 2-factor `(C, D, E)` of the Goldberg snark used in its covering
/// argument: `C = a_0 … a_{k-1}`, `D = e_0 d_0 b_0 g_0 f_0 e_1 …` and
/// `E = c_0 h_0 c_1 h_1 …`.
pub fn goldberg_proof_cycles(k: usize) -> Result<Vec<Vec<usize>>, GeneratorError> {
    check_odd_k(k)?;
    let v = goldberg_vertex;
    let c = (0..k).map(|i| v(i, A)).collect();
    let d = (0..k).flat_map(|i| [E, D, B, G, F].map(|l| v(i, l))).collect();
    let e = (0..k).flat_map(|i| [C, H].map(|l| v(i, l))).collect();
    Ok(vec![c, d, e])
}

/// Whether the vertex sequences are cycles of `g` that together cover every
/// vertex exactly once.
pub fn closes_to_two_factor(g: &CubicGraph, cycles: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    for cyc in cycles {
        if cyc.len() < 2 {
            return false;
        }
        for (i, &a) in cyc.iter().enumerate() {
            let b = cyc[(i + 1) % cyc.len()];
            if a >= g.n() || seen[a] || g.find_edge(a, b).is_none() {
                return false;
            }
            seen[a] = true;
        }
    }
    seen.iter().all(|&s| s)
}

/// The perfect matching complementary to a 2-factor given as vertex cycles.
pub fn matching_complement(g: &CubicGraph, cycles: &[Vec<usize>]) -> Option<EdgeSet> {
    if !closes_to_two_factor(g, cycles) {
        return None;
    }
    let mut on_cycle = g.empty_edge_set();
    for cyc in cycles {
        for (i, &a) in cyc.iter().enumerate() {
            let b = cyc[(i + 1) % cyc.len()];
            // Pick an unused parallel copy if the cycle has length 2.
            let e = g
                .incident(a)
                .into_iter()
                .find(|&e| g.other_end(e, a) == b && !on_cycle.contains(e))?;
            on_cycle.insert(e);
        }
    }
    let pm = on_cycle.complement();
    g.is_perfect_matching(&pm).then_some(pm)
}

const PETERSEN_B_KEEP: [usize; 8] = [1, 2, 3, 4, 6, 7, 8, 9];

/// Generalized Blanuša snark of the given type (1 or 2) with `t >= 1`
/// B-blocks, on `10 + 8t` vertices.
///
/// Block A is the Petersen graph (labelled as in [`petersen`]) with edge
/// `0-1` and a second edge removed: `7-9` for type 1, `5-7` for type 2.
/// Each block B is the Petersen graph minus the adjacent vertices 0 and 5,
/// with free ends `1, 4` on one side and `7, 8` on the other. The blocks are
/// chained A, B_1, …, B_t and back to A. With `t = 1` the results are
/// isomorphic to [`blanusa1`] and [`blanusa2`].
pub fn generalized_blanusa(kind: u8, t: usize) -> Result<CubicGraph, GeneratorError> {
    let e2 = match kind {
        1 => (7, 9),
        2 => (5, 7),
        _ => return Err(GeneratorError::InvalidParams(format!("type must be 1 or 2, got {kind}"))),
    };
    if t == 0 {
        return Err(GeneratorError::InvalidParams("need at least one B block".into()));
    }
    let p = petersen();
    let mut edges: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (0, 1) && e != e2)
        .collect();
    let local = |v: usize| PETERSEN_B_KEEP.iter().position(|&x| x == v).unwrap();
    let block = |j: usize, v: usize| 10 + 8 * j + local(v);
    for j in 0..t {
        for &(u, v) in p.edges() {
            if ![0, 5].contains(&u) && ![0, 5].contains(&v) {
                edges.push((block(j, u), block(j, v)));
            }
        }
    }
    edges.push((0, block(0, 1)));
    edges.push((1, block(0, 4)));
    for j in 0..t - 1 {
        edges.push((block(j, 7), block(j + 1, 1)));
        edges.push((block(j, 8), block(j + 1, 4)));
    }
    edges.push((block(t - 1, 7), e2.0));
    edges.push((block(t - 1, 8), e2.1));
    let g = build(10 + 8 * t, &edges);
    debug_assert!(find_bridges(&g).is_empty());
    if is_three_edge_colorable(&g) {
        return Err(GeneratorError::InvalidParams(
            "construction is 3-edge-colorable".into(),
        ));
    }
    Ok(g)
}

/// Ten vertices: two copies of K4 with one edge subdivided, the two
/// subdivision vertices (4 and 9) joined by a bridge.
pub fn bridged_k4_pair() -> CubicGraph {
    let mut edges = Vec::new();
    for o in [0, 5] {
        edges.extend([(o, o + 1), (o, o + 2), (o, o + 3), (o + 1, o + 2), (o + 1, o + 3)]);
        edges.extend([(o + 2, o + 4), (o + 3, o + 4)]);
    }
    edges.push((4, 9));
    build(10, &edges)
}

/// One configuration-model draw: a random pairing of `3n` half-edges.
fn random_pairing(n: usize, rng: &mut ChaCha8Rng) -> Option<CubicGraph> {
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    points.shuffle(rng);
    let edges: Vec<_> = points.chunks(2).map(|c| (c[0], c[1])).collect();
    let g = CubicGraph::from_edges(n, &edges).ok()?;
    (g.is_simple() && g.is_connected()).then_some(g)
}

fn check_order(n: usize) -> Result<(), GeneratorError> {
    if n < 4 || n % 2 == 1 {
        Err(GeneratorError::InvalidParams(format!("n must be even and >= 4, got {n}")))
    } else {
        Ok(())
    }
}

/// A simple connected cubic graph (bridges allowed), deterministic per seed.
pub fn random_connected_cubic(n: usize, seed: u64) -> Result<CubicGraph, GeneratorError> {
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = random_pairing(n, &mut rng) {
            return Ok(g);
        }
    }
    Err(GeneratorError::RetriesExhausted(MAX_ATTEMPTS))
}

/// A simple connected bridgeless cubic graph, deterministic per seed.
pub fn random_bridgeless_cubic(n: usize, seed: u64) -> Result<CubicGraph, GeneratorError> {
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = random_pairing(n, &mut rng) {
            if find_bridges(&g).is_empty() {
                return Ok(g);
            }
        }
    }
    Err(GeneratorError::RetriesExhausted(MAX_ATTEMPTS))
}

fn parse_args(text: &str) -> Result<Vec<usize>, GeneratorError> {
    text.split(',')
        .map(|a| {
            a.trim()
                .parse()
                .map_err(|_| GeneratorError::InvalidParams(format!("bad argument {a:?}")))
        })
        .collect()
}

/// Builds a graph from a name such as `petersen`, `prism(5)`, `flower(5)`,
/// `goldberg(5)`, `gblanusa(1,2)`, `perm(0,2,4,1,3)` or `random(12,7)`.
///
/// Recognised bare names: `petersen`, `k4`, `k33`, `theta`, `blanusa1`,
/// `blanusa2`.
pub fn named_graph(name: &str) -> Result<CubicGraph, GeneratorError> {
    let name = name.trim().to_ascii_lowercase();
    let unknown = || GeneratorError::UnknownName(name.clone());
    let (head, args) = match name.split_once('(') {
        Some((h, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            (h.trim().to_string(), parse_args(inner)?)
        }
        None => (name.clone(), Vec::new()),
    };
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(GeneratorError::InvalidParams(format!(
                "{head} takes {k} argument(s), got {}",
                args.len()
            )))
        }
    };
    match head.as_str() {
        "petersen" => arity(0).map(|_| petersen()),
        "k4" => arity(0).map(|_| k4()),
        "k33" | "k3,3" => arity(0).map(|_| k33()),
        "theta" => arity(0).map(|_| theta()),
        "blanusa1" => arity(0).map(|_| blanusa1()),
        "blanusa2" => arity(0).map(|_| blanusa2()),
        "prism" => arity(1).and_then(|_| prism(args[0])),
        "flower" => arity(1).and_then(|_| flower_snark(args[0])),
        "goldberg" => arity(1).and_then(|_| goldberg_graph(args[0])),
        "gblanusa" => arity(2).and_then(|_| {
            let kind = u8::try_from(args[0])
                .map_err(|_| GeneratorError::InvalidParams("type must be 1 or 2".into()))?;
            generalized_blanusa(kind, args[1])
        }),
        "perm" => permutation_graph(&args),
        "random" => arity(2).and_then(|_| random_bridgeless_cubic(args[0], args[1] as u64)),
        _ => Err(unknown()),
    }
}
