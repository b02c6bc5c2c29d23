//! The reproduction suite: every quantitative claim checked on the graphs it
//! is stated for, each criterion under a fixed time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use pmcover::compositions::{tau5odd_example, three_cut_join};
use pmcover::constructions::{find_good_triple, four_covering_from_good_pairs, pair_odd_cycles, GoodPairCert};
use pmcover::coverings::{
    covering_multiplicities, covering_number, even_covering_from_four_covering, fr_structure, fulkerson_covering,
    is_fr_triple, odd_covering_exists, odd_covering_from_four_covering, odd_covering_number, Covering,
    CoveringKind, OddResult, TauResult,
};
use pmcover::generators::{self, closes_to_two_factor, goldberg_vertex, matching_complement};
use pmcover::graph::{find_bridges, is_three_edge_colorable};
use pmcover::matchings::pm_pair_stats;
use pmcover::{enumerate_perfect_matchings, CubicGraph, EdgeSet, PmCatalog, TwoFactor};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub budget: Duration,
    run: fn() -> Check,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {} ({:.2}s of {:.0}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs_f64()
        )
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "Petersen graph", budget: secs(1), run: petersen_suite },
        Criterion { id: 2, name: "Blanusa snarks", budget: secs(10), run: blanusa_suite },
        Criterion { id: 3, name: "flower snarks F5, F7", budget: secs(30), run: flower_suite },
        Criterion { id: 4, name: "Goldberg snark G5", budget: secs(60), run: goldberg_suite },
        Criterion { id: 5, name: "20-vertex odd-covering example", budget: secs(60), run: example_suite },
        Criterion { id: 6, name: "Petersen 3-cut join K3,3", budget: secs(60), run: join_suite },
        Criterion { id: 7, name: "property suites", budget: secs(600), run: property_suites },
        Criterion { id: 8, name: "oracle equivalence", budget: secs(300), run: oracle_suite },
    ]
}

/// Runs one criterion; panics inside the library count as failures and an
/// overrun budget fails an otherwise passing run.
pub fn run(c: &Criterion) -> Outcome {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > c.budget {
        passed = false;
        detail = format!("over budget; {detail}");
    }
    Outcome {
        id: c.id,
        name: c.name,
        passed,
        detail,
        elapsed,
        budget: c.budget,
    }
}

pub fn verify_all() -> Vec<Outcome> {
    criteria().iter().map(run).collect()
}

fn tau(g: &CubicGraph, cat: &PmCatalog, cap: usize) -> TauResult {
    covering_number(g, cat, cap).expect("catalog of g")
}

fn proof_two_factor(g: &CubicGraph, cycles: &[Vec<usize>]) -> Result<TwoFactor, String> {
    let pm = matching_complement(g, cycles).ok_or("proof cycles are not a 2-factor")?;
    g.two_factor_of(&pm).map_err(|e| e.to_string())
}

/// A 4-covering passes the structural checks for its multiplicities.
fn verified_four_covering(g: &CubicGraph, cov: &Covering) -> Result<(), String> {
    let prof = covering_multiplicities(g, cov).map_err(|e| e.to_string())?;
    ensure!(g.is_perfect_matching(&prof.doubly_covered), "doubly covered edges are not a perfect matching");
    let mut union = g.empty_edge_set();
    for m in cov.matchings() {
        ensure!(g.is_perfect_matching(m), "member is not a perfect matching");
        union.union_with(m);
    }
    ensure!(union.is_full(), "members do not cover every edge");
    Ok(())
}

fn edge(g: &CubicGraph, u: usize, v: usize) -> usize {
    g.find_edge(u, v).expect("edge of the construction")
}

fn petersen_suite() -> Check {
    let g = generators::petersen();
    let cat = enumerate_perfect_matchings(&g);
    ensure!(cat.len() == 6, "{} perfect matchings", cat.len());
    ensure!(tau(&g, &cat, 6).tau() == Some(5), "tau is not 5");
    let all = Covering::from_catalog(&cat, CoveringKind::Fulkerson, (0..6).collect());
    ensure!(all.is_ok(), "the six matchings are not a Fulkerson covering: {all:?}");
    ensure!(fulkerson_covering(&g, &cat).map_err(|e| e.to_string())?.is_found(), "Fulkerson search failed");
    ensure!(!odd_covering_exists(&cat), "GF(2) test finds an odd covering");
    ensure!(!exhaustive_odd_exists(&cat), "exhaustive search finds an odd covering");
    ensure!(
        odd_covering_number(&g, &cat, 7).map_err(|e| e.to_string())? == OddResult::NoneExists,
        "odd covering search disagrees"
    );
    let stats = pm_pair_stats(&cat).map_err(|e| e.to_string())?;
    ensure!(stats.min_intersection == 1, "b = {}", stats.min_intersection);
    let bound = (9 * g.n()).div_ceil(10);
    ensure!(stats.max_union == 9 && bound == 9, "max union {} vs bound {bound}", stats.max_union);
    Ok("6 PMs, tau 5, Fulkerson covering, no odd covering, b 1, max union 9".into())
}

fn blanusa_suite() -> Check {
    let mut notes = Vec::new();
    for (name, g) in [("B1", generators::blanusa1()), ("B2", generators::blanusa2())] {
        let start = Instant::now();
        let cat = enumerate_perfect_matchings(&g);
        ensure!(tau(&g, &cat, 6).tau() == Some(4), "{name}: tau is not 4");
        let tf = g
            .two_factor_of(&generators::permutation_spokes(&g))
            .map_err(|e| e.to_string())?;
        ensure!(tf.lengths() == vec![9, 9], "{name}: 2-factor lengths {:?}", tf.lengths());
        let cert = find_good_triple(&g, &tf, 0, 1).map_err(|e| e.to_string())?;
        let cert = cert.ok_or(format!("{name}: no good triple"))?;
        let cov = four_covering_from_good_pairs(&g, &tf, &[cert]).map_err(|e| e.to_string())?;
        verified_four_covering(&g, &cov)?;
        let odd = odd_covering_number(&g, &cat, 7).map_err(|e| e.to_string())?;
        ensure!(odd.size() == Some(5), "{name}: tau_odd {:?}", odd.size());
        let t = start.elapsed();
        ensure!(t <= Duration::from_secs(5), "{name} took {t:?}");
        notes.push(format!("{name} tau 4, tau_odd 5, 4-covering built"));
    }
    Ok(notes.join("; "))
}

fn flower_suite() -> Check {
    let mut notes = Vec::new();
    for k in [5, 7] {
        let g = generators::flower_snark(k).map_err(|e| e.to_string())?;
        let cat = enumerate_perfect_matchings(&g);
        ensure!(tau(&g, &cat, 6).tau() == Some(4), "F{k}: tau is not 4");
        let tf = proof_two_factor(&g, &generators::flower_proof_cycles(k).map_err(|e| e.to_string())?)?;
        let cert = find_good_triple(&g, &tf, tf.locate(0).0, tf.locate(k).0)
            .map_err(|e| e.to_string())?
            .ok_or(format!("F{k}: no good triple"))?;
        let expect = [0, 1, 2].map(|i| edge(&g, i, 3 * k + i));
        ensure!(cert.cross_edges == expect, "F{k}: triple {:?}, expected x_i t_i", cert.cross_edges);
        let cov = four_covering_from_good_pairs(&g, &tf, &[cert]).map_err(|e| e.to_string())?;
        verified_four_covering(&g, &cov)?;
        notes.push(format!("F{k} tau 4 with (x0t0, x1t1, x2t2)"));
    }
    Ok(notes.join("; "))
}

fn goldberg_suite() -> Check {
    let g = generators::goldberg_graph(5).map_err(|e| e.to_string())?;
    let cycles = generators::goldberg_proof_cycles(5).map_err(|e| e.to_string())?;
    ensure!(closes_to_two_factor(&g, &cycles), "(C, D, E) is not a 2-factor");
    ensure!(!is_three_edge_colorable(&g), "G5 is 3-edge-colourable");
    let tf = proof_two_factor(&g, &cycles)?;
    let pairs: Vec<GoodPairCert> = pair_odd_cycles(&g, &tf).ok_or("odd cycles admit no good pairing")?;
    ensure!(pairs.len() == 1, "{} pairs", pairs.len());
    let v = goldberg_vertex;
    let expect = [0, 1, 2].map(|i| edge(&g, v(i, 0), v(i, 1)));
    ensure!(pairs[0].cross_edges == expect, "triple {:?}, expected a_i b_i", pairs[0].cross_edges);
    let cov = four_covering_from_good_pairs(&g, &tf, &pairs).map_err(|e| e.to_string())?;
    verified_four_covering(&g, &cov)?;
    Ok("no 3-edge-colouring, 4-covering from (a0b0, a1b1, a2b2), so tau 4".into())
}

fn example_suite() -> Check {
    let g = tau5odd_example();
    let cat = enumerate_perfect_matchings(&g);
    ensure!(cat.len() == 20, "{} perfect matchings", cat.len());
    ensure!(tau(&g, &cat, 6).tau() == Some(5), "tau is not 5");
    match odd_covering_number(&g, &cat, 9).map_err(|e| e.to_string())? {
        OddResult::Found {
            size,
            count_minimum,
            subsets_at_size,
            ..
        } => {
            ensure!(size == 7, "tau_odd {size}");
            ensure!(subsets_at_size == 77520, "{subsets_at_size} subsets of size 7");
            ensure!(count_minimum == Some(64), "{count_minimum:?} minimum odd coverings");
        }
        other => return Err(format!("odd covering search returned {other:?}")),
    }
    Ok("20 PMs, tau 5, tau_odd 7, 64 of 77520 7-subsets are odd coverings".into())
}

fn join_suite() -> Check {
    let g = three_cut_join(&generators::petersen(), 0, &generators::k33(), 0)
        .map_err(|e| e.to_string())?
        .graph;
    let cat = enumerate_perfect_matchings(&g);
    ensure!(tau(&g, &cat, 4) == TauResult::Exceeds { cap: 4 }, "a 4-covering exists");
    ensure!(!odd_covering_exists(&cat), "an odd covering exists");
    ensure!(cat.len() > 25 || !exhaustive_odd_exists(&cat), "exhaustive search finds an odd covering");
    Ok(format!("{} PMs, no 4-covering, no odd covering", cat.len()))
}

/// Checks every consequence of `τ = 4` on one graph.
fn tau_four_consequences(g: &CubicGraph, cat: &PmCatalog, cov: &Covering) -> Result<(), String> {
    ensure!(g.n() >= 12, "tau 4 with n = {}", g.n());
    verified_four_covering(g, cov)?;
    let ms = cov.matchings();
    for i in 0..4 {
        for j in i + 1..4 {
            ensure!(!ms[i].is_disjoint(&ms[j]), "two witness members are disjoint");
        }
    }
    let idx = cov.indices().ok_or("witness without catalog indices")?;
    for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        let t = (idx[a], idx[b], idx[c]);
        ensure!(is_fr_triple(cat, t), "3-subset {t:?} is not an FR-triple");
        let s = fr_structure(g, cat, t).map_err(|e| e.to_string())?;
        ensure!(s.cycles.iter().all(|c| c.len() % 2 == 0), "odd component in T0 ∪ T2");
        ensure!(s.cycles.iter().map(Vec::len).sum::<usize>() == 2 * s.t2.len(), "T0 ∪ T2 is not 2-regular");
    }
    let b = pm_pair_stats(cat).map_err(|e| e.to_string())?.min_intersection;
    ensure!(12 * b <= g.n(), "b = {b} exceeds n/12");
    let odd = odd_covering_from_four_covering(g, cov).map_err(|e| e.to_string())?;
    ensure!(odd.len() == 5, "odd covering of size {}", odd.len());
    let even = even_covering_from_four_covering(g, cov).map_err(|e| e.to_string())?;
    ensure!(even.len() == 8, "even covering of size {}", even.len());
    Ok(())
}

fn random_permutation(rng: &mut ChaCha8Rng, k: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..k).collect();
    sigma.shuffle(rng);
    sigma
}

fn property_suites() -> Check {
    let mut tau_counts = [0usize; 7];
    let mut odd_sizes = 0;
    for seed in 0..200u64 {
        let n = 10 + 2 * (seed as usize % 4);
        let g = generators::random_bridgeless_cubic(n, seed).map_err(|e| e.to_string())?;
        let cat = enumerate_perfect_matchings(&g);
        let TauResult::Found { tau: t, witness } = tau(&g, &cat, 6) else {
            return Err(format!("no covering for random graph n={n} seed={seed}"));
        };
        tau_counts[t] += 1;
        if t == 4 {
            tau_four_consequences(&g, &cat, &witness).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
        }
        let stats = pm_pair_stats(&cat).map_err(|e| e.to_string())?;
        ensure!(10 * stats.max_union >= 9 * n, "n={n} seed={seed}: max union {}", stats.max_union);
        if let Some(size) = odd_covering_number(&g, &cat, 7).map_err(|e| e.to_string())?.size() {
            ensure!(size % 2 == 1, "odd covering of even size {size}");
            odd_sizes += 1;
        }
    }
    // Random graphs this small are almost always 3-edge-colourable, so the
    // tau-4 checks also run on graphs known to have tau 4.
    let mut named_tau4 = 0;
    for g in [
        generators::blanusa1(),
        generators::blanusa2(),
        generators::flower_snark(3).unwrap(),
        generators::flower_snark(5).unwrap(),
        generators::generalized_blanusa(1, 2).unwrap(),
        generators::generalized_blanusa(2, 2).unwrap(),
    ] {
        let cat = enumerate_perfect_matchings(&g);
        let TauResult::Found { tau: 4, witness } = tau(&g, &cat, 6) else {
            return Err(format!("named graph on {} vertices does not have tau 4", g.n()));
        };
        tau_four_consequences(&g, &cat, &witness)?;
        let stats = pm_pair_stats(&cat).map_err(|e| e.to_string())?;
        ensure!(10 * stats.max_union >= 9 * g.n(), "max union below 9n/10");
        named_tau4 += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut perms, mut petersens) = (0, 0);
    while perms < 100 {
        let k = rng.gen_range(3..=8);
        let sigma = random_permutation(&mut rng, k);
        let Ok(g) = generators::permutation_graph(&sigma) else {
            continue;
        };
        perms += 1;
        ensure!(find_bridges(&g).is_empty(), "permutation graph {sigma:?} has a bridge");
        let cat = enumerate_perfect_matchings(&g);
        match tau(&g, &cat, 4) {
            TauResult::Found { .. } => {}
            _ if g.is_petersen() => petersens += 1,
            other => return Err(format!("permutation graph {sigma:?}: {other:?} and not Petersen")),
        }
    }
    Ok(format!(
        "random tau counts {{3: {}, 4: {}, 5: {}, 6: {}}}, {odd_sizes} odd coverings all odd-sized, \
         {named_tau4} named tau-4 graphs checked, 100 permutation graphs ({petersens} Petersen)",
        tau_counts[3], tau_counts[4], tau_counts[5], tau_counts[6]
    ))
}

/// All perfect matchings by testing every `n/2`-subset of the edges.
fn brute_force_matchings(g: &CubicGraph) -> Vec<EdgeSet> {
    fn rec(g: &CubicGraph, start: usize, pick: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<EdgeSet>) {
        if pick.len() == g.n() / 2 {
            out.push(EdgeSet::from_indices(g.m(), pick.iter().copied()));
            return;
        }
        for e in start..g.m() {
            let (u, v) = g.edge(e);
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            pick.push(e);
            rec(g, e + 1, pick, used, out);
            pick.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(g, 0, &mut Vec::new(), &mut vec![false; g.n()], &mut out);
    out.sort();
    out
}

/// Smallest `k <= 4` with a `k`-subset of the catalog covering every edge,
/// and the first such subset in lexicographic order.
fn exhaustive_cover(cat: &PmCatalog) -> Option<(usize, Vec<usize>)> {
    fn rec(cat: &PmCatalog, k: usize, start: usize, acc: &EdgeSet, pick: &mut Vec<usize>) -> bool {
        if pick.len() == k {
            return acc.is_full();
        }
        for i in start..cat.len() {
            pick.push(i);
            if rec(cat, k, i + 1, &acc.union(cat.get(i)), pick) {
                return true;
            }
            pick.pop();
        }
        false
    }
    let empty = cat.graph().empty_edge_set();
    (1..=4).find_map(|k| {
        let mut pick = Vec::new();
        rec(cat, k, 0, &empty, &mut pick).then_some((k, pick))
    })
}

/// Whether some non-empty subset of the catalog has XOR equal to all edges,
/// walking all subsets in Gray-code order.
fn exhaustive_odd_exists(cat: &PmCatalog) -> bool {
    let m = cat.graph().m();
    assert!(m <= 128 && cat.len() <= 30);
    let vecs: Vec<u128> = cat
        .matchings()
        .iter()
        .map(|pm| pm.iter().fold(0u128, |acc, e| acc | 1 << e))
        .collect();
    let full = if m == 128 { !0 } else { (1u128 << m) - 1 };
    let mut x = 0u128;
    for i in 1u64..1 << cat.len() {
        x ^= vecs[i.trailing_zeros() as usize];
        if x == full {
            return true;
        }
    }
    false
}

fn oracle_suite() -> Check {
    let mut graphs = vec![
        generators::theta(),
        generators::k4(),
        generators::k33(),
        generators::petersen(),
        generators::blanusa1(),
        generators::blanusa2(),
        generators::flower_snark(3).unwrap(),
        tau5odd_example(),
        three_cut_join(&generators::petersen(), 0, &generators::k33(), 0).unwrap().graph,
        three_cut_join(&generators::petersen(), 0, &generators::k4(), 0).unwrap().graph,
    ];
    for n in (3..=8).map(|k| 2 * k) {
        graphs.push(generators::prism(n / 2).unwrap());
    }
    for seed in 0..120u64 {
        let n = 6 + 2 * (seed as usize % 6);
        graphs.push(generators::random_bridgeless_cubic(n, seed).map_err(|e| e.to_string())?);
    }
    for seed in 0..40u64 {
        let n = 8 + 2 * (seed as usize % 5);
        graphs.push(generators::random_connected_cubic(n, 1000 + seed).map_err(|e| e.to_string())?);
    }

    let (mut enum_checked, mut cover_checked, mut gf2_checked) = (0, 0, 0);
    for g in &graphs {
        let cat = enumerate_perfect_matchings(g);
        if g.n() <= 12 {
            ensure!(cat.matchings() == brute_force_matchings(g), "enumeration differs on n = {}", g.n());
            enum_checked += 1;
        }
        if cat.len() <= 200 && find_bridges(g).is_empty() {
            let ours = tau(g, &cat, 4);
            match exhaustive_cover(&cat) {
                Some((k, pick)) => {
                    let TauResult::Found { tau, witness } = &ours else {
                        return Err(format!("solver missed a {k}-covering: {ours:?}"));
                    };
                    ensure!(*tau == k && witness.indices() == Some(&pick[..]), "tau {tau} vs {k}");
                }
                None => ensure!(ours == TauResult::Exceeds { cap: 4 }, "solver found {ours:?}, oracle none"),
            }
            cover_checked += 1;
        }
        if !cat.is_empty() && cat.len() <= 25 {
            ensure!(
                odd_covering_exists(&cat) == exhaustive_odd_exists(&cat),
                "GF(2) test disagrees on n = {}",
                g.n()
            );
            gf2_checked += 1;
        }
    }
    Ok(format!(
        "enumeration on {enum_checked} graphs, tau on {cover_checked}, odd-covering existence on {gf2_checked}"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_agree_on_small_cases() {
        let k4 = generators::k4();
        let cat = enumerate_perfect_matchings(&k4);
        assert_eq!(brute_force_matchings(&k4), cat.matchings());
        assert_eq!(exhaustive_cover(&cat), Some((3, vec![0, 1, 2])));
        assert!(exhaustive_odd_exists(&cat));
        let p = generators::petersen();
        assert!(!exhaustive_odd_exists(&enumerate_perfect_matchings(&p)));
    }

    #[test]
    fn failures_and_panics_are_reported() {
        let c = Criterion {
            id: 0,
            name: "always fails",
            budget: Duration::from_secs(1),
            run: || Err("no".into()),
        };
        assert!(!run(&c).passed);
        let c = Criterion {
            id: 0,
            name: "panics",
            budget: Duration::from_secs(1),
            run: || panic!("boom"),
        };
        let out = run(&c);
        assert!(!out.passed && out.detail.contains("boom"));
    }
}
