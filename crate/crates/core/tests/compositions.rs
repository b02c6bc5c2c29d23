use pmcover::compositions::{k4_composition, tau5odd_example, three_cut_join, two_cut_join};
use pmcover::coverings::{covering_number, odd_covering_exists, odd_covering_number, OddResult, TauResult};
use pmcover::generators;
use pmcover::graph::{cyclic_connectivity_at_least, find_bridges};
use pmcover::{enumerate_perfect_matchings, CubicGraph, EdgeSet, PmCatalog};

fn tau(g: &CubicGraph, cap: usize) -> TauResult {
    covering_number(g, &enumerate_perfect_matchings(g), cap).unwrap()
}

#[test]
fn two_cut_joins() {
    let p = generators::petersen();
    let pp = two_cut_join(&p, 0, &p, 0).unwrap().graph;
    assert_eq!(pp.n(), 20);
    assert_eq!(tau(&pp, 4), TauResult::Exceeds { cap: 4 });
    let k = generators::k4();
    let kk = two_cut_join(&k, 0, &k, 0).unwrap().graph;
    assert_eq!(kk.n(), 8);
    assert_eq!(tau(&kk, 6).tau(), Some(3));
    for g in [&pp, &kk] {
        assert!(!cyclic_connectivity_at_least(g, 3).unwrap());
    }
}

#[test]
fn three_cut_joins() {
    let p = generators::petersen();
    let pk33 = three_cut_join(&p, 0, &generators::k33(), 0).unwrap().graph;
    assert!(find_bridges(&pk33).is_empty());
    assert_eq!(tau(&pk33, 4), TauResult::Exceeds { cap: 4 });
    let pk4 = three_cut_join(&p, 0, &generators::k4(), 0).unwrap().graph;
    assert_eq!(pk4.n(), 12);
    assert_eq!(tau(&pk4, 3), TauResult::Exceeds { cap: 3 });
}

#[test]
fn petersen_join_k33_has_no_odd_covering() {
    let g = three_cut_join(&generators::petersen(), 0, &generators::k33(), 0).unwrap().graph;
    let cat = enumerate_perfect_matchings(&g);
    assert!(!odd_covering_exists(&cat));
    assert_eq!(odd_covering_number(&g, &cat, 7).unwrap(), OddResult::NoneExists);
}

#[test]
fn k4_compositions() {
    let k = generators::k4();
    let g = k4_composition([(&k, 0), (&k, 0), (&k, 0), (&k, 0)]).unwrap().graph;
    assert_eq!(tau(&g, 6).tau(), Some(3));
    let ex = tau5odd_example();
    assert_eq!(ex.n(), 20);
    assert_eq!(tau(&ex, 4), TauResult::Exceeds { cap: 4 });
}

#[test]
fn example_odd_index_is_not_five() {
    let g = tau5odd_example();
    assert_eq!(odd_covering_number(&g, &enumerate_perfect_matchings(&g), 5).unwrap(), OddResult::Exceeds { cap: 5 });
}

#[test]
fn two_cut_join_does_not_lower_the_index() {
    let left = [
        generators::petersen(),
        generators::k4(),
        generators::k33(),
        generators::prism(5).unwrap(),
    ];
    for (i, g1) in left.iter().enumerate() {
        let k = tau(g1, 6).tau().unwrap();
        for seed in 0..6u64 {
            let g2 = generators::random_bridgeless_cubic(8 + 2 * (seed as usize % 3), seed + 100 * i as u64).unwrap();
            for (e1, e2) in [(0, 0), (g1.m() - 1, 3), (4, g2.m() - 1)] {
                let joined = two_cut_join(g1, e1, &g2, e2).unwrap().graph;
                assert!(joined.n() <= 24);
                let t = tau(&joined, 6);
                assert!(t.tau().is_none_or(|t| t >= k), "{t:?} < {k}");
            }
        }
    }
}

/// Every covering of `g1 ⊗ g2` by fewer than `τ(g1)` matchings has a
/// member containing the whole principal cut.
#[test]
fn small_coverings_of_three_cut_joins_contain_the_cut() {
    fn coverings(cat: &PmCatalog, k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            let mut u = cat.graph().empty_edge_set();
            for &i in pick.iter() {
                u.union_with(cat.get(i));
            }
            if u.is_full() {
                out.push(pick.clone());
            }
            return;
        }
        for i in start..cat.len() {
            pick.push(i);
            coverings(cat, k, i + 1, pick, out);
            pick.pop();
        }
    }
    let p = generators::petersen();
    let mut checked = 0;
    for g2 in [generators::k4(), generators::k33(), generators::prism(3).unwrap(), generators::petersen()] {
        for v2 in 0..g2.n().min(3) {
            let comp = three_cut_join(&p, 0, &g2, v2).unwrap();
            let cut: &EdgeSet = &comp.cuts[0];
            let cat = enumerate_perfect_matchings(&comp.graph);
            for k in 3..5 {
                let mut found = Vec::new();
                coverings(&cat, k, 0, &mut Vec::new(), &mut found);
                for cov in found {
                    assert!(cov.iter().any(|&i| cut.is_subset(cat.get(i))));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}
