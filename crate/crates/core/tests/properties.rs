use proptest::prelude::*;

use pmcover::coverings::{
    covering_multiplicities, covering_number, even_covering_from_four_covering, fr_structure, is_fr_triple,
    odd_covering_from_four_covering, odd_covering_number, TauResult,
};
use pmcover::generators;
use pmcover::graph::find_bridges;
use pmcover::matchings::pm_pair_stats;
use pmcover::{enumerate_perfect_matchings, CubicGraph};

fn random_graph() -> impl Strategy<Value = CubicGraph> {
    (5usize..=8, any::<u64>()).prop_map(|(half, seed)| generators::random_bridgeless_cubic(2 * half, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn four_coverings_have_the_expected_structure(g in random_graph()) {
        let cat = enumerate_perfect_matchings(&g);
        let TauResult::Found { tau, witness } = covering_number(&g, &cat, 6).unwrap() else {
            panic!("bridgeless graphs have a covering");
        };
        if tau == 4 {
            prop_assert!(g.n() >= 12);
            let prof = covering_multiplicities(&g, &witness).unwrap();
            prop_assert!(g.is_perfect_matching(&prof.doubly_covered));
            let ms = witness.matchings();
            for i in 0..4 {
                for j in i + 1..4 {
                    prop_assert!(!ms[i].is_disjoint(&ms[j]));
                }
            }
            let idx = witness.indices().unwrap();
            for t in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
                let t = (idx[t.0], idx[t.1], idx[t.2]);
                prop_assert!(is_fr_triple(&cat, t));
                fr_structure(&g, &cat, t).unwrap();
            }
            let b = pm_pair_stats(&cat).unwrap().min_intersection;
            prop_assert!(12 * b <= g.n());
            prop_assert_eq!(odd_covering_from_four_covering(&g, &witness).unwrap().len(), 5);
            prop_assert_eq!(even_covering_from_four_covering(&g, &witness).unwrap().len(), 8);
        }
    }

    #[test]
    fn two_matchings_cover_nine_tenths(g in random_graph()) {
        let stats = pm_pair_stats(&enumerate_perfect_matchings(&g)).unwrap();
        prop_assert!(10 * stats.max_union >= 9 * g.n());
    }

    #[test]
    fn odd_coverings_have_odd_size(g in random_graph()) {
        let cat = enumerate_perfect_matchings(&g);
        if let Some(size) = odd_covering_number(&g, &cat, 7).unwrap().size() {
            prop_assert_eq!(size % 2, 1);
        }
    }

    #[test]
    fn permutation_graphs_have_index_at_most_four_or_are_petersen(
        sigma in (3usize..=8).prop_flat_map(|k| Just((0..k).collect::<Vec<_>>()).prop_shuffle())
    ) {
        let Ok(g) = generators::permutation_graph(&sigma) else {
            return Ok(());
        };
        prop_assume!(find_bridges(&g).is_empty());
        let t = covering_number(&g, &enumerate_perfect_matchings(&g), 4).unwrap();
        prop_assert!(t.tau().is_some() || g.is_petersen(), "{:?} for {:?}", t, sigma);
    }
}
