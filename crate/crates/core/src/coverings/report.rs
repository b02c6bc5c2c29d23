use serde::Serialize;

use super::{
    check_catalog, covering_number, covering_number_with, find_fr_triples, fulkerson_covering, fulkerson_covering_with,
    odd_covering_number_with, CoveringError, FulkersonResult, OddResult, SolverOptions, TauResult,
};
use crate::edgeset::EdgeSet;
use crate::graph::{cyclic_connectivity_at_least, find_bridges, CubicGraph};
use crate::matchings::{enumerate_perfect_matchings_capped, pm_pair_stats, PmCatalog};
use crate::Deadline;

/// The per-instance conjecture predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// Five perfect matchings cover the edges.
    pub berge_5: bool,
    /// A Fulkerson covering exists.
    pub fulkerson: bool,
    /// Three perfect matchings have no common edge.
    pub fr_triple: bool,
    /// Fewest perfect matchings with empty common intersection.
    pub k_disjoint_intersection: Option<usize>,
}

pub fn check_conjectures(g: &CubicGraph, catalog: &PmCatalog) -> Result<ConjectureReport, CoveringError> {
    check_catalog(g, catalog)?;
    Ok(ConjectureReport {
        berge_5: covering_number(g, catalog, 5)?.tau().is_some(),
        fulkerson: fulkerson_covering(g, catalog)?.is_found(),
        fr_triple: !find_fr_triples(catalog, 1).is_empty(),
        k_disjoint_intersection: smallest_empty_intersection(catalog),
    })
}

/// Iterative deepening: some member must avoid the smallest edge still in
/// the running intersection.
fn smallest_empty_intersection(catalog: &PmCatalog) -> Option<usize> {
    fn rec(pms: &[EdgeSet], inter: &EdgeSet, r: usize) -> bool {
        let Some(e) = inter.first() else {
            return true;
        };
        r > 0
            && pms
                .iter()
                .filter(|pm| !pm.contains(e))
                .any(|pm| rec(pms, &inter.intersection(pm), r - 1))
    }
    if catalog.is_empty() {
        return None;
    }
    let pms = catalog.matchings();
    let full = catalog.graph().edge_set();
    (1..=pms.len()).find(|&k| rec(pms, &full, k))
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub tau_cap: usize,
    pub odd_cap: usize,
    pub deadline: Deadline,
    /// Give up on graphs with more perfect matchings than this.
    pub max_pm: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            tau_cap: 6,
            odd_cap: 7,
            deadline: Deadline::none(),
            max_pm: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Exceeds,
    Infeasible,
    NoneExists,
    TimedOut,
    Skipped,
}

/// One graph's invariants. Fields are null when the corresponding search
/// was skipped, exceeded its cap or ran out of time; the status fields say
/// which.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub pm_count: Option<usize>,
    pub tau: Option<usize>,
    pub tau_cap: usize,
    pub tau_status: Status,
    pub tau_odd: Option<usize>,
    pub tau_odd_count: Option<u64>,
    pub tau_odd_status: Status,
    pub fulkerson: Option<bool>,
    pub berge5: Option<bool>,
    pub fr_triple: Option<bool>,
    pub b: Option<usize>,
    pub max_two_pm_union: Option<usize>,
    pub bridges: usize,
    pub cyclically4ec: Option<bool>,
}

pub fn analyze(g: &CubicGraph, opts: &AnalyzeOptions) -> Report {
    let mut report = Report {
        n: g.n(),
        m: g.m(),
        pm_count: None,
        tau: None,
        tau_cap: opts.tau_cap,
        tau_status: Status::Skipped,
        tau_odd: None,
        tau_odd_count: None,
        tau_odd_status: Status::Skipped,
        fulkerson: None,
        berge5: None,
        fr_triple: None,
        b: None,
        max_two_pm_union: None,
        bridges: find_bridges(g).len(),
        cyclically4ec: cyclic_connectivity_at_least(g, 4).ok(),
    };
    let Ok(catalog) = enumerate_perfect_matchings_capped(g, opts.max_pm) else {
        return report;
    };
    report.pm_count = Some(catalog.len());
    if let Ok(stats) = pm_pair_stats(&catalog) {
        report.b = Some(stats.min_intersection);
        report.max_two_pm_union = Some(stats.max_union);
    }
    report.fr_triple = Some(!find_fr_triples(&catalog, 1).is_empty());

    let solver = SolverOptions {
        deadline: opts.deadline,
        ..Default::default()
    };
    let run = |cap| covering_number_with(g, &catalog, cap, &solver).expect("catalog built from g");
    let tau = run(opts.tau_cap);
    (report.tau_status, report.tau) = match tau {
        TauResult::Found { tau, .. } => (Status::Exact, Some(tau)),
        TauResult::Exceeds { .. } => (Status::Exceeds, None),
        TauResult::Infeasible => (Status::Infeasible, None),
        TauResult::TimedOut { .. } => (Status::TimedOut, None),
    };
    report.berge5 = match tau {
        TauResult::Found { tau, .. } => Some(tau <= 5),
        TauResult::Infeasible => Some(false),
        TauResult::Exceeds { cap } if cap >= 5 => Some(false),
        TauResult::Exceeds { .. } => match run(5) {
            TauResult::Found { .. } => Some(true),
            TauResult::Exceeds { .. } => Some(false),
            _ => None,
        },
        TauResult::TimedOut { above } => (above >= 5).then_some(false),
    };

    match odd_covering_number_with(g, &catalog, opts.odd_cap, &solver).expect("catalog built from g") {
        OddResult::Found { size, count_minimum, .. } => {
            report.tau_odd_status = Status::Exact;
            report.tau_odd = Some(size);
            report.tau_odd_count = count_minimum;
        }
        OddResult::NoneExists => report.tau_odd_status = Status::NoneExists,
        OddResult::Exceeds { .. } => report.tau_odd_status = Status::Exceeds,
        OddResult::TimedOut { .. } => report.tau_odd_status = Status::TimedOut,
    }

    report.fulkerson = match fulkerson_covering_with(g, &catalog, &solver).expect("catalog built from g") {
        FulkersonResult::Found { .. } => Some(true),
        FulkersonResult::NotFound => Some(false),
        FulkersonResult::TimedOut => None,
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::tau5odd_example;
    use crate::generators;
    use crate::matchings::enumerate_perfect_matchings;

    fn conjectures(g: &CubicGraph) -> ConjectureReport {
        check_conjectures(g, &enumerate_perfect_matchings(g)).unwrap()
    }

    #[test]
    fn petersen_predicates() {
        let r = conjectures(&generators::petersen());
        assert!(r.berge_5 && r.fulkerson && r.fr_triple);
        assert_eq!(r.k_disjoint_intersection, Some(3));
    }

    #[test]
    fn k4_predicates() {
        let r = conjectures(&generators::k4());
        assert!(r.berge_5 && r.fulkerson && r.fr_triple);
        assert_eq!(r.k_disjoint_intersection, Some(2));
    }

    #[test]
    fn blanusa_predicates() {
        let r = conjectures(&generators::blanusa1());
        assert!(r.berge_5 && r.fr_triple);
    }

    #[test]
    fn smallest_intersection_matches_brute_force() {
        for seed in 0..20 {
            let g = generators::random_bridgeless_cubic(12, seed).unwrap();
            let cat = enumerate_perfect_matchings(&g);
            let p = cat.len();
            let brute = (1..=p.min(4)).find(|&k| {
                (0u32..1 << p).filter(|s| s.count_ones() as usize == k).any(|s| {
                    let mut inter = g.edge_set();
                    for i in (0..p).filter(|i| s >> i & 1 == 1) {
                        inter.intersect_with(cat.get(i));
                    }
                    inter.is_empty()
                })
            });
            assert_eq!(smallest_empty_intersection(&cat), brute);
        }
    }

    #[test]
    fn analyze_tau5odd() {
        let r = analyze(&tau5odd_example(), &AnalyzeOptions::default());
        assert_eq!(r.pm_count, Some(20));
        assert_eq!((r.tau, r.tau_status), (Some(5), Status::Exact));
        assert_eq!((r.tau_odd, r.tau_odd_count), (Some(7), Some(64)));
        assert_eq!(r.berge5, Some(true));
        assert_eq!(r.bridges, 0);
    }

    #[test]
    fn analyze_petersen_and_bridged() {
        let r = analyze(&generators::petersen(), &AnalyzeOptions::default());
        assert_eq!(r.tau_odd_status, Status::NoneExists);
        assert_eq!((r.b, r.max_two_pm_union), (Some(1), Some(9)));
        assert_eq!(r.cyclically4ec, Some(true));
        let r = analyze(&generators::bridged_k4_pair(), &AnalyzeOptions::default());
        assert_eq!(r.bridges, 1);
        assert_eq!(r.tau_status, Status::Infeasible);
        assert_eq!(r.berge5, Some(false));
        assert_eq!(r.fulkerson, Some(false));
    }

    #[test]
    fn analyze_respects_pm_cap() {
        let opts = AnalyzeOptions {
            max_pm: Some(5),
            ..Default::default()
        };
        let r = analyze(&generators::petersen(), &opts);
        assert_eq!(r.pm_count, None);
        assert_eq!(r.tau_status, Status::Skipped);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["tau"].is_null());
    }
}
