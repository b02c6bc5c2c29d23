use serde::Serialize;

use super::{check_catalog, Covering, CoveringError, CoveringKind, SolverOptions};
use crate::deadline::Ticker;
use crate::edgeset::EdgeSet;
use crate::graph::CubicGraph;
use crate::matchings::PmCatalog;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FulkersonResult {
    Found { witness: Covering },
    /// The search was exhaustive and no six matchings cover every edge
    /// exactly twice.
    NotFound,
    TimedOut,
}

impl FulkersonResult {
    pub fn is_found(&self) -> bool {
        matches!(self, FulkersonResult::Found { .. })
    }
}

struct Search<'a> {
    pms: &'a [EdgeSet],
    inc: Vec<EdgeSet>,
    mult: Vec<u8>,
    used: Vec<u8>,
    saturated: EdgeSet,
    ticker: Ticker,
}

impl Search<'_> {
    fn push(&mut self, p: usize) {
        self.used[p] += 1;
        for e in &self.pms[p] {
            self.mult[e] += 1;
            if self.mult[e] == 2 {
                self.saturated.insert(e);
            }
        }
    }

    fn pop(&mut self, p: usize) {
        self.used[p] -= 1;
        for e in &self.pms[p] {
            self.mult[e] -= 1;
            self.saturated.remove(e);
        }
    }

    fn addable(&self, p: usize) -> bool {
        self.used[p] < 2 && self.pms[p].is_disjoint(&self.saturated)
    }

    /// Whether `r` more members drawn from `allowed` (repeats allowed up to
    /// twice overall) bring every edge to multiplicity two.
    fn feasible(&mut self, r: usize, allowed: &EdgeSet) -> bool {
        if self.ticker.tick() {
            return false;
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for e in 0..self.mult.len() {
            if self.mult[e] == 2 {
                continue;
            }
            let cands: Vec<usize> = self.inc[e]
                .intersection(allowed)
                .iter()
                .filter(|&p| self.addable(p))
                .collect();
            let capacity: usize = cands.iter().map(|&p| 2 - self.used[p] as usize).sum();
            if capacity < 2 - self.mult[e] as usize {
                return false;
            }
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                best = Some((e, cands));
            }
        }
        let Some((_, cands)) = best else {
            return r == 0;
        };
        if r == 0 {
            return false;
        }
        let mut allowed = allowed.clone();
        for p in cands {
            self.push(p);
            let ok = self.feasible(r - 1, &allowed);
            self.pop(p);
            if ok {
                return true;
            }
            if self.ticker.expired() {
                return false;
            }
            // Every solution using p was covered by the branch just tried.
            allowed.remove(p);
        }
        false
    }
}

/// A Fulkerson covering: six catalog members, each index at most twice,
/// covering every edge exactly twice. The witness is the lexicographically
/// smallest sorted index list.
pub fn fulkerson_covering(g: &CubicGraph, catalog: &PmCatalog) -> Result<FulkersonResult, CoveringError> {
    fulkerson_covering_with(g, catalog, &SolverOptions::default())
}

pub fn fulkerson_covering_with(
    g: &CubicGraph,
    catalog: &PmCatalog,
    opts: &SolverOptions,
) -> Result<FulkersonResult, CoveringError> {
    check_catalog(g, catalog)?;
    let p = catalog.len();
    let mut s = Search {
        pms: catalog.matchings(),
        inc: catalog.edge_incidence(),
        mult: vec![0; g.m()],
        used: vec![0; p],
        saturated: g.empty_edge_set(),
        ticker: Ticker::new(opts.deadline),
    };
    if !s.feasible(6, &EdgeSet::full(p)) {
        return Ok(if s.ticker.expired() {
            FulkersonResult::TimedOut
        } else {
            FulkersonResult::NotFound
        });
    }
    let mut chosen = Vec::with_capacity(6);
    for slot in 0..6 {
        let lo = chosen.last().copied().unwrap_or(0);
        let mut placed = false;
        for v in lo..p {
            if !s.addable(v) {
                continue;
            }
            s.push(v);
            if s.feasible(5 - slot, &EdgeSet::from_range(p, v)) {
                chosen.push(v);
                placed = true;
                break;
            }
            s.pop(v);
            if s.ticker.expired() {
                return Ok(FulkersonResult::TimedOut);
            }
        }
        assert!(placed, "a completion was shown to exist");
    }
    let witness = Covering::from_catalog(catalog, CoveringKind::Fulkerson, chosen)?;
    Ok(FulkersonResult::Found { witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::tau5odd_example;
    use crate::generators;
    use crate::matchings::enumerate_perfect_matchings;
    use crate::Deadline;

    fn indices(g: &CubicGraph) -> Option<Vec<usize>> {
        let cat = enumerate_perfect_matchings(g);
        match fulkerson_covering(g, &cat).unwrap() {
            FulkersonResult::Found { witness } => Some(witness.indices().unwrap().to_vec()),
            FulkersonResult::NotFound => None,
            FulkersonResult::TimedOut => unreachable!(),
        }
    }

    /// First nondecreasing 6-sequence (each value at most twice) with all
    /// multiplicities equal to two.
    fn exhaustive(cat: &PmCatalog) -> Option<Vec<usize>> {
        fn rec(cat: &PmCatalog, pick: &mut Vec<usize>) -> bool {
            if pick.len() == 6 {
                let mut mult = vec![0; cat.graph().m()];
                for &i in pick.iter() {
                    for e in cat.get(i) {
                        mult[e] += 1;
                    }
                }
                return mult.iter().all(|&k| k == 2);
            }
            let lo = pick.last().copied().unwrap_or(0);
            for v in lo..cat.len() {
                if pick.iter().filter(|&&x| x == v).count() == 2 {
                    continue;
                }
                pick.push(v);
                if rec(cat, pick) {
                    return true;
                }
                pick.pop();
            }
            false
        }
        let mut pick = Vec::new();
        rec(cat, &mut pick).then_some(pick)
    }

    #[test]
    fn petersen_uses_all_six() {
        assert_eq!(indices(&generators::petersen()), Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn k4_doubles_its_coloring() {
        assert_eq!(indices(&generators::k4()), Some(vec![0, 0, 1, 1, 2, 2]));
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut graphs = vec![generators::k33(), generators::prism(3).unwrap(), generators::prism(4).unwrap()];
        for seed in 0..30 {
            graphs.push(generators::random_bridgeless_cubic(10 + 2 * (seed as usize % 2), seed).unwrap());
        }
        for g in graphs {
            let cat = enumerate_perfect_matchings(&g);
            assert_eq!(indices(&g), exhaustive(&cat));
        }
    }

    #[test]
    fn snarks_have_one() {
        for g in [generators::blanusa1(), generators::flower_snark(5).unwrap(), tau5odd_example()] {
            let cov = indices(&g).expect("Fulkerson covering");
            assert_eq!(cov.len(), 6);
        }
    }

    #[test]
    fn bridged_graph_has_none() {
        assert_eq!(indices(&generators::bridged_k4_pair()), None);
    }

    #[test]
    fn expired_deadline_times_out() {
        let g = generators::flower_snark(7).unwrap();
        let cat = enumerate_perfect_matchings(&g);
        let opts = SolverOptions {
            deadline: Deadline::at(std::time::Instant::now()),
            ..Default::default()
        };
        let r = fulkerson_covering_with(&g, &cat, &opts).unwrap();
        assert!(matches!(r, FulkersonResult::TimedOut | FulkersonResult::Found { .. }));
    }
}
