use serde::Serialize;

use super::{check_catalog, Covering, CoveringError, CoveringKind, SolverOptions};
use crate::deadline::Ticker;
use crate::edgeset::EdgeSet;
use crate::graph::CubicGraph;
use crate::matchings::PmCatalog;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TauResult {
    Found { tau: usize, witness: Covering },
    /// No covering with at most `cap` matchings.
    Exceeds { cap: usize },
    /// Some edge lies in no perfect matching.
    Infeasible,
    /// The deadline passed; no covering with fewer than `above + 1`
    /// matchings exists.
    TimedOut { above: usize },
}

impl TauResult {
    pub fn tau(&self) -> Option<usize> {
        match self {
            TauResult::Found { tau, .. } => Some(*tau),
            _ => None,
        }
    }
}

/// Branch-and-bound search for covers of an edge set by distinct catalog
/// members.
pub(crate) struct CoverSearch<'a> {
    pms: &'a [EdgeSet],
    inc: Vec<EdgeSet>,
    half: usize,
    lower_bound: bool,
    ticker: Ticker,
}

impl<'a> CoverSearch<'a> {
    pub(crate) fn new(catalog: &'a PmCatalog, opts: &SolverOptions) -> Self {
        Self {
            pms: catalog.matchings(),
            inc: catalog.edge_incidence(),
            half: catalog.graph().n() / 2,
            lower_bound: opts.lower_bound,
            ticker: Ticker::new(opts.deadline),
        }
    }

    pub(crate) fn timed_out(&self) -> bool {
        self.ticker.expired()
    }

    fn count(&self) -> usize {
        self.pms.len()
    }

    /// Whether at most `r` members from `allowed` cover `uncovered`.
    pub(crate) fn feasible(&mut self, uncovered: &EdgeSet, allowed: &EdgeSet, r: usize) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if r == 0 || self.ticker.tick() {
            return false;
        }
        let mut best = (usize::MAX, usize::MAX);
        for e in uncovered {
            let c = self.inc[e].intersection_len(allowed);
            if c == 0 {
                return false;
            }
            if c < best.0 {
                best = (c, e);
            }
        }
        if r == 1 {
            let mut acc = allowed.clone();
            for e in uncovered {
                acc.intersect_with(&self.inc[e]);
                if acc.is_empty() {
                    return false;
                }
            }
            return true;
        }
        if self.lower_bound && self.bound(uncovered, allowed) > r {
            return false;
        }
        let branch = self.inc[best.1].intersection(allowed);
        let mut rest = allowed.clone();
        for p in &branch {
            rest.remove(p);
            let next = uncovered.difference(&self.pms[p]);
            if self.feasible(&next, &rest, r - 1) {
                return true;
            }
            if self.ticker.expired() {
                return false;
            }
        }
        false
    }

    /// A lower bound on the members needed: pairwise incompatible edges
    /// (no allowed member holds both) each need their own member, and one
    /// member covers at most n/2 edges.
    fn bound(&self, uncovered: &EdgeSet, allowed: &EdgeSet) -> usize {
        let by_size = uncovered.len().div_ceil(self.half.max(1));
        let mut order: Vec<(usize, usize)> = uncovered
            .iter()
            .map(|e| (self.inc[e].intersection_len(allowed), e))
            .collect();
        order.sort_unstable();
        let mut packed: Vec<usize> = Vec::new();
        for (_, e) in order {
            if packed
                .iter()
                .all(|&f| !allowed.meets_both(&self.inc[e], &self.inc[f]))
            {
                packed.push(e);
            }
        }
        by_size.max(packed.len())
    }

    /// The lexicographically smallest set of exactly `k` distinct indices
    /// covering every edge, if any.
    pub(crate) fn lex_smallest(&mut self, k: usize, width: usize) -> Option<Vec<usize>> {
        let p = self.count();
        let mut chosen = Vec::with_capacity(k);
        let mut uncovered = EdgeSet::full(width);
        let mut next = 0;
        for j in 0..k {
            let rem = k - j - 1;
            let mut placed = false;
            for i in next..p {
                if p - i - 1 < rem {
                    break;
                }
                let after = uncovered.difference(&self.pms[i]);
                let allowed = EdgeSet::from_range(p, i + 1);
                if self.feasible(&after, &allowed, rem) {
                    chosen.push(i);
                    uncovered = after;
                    next = i + 1;
                    placed = true;
                    break;
                }
                if self.timed_out() {
                    return None;
                }
            }
            if !placed {
                return None;
            }
        }
        Some(chosen)
    }
}

/// The perfect matching index: the fewest catalog members whose union is
/// every edge, with the lexicographically smallest such index set.
pub fn covering_number(g: &CubicGraph, catalog: &PmCatalog, cap: usize) -> Result<TauResult, CoveringError> {
    covering_number_with(g, catalog, cap, &SolverOptions::default())
}

pub fn covering_number_with(
    g: &CubicGraph,
    catalog: &PmCatalog,
    cap: usize,
    opts: &SolverOptions,
) -> Result<TauResult, CoveringError> {
    check_catalog(g, catalog)?;
    let inc = catalog.edge_incidence();
    if inc.iter().any(EdgeSet::is_empty) {
        return Ok(TauResult::Infeasible);
    }
    let mut search = CoverSearch::new(catalog, opts);
    let all = EdgeSet::full(catalog.len());
    let full = g.edge_set();
    for k in 1..=cap.min(catalog.len()) {
        if search.feasible(&full, &all, k) {
            let Some(indices) = search.lex_smallest(k, g.m()) else {
                assert!(search.timed_out(), "a cover of this size was just found");
                return Ok(TauResult::TimedOut { above: k - 1 });
            };
            let witness = Covering::from_catalog(catalog, CoveringKind::Plain, indices)?;
            return Ok(TauResult::Found { tau: k, witness });
        }
        if search.timed_out() {
            return Ok(TauResult::TimedOut { above: k - 1 });
        }
    }
    Ok(TauResult::Exceeds { cap })
}

/// The lexicographically smallest covering by exactly `k` distinct catalog
/// members, if one exists.
pub fn find_k_covering(g: &CubicGraph, catalog: &PmCatalog, k: usize) -> Result<Option<Covering>, CoveringError> {
    check_catalog(g, catalog)?;
    let mut search = CoverSearch::new(catalog, &SolverOptions::default());
    match search.lex_smallest(k, g.m()) {
        Some(indices) => Ok(Some(Covering::from_catalog(catalog, CoveringKind::Plain, indices)?)),
        None => Ok(None),
    }
}
