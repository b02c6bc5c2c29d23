//! Perfect matching enumeration and pairwise statistics.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::edgeset::EdgeSet;
use crate::graph::CubicGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("catalog has fewer than two perfect matchings")]
    FewerThanTwoMatchings,
    #[error("more than {0} perfect matchings")]
    TooManyMatchings(usize),
}

/// Every perfect matching of one graph, each once, in ascending order of
/// their sorted edge-index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmCatalog {
    graph: CubicGraph,
    matchings: Vec<EdgeSet>,
}

impl PmCatalog {
    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    pub fn matchings(&self) -> &[EdgeSet] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn get(&self, i: usize) -> &EdgeSet {
        &self.matchings[i]
    }

    pub fn belongs_to(&self, g: &CubicGraph) -> bool {
        self.graph == *g
    }

    pub fn index_of(&self, pm: &EdgeSet) -> Option<usize> {
        self.matchings.binary_search(pm).ok()
    }

    /// For each edge, the set of catalog indices containing it (a bit set of
    /// width `len()`).
    pub fn edge_incidence(&self) -> Vec<EdgeSet> {
        let mut out = vec![EdgeSet::empty(self.len()); self.graph.m()];
        for (i, pm) in self.matchings.iter().enumerate() {
            for e in pm {
                out[e].insert(i);
            }
        }
        out
    }

    /// One line per matching, edges as `u-v` in ascending order.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for pm in &self.matchings {
            out.push_str(&format_matching(&self.graph, pm));
            out.push('\n');
        }
        out
    }
}

/// Space-separated `u-v` pairs in ascending edge order.
pub fn format_matching(g: &CubicGraph, pm: &EdgeSet) -> String {
    let mut line = String::new();
    for (k, e) in pm.iter().enumerate() {
        let (u, v) = g.edge(e);
        if k > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{u}-{v}");
    }
    line
}

pub fn enumerate_perfect_matchings(g: &CubicGraph) -> PmCatalog {
    enumerate_perfect_matchings_capped(g, None).expect("no cap given")
}

/// As [`enumerate_perfect_matchings`], aborting once more than `cap`
/// matchings have been found.
pub fn enumerate_perfect_matchings_capped(
    g: &CubicGraph,
    cap: Option<usize>,
) -> Result<PmCatalog, MatchingError> {
    let mut state = Enumerator {
        g,
        saturated: vec![false; g.n()],
        current: g.empty_edge_set(),
        out: Vec::new(),
        cap,
    };
    if g.n() > 0 {
        state.run()?;
    } else {
        state.out.push(g.empty_edge_set());
    }
    let mut matchings = state.out;
    matchings.sort();
    Ok(PmCatalog {
        graph: g.clone(),
        matchings,
    })
}

struct Enumerator<'a> {
    g: &'a CubicGraph,
    saturated: Vec<bool>,
    current: EdgeSet,
    out: Vec<EdgeSet>,
    cap: Option<usize>,
}

impl Enumerator<'_> {
    fn run(&mut self) -> Result<(), MatchingError> {
        let Some(v) = self.saturated.iter().position(|&s| !s) else {
            if self.cap.is_some_and(|c| self.out.len() >= c) {
                return Err(MatchingError::TooManyMatchings(self.cap.unwrap_or(0)));
            }
            self.out.push(self.current.clone());
            return Ok(());
        };
        for e in self.g.incident(v) {
            let w = self.g.other_end(e, v);
            if self.saturated[w] {
                continue;
            }
            self.saturated[v] = true;
            self.saturated[w] = true;
            self.current.insert(e);
            if !self.stranded(v) && !self.stranded(w) {
                self.run()?;
            }
            self.current.remove(e);
            self.saturated[v] = false;
            self.saturated[w] = false;
        }
        Ok(())
    }

    /// Whether some unsaturated neighbour of `v` has lost all its options.
    fn stranded(&self, v: usize) -> bool {
        self.g.neighbors(v).into_iter().any(|x| {
            !self.saturated[x]
                && self
                    .g
                    .neighbors(x)
                    .into_iter()
                    .all(|y| self.saturated[y])
        })
    }
}

/// Edges lying in no catalog member.
pub fn edges_missing_from_all_pms(catalog: &PmCatalog) -> EdgeSet {
    let mut union = catalog.graph.empty_edge_set();
    for pm in catalog.matchings() {
        union.union_with(pm);
    }
    union.complement()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairStats {
    /// Smallest `|M_i ∩ M_j|`, the balanced-matching number b.
    pub min_intersection: usize,
    pub min_pair: (usize, usize),
    pub max_union: usize,
    pub max_pair: (usize, usize),
}

/// Exact extremes over all unordered pairs of distinct catalog members, with
/// the lexicographically smallest witnessing pairs.
pub fn pm_pair_stats(catalog: &PmCatalog) -> Result<PairStats, MatchingError> {
    let p = catalog.len();
    if p < 2 {
        return Err(MatchingError::FewerThanTwoMatchings);
    }
    let half = catalog.graph.n() / 2;
    let mut stats = PairStats {
        min_intersection: usize::MAX,
        min_pair: (0, 1),
        max_union: 0,
        max_pair: (0, 1),
    };
    for i in 0..p {
        for j in i + 1..p {
            let common = catalog.get(i).intersection(catalog.get(j)).len();
            let union = 2 * half - common;
            if common < stats.min_intersection {
                stats.min_intersection = common;
                stats.min_pair = (i, j);
            }
            if union > stats.max_union {
                stats.max_union = union;
                stats.max_pair = (i, j);
            }
        }
    }
    Ok(stats)
}
