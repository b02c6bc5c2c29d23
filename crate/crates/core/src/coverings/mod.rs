//! Coverings of the edge set by perfect matchings: exact solvers and
//! verifiers.

mod fr;
mod fulkerson;
mod odd;
mod report;
mod setcover;

use serde::Serialize;
use thiserror::Error;

use crate::edgeset::EdgeSet;
use crate::graph::CubicGraph;
use crate::matchings::PmCatalog;
use crate::Deadline;

pub use fr::{find_fr_triples, fr_structure, is_fr_triple, FrStructure};
pub use fulkerson::{fulkerson_covering, fulkerson_covering_with, FulkersonResult};
pub use odd::{
    double_covering, even_covering_from_four_covering, odd_covering_exists, odd_covering_from_four_covering,
    odd_covering_number, odd_covering_number_with, reduce_odd_covering, OddResult,
};
pub use report::{analyze, check_conjectures, AnalyzeOptions, ConjectureReport, Report, Status};
pub use setcover::{covering_number, covering_number_with, find_k_covering, TauResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoveringError {
    #[error("catalog was built for a different graph")]
    CatalogMismatch,
    #[error("catalog index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("member {0} is not a perfect matching of the graph")]
    NotPerfectMatching(usize),
    #[error("edge {edge} has multiplicity {multiplicity}, not allowed for a {kind:?} covering")]
    KindViolated {
        kind: CoveringKind,
        edge: usize,
        multiplicity: u32,
    },
    #[error("a Fulkerson covering has 6 members, got {0}")]
    WrongFulkersonSize(usize),
    #[error("not a covering: edge {0} is uncovered")]
    NotACovering(usize),
    #[error("expected a 4-covering, got {0} members")]
    NotSize4(usize),
    #[error("not an odd covering: edge {0} has even multiplicity")]
    NotOdd(usize),
    #[error("triple has a common edge")]
    NotFrTriple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoveringKind {
    /// Every edge at least once.
    Plain,
    /// Every edge an odd number of times.
    Odd,
    /// Every edge an even number of times, at least twice.
    Even,
    /// Six members, every edge exactly twice.
    Fulkerson,
}

impl CoveringKind {
    fn admits(self, mult: u32) -> bool {
        match self {
            CoveringKind::Plain | CoveringKind::Fulkerson if mult == 0 => false,
            CoveringKind::Plain => true,
            CoveringKind::Odd => mult % 2 == 1,
            CoveringKind::Even => mult >= 2 && mult % 2 == 0,
            CoveringKind::Fulkerson => mult == 2,
        }
    }
}

/// A multiset of perfect matchings with its per-edge multiplicities.
///
/// Members taken from a catalog also carry their catalog indices. Every
/// constructor re-checks that each member is a perfect matching and that the
/// multiplicities satisfy the kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Covering {
    kind: CoveringKind,
    matchings: Vec<EdgeSet>,
    indices: Option<Vec<usize>>,
    multiplicity: Vec<u32>,
}

impl Covering {
    pub fn new(g: &CubicGraph, kind: CoveringKind, matchings: Vec<EdgeSet>) -> Result<Self, CoveringError> {
        for (i, pm) in matchings.iter().enumerate() {
            if !g.is_perfect_matching(pm) {
                return Err(CoveringError::NotPerfectMatching(i));
            }
        }
        let multiplicity = multiplicities(g.m(), &matchings);
        if kind == CoveringKind::Fulkerson && matchings.len() != 6 {
            return Err(CoveringError::WrongFulkersonSize(matchings.len()));
        }
        if let Some(edge) = (0..g.m()).find(|&e| !kind.admits(multiplicity[e])) {
            return Err(CoveringError::KindViolated {
                kind,
                edge,
                multiplicity: multiplicity[edge],
            });
        }
        Ok(Self {
            kind,
            matchings,
            indices: None,
            multiplicity,
        })
    }

    /// Members given by catalog index; the indices are sorted.
    pub fn from_catalog(
        catalog: &PmCatalog,
        kind: CoveringKind,
        mut indices: Vec<usize>,
    ) -> Result<Self, CoveringError> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= catalog.len()) {
            return Err(CoveringError::IndexOutOfRange(bad));
        }
        indices.sort_unstable();
        let matchings = indices.iter().map(|&i| catalog.get(i).clone()).collect();
        let mut cov = Self::new(catalog.graph(), kind, matchings)?;
        cov.indices = Some(indices);
        Ok(cov)
    }

    /// Attaches catalog indices when every member appears in the catalog.
    pub fn with_catalog_indices(mut self, catalog: &PmCatalog) -> Self {
        self.indices = self.matchings.iter().map(|pm| catalog.index_of(pm)).collect();
        self
    }

    pub fn kind(&self) -> CoveringKind {
        self.kind
    }

    pub fn matchings(&self) -> &[EdgeSet] {
        &self.matchings
    }

    pub fn indices(&self) -> Option<&[usize]> {
        self.indices.as_deref()
    }

    pub fn multiplicity(&self) -> &[u32] {
        &self.multiplicity
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Edges covered exactly `k` times.
    pub fn edges_with_multiplicity(&self, k: u32) -> EdgeSet {
        EdgeSet::from_indices(
            self.multiplicity.len(),
            (0..self.multiplicity.len()).filter(|&e| self.multiplicity[e] == k),
        )
    }
}

pub(crate) fn multiplicities(m: usize, matchings: &[EdgeSet]) -> Vec<u32> {
    let mut mult = vec![0u32; m];
    for pm in matchings {
        for e in pm {
            mult[e] += 1;
        }
    }
    mult
}

fn check_catalog(g: &CubicGraph, catalog: &PmCatalog) -> Result<(), CoveringError> {
    if catalog.belongs_to(g) {
        Ok(())
    } else {
        Err(CoveringError::CatalogMismatch)
    }
}

/// Search knobs shared by the exact solvers.
#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Prune with the incompatible-edge packing bound. Disabling it changes
    /// only the running time.
    pub lower_bound: bool,
    pub deadline: Deadline,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            lower_bound: true,
            deadline: Deadline::none(),
        }
    }
}

/// Multiplicity profile of a 4-covering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourCoveringProfile {
    pub multiplicity: Vec<u32>,
    /// Edges covered twice; always a perfect matching.
    pub doubly_covered: EdgeSet,
}

/// Multiplicities of a plain 4-covering. Each vertex sees four matchings on
/// three edges, so exactly one incident edge is covered twice and the rest
/// once; this is checked.
pub fn covering_multiplicities(g: &CubicGraph, cov: &Covering) -> Result<FourCoveringProfile, CoveringError> {
    if let Some(e) = cov.multiplicity.iter().position(|&k| k == 0) {
        return Err(CoveringError::NotACovering(e));
    }
    if cov.len() != 4 {
        return Err(CoveringError::NotSize4(cov.len()));
    }
    let doubly_covered = cov.edges_with_multiplicity(2);
    assert!(cov.multiplicity.iter().all(|&k| k == 1 || k == 2));
    assert!(g.is_perfect_matching(&doubly_covered));
    Ok(FourCoveringProfile {
        multiplicity: cov.multiplicity.clone(),
        doubly_covered,
    })
}
