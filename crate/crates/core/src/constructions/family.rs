use serde::Serialize;

use super::{arcs_between, ConstructionError, GoodPairCert};
use crate::coverings::{Covering, CoveringKind};
use crate::edgeset::EdgeSet;
use crate::graph::{CubicGraph, TwoFactor};

/// Three (good) or four (nice) pairwise disjoint `M`-balanced matchings,
/// each with a perfect matching witnessing its balance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCert {
    pub base: EdgeSet,
    pub parts: Vec<EdgeSet>,
    /// `witnesses[i] ∩ base == parts[i]`.
    pub witnesses: Vec<EdgeSet>,
}

impl FamilyCert {
    pub fn is_nice(&self) -> bool {
        self.parts.len() == 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum FamilyViolation {
    Disjointness { parts: (usize, usize) },
    WitnessNotPerfectMatching { part: usize },
    WitnessMismatch { part: usize },
    /// An odd cycle of `G - M` does not meet each part in exactly one
    /// vertex, or the paths those vertices cut have the wrong parities.
    ConditionOne { cycle: usize },
    /// An even cycle of `G - M` is touched by all but at most one part.
    ConditionTwo { cycle: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub valid: bool,
    pub violated: Option<FamilyViolation>,
}

/// Vertices of `cycle` incident with an edge of `part`.
fn touching(g: &CubicGraph, tf: &TwoFactor, cycle: usize, part: &EdgeSet) -> Vec<usize> {
    tf.cycles[cycle]
        .vertices
        .iter()
        .copied()
        .filter(|&v| g.incident(v).iter().any(|&e| part.contains(e)))
        .collect()
}

fn first_violation(g: &CubicGraph, tf: &TwoFactor, cert: &FamilyCert) -> Option<FamilyViolation> {
    let k = cert.parts.len();
    for i in 0..k {
        for j in i + 1..k {
            if !cert.parts[i].is_disjoint(&cert.parts[j]) {
                return Some(FamilyViolation::Disjointness { parts: (i, j) });
            }
        }
    }
    for (part, w) in cert.witnesses.iter().enumerate() {
        if !g.is_perfect_matching(w) {
            return Some(FamilyViolation::WitnessNotPerfectMatching { part });
        }
        if w.intersection(&cert.base) != cert.parts[part] {
            return Some(FamilyViolation::WitnessMismatch { part });
        }
    }
    for (cycle, c) in tf.cycles.iter().enumerate() {
        let touch: Vec<Vec<usize>> = cert.parts.iter().map(|p| touching(g, tf, cycle, p)).collect();
        if c.is_odd() {
            if touch.iter().any(|t| t.len() != 1) {
                return Some(FamilyViolation::ConditionOne { cycle });
            }
            let points: Vec<usize> = touch.iter().map(|t| tf.locate(t[0]).1).collect();
            let mut sorted = points.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != k {
                return Some(FamilyViolation::ConditionOne { cycle });
            }
            let odd = arcs_between(c.len(), points).iter().filter(|&&l| l % 2 == 1).count();
            // Four arcs on an odd cycle have an odd number of odd arcs, so
            // two vertex-disjoint odd arcs means at least three odd ones.
            if odd < 3 {
                return Some(FamilyViolation::ConditionOne { cycle });
            }
        } else if touch.iter().filter(|t| t.is_empty()).count() < 2 {
            return Some(FamilyViolation::ConditionTwo { cycle });
        }
    }
    None
}

fn well_formed(g: &CubicGraph, cert: &FamilyCert) -> Result<TwoFactor, ConstructionError> {
    let malformed = |s: &str| Err(ConstructionError::MalformedCert(s.to_string()));
    if !matches!(cert.parts.len(), 3 | 4) {
        return malformed("a family has three or four parts");
    }
    if cert.witnesses.len() != cert.parts.len() {
        return malformed("one witness per part is required");
    }
    let m = g.m();
    if std::iter::once(&cert.base).chain(&cert.parts).chain(&cert.witnesses).any(|s| s.width() != m) {
        return malformed("edge sets have the wrong width");
    }
    if !cert.parts.iter().all(|p| p.is_subset(&cert.base)) {
        return malformed("parts must lie in the base matching");
    }
    g.two_factor_of(&cert.base)
        .or_else(|_| malformed("base is not a perfect matching"))
}

/// Checks a good (three parts) or nice (four parts) family against the
/// cycles of `G - M`.
pub fn verify_family(g: &CubicGraph, cert: &FamilyCert) -> Result<FamilyCheck, ConstructionError> {
    let tf = well_formed(g, cert)?;
    let violated = first_violation(g, &tf, cert);
    Ok(FamilyCheck {
        valid: violated.is_none(),
        violated,
    })
}

/// The covering `{M, M_A, M_B, M_C}` of a good family, or
/// `{M, M_A, M_B, M_C, M_D}` of a nice one.
///
/// Each witness is already forced on odd cycles. On an even cycle, the two
/// lowest-indexed witnesses not touching it are rewritten so that the first
/// takes the alternating class containing the cycle's lowest edge and the
/// second the other class.
pub fn covering_from_family(g: &CubicGraph, cert: &FamilyCert) -> Result<Covering, ConstructionError> {
    let tf = well_formed(g, cert)?;
    if let Some(v) = first_violation(g, &tf, cert) {
        return Err(ConstructionError::InvalidFamily(v));
    }
    let mut ws = cert.witnesses.clone();
    for cycle in tf.even_cycles() {
        let c = &tf.cycles[cycle];
        let eligible: Vec<usize> = (0..cert.parts.len())
            .filter(|&i| touching(g, &tf, cycle, &cert.parts[i]).is_empty())
            .take(2)
            .collect();
        let (mut x, mut y) = c.alternating_classes();
        if y.iter().min() < x.iter().min() {
            std::mem::swap(&mut x, &mut y);
        }
        for (&w, class) in eligible.iter().zip([x, y]) {
            for &e in &c.edges {
                ws[w].remove(e);
            }
            for e in class {
                ws[w].insert(e);
            }
        }
    }
    let mut members = vec![cert.base.clone()];
    members.extend(ws);
    Covering::new(g, CoveringKind::Plain, members).map_err(|e| ConstructionError::ConstructionFailed(e.to_string()))
}

/// The good family with singleton-per-pair parts `A_j` read off good-pair
/// certificates, witnessed by the matchings `M_2, M_3, M_4` of the 4-covering
/// built from the same certificates.
pub fn family_from_good_pairs(
    g: &CubicGraph,
    tf: &TwoFactor,
    certs: &[GoodPairCert],
) -> Result<FamilyCert, ConstructionError> {
    let cov = super::four_covering_from_good_pairs(g, tf, certs)?;
    let parts = (0..3)
        .map(|j| EdgeSet::from_indices(g.m(), certs.iter().map(|c| c.cross_edges[j])))
        .collect();
    Ok(FamilyCert {
        base: tf.matching.clone(),
        parts,
        witnesses: cov.matchings()[1..].to_vec(),
    })
}
