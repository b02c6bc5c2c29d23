//! Constructive 4- and 5-coverings from cycle structure: good pairs of odd
//! cycles in a 2-factor, and good or nice families of balanced matchings.

mod family;

use serde::Serialize;
use thiserror::Error;

use crate::coverings::{Covering, CoveringError, CoveringKind};
use crate::edgeset::EdgeSet;
use crate::graph::{CubicGraph, TwoFactor};
use crate::matchings::PmCatalog;

pub use family::{covering_from_family, family_from_good_pairs, verify_family, FamilyCert, FamilyCheck, FamilyViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("cycle {0} does not exist in the 2-factor")]
    NoSuchCycle(usize),
    #[error("cycles {0} and {1} are not two distinct odd cycles")]
    NotOddCycles(usize, usize),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("malformed family certificate: {0}")]
    MalformedCert(String),
    #[error("family is invalid: {0:?}")]
    InvalidFamily(FamilyViolation),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

impl From<CoveringError> for ConstructionError {
    fn from(e: CoveringError) -> Self {
        ConstructionError::ConstructionFailed(e.to_string())
    }
}

/// Three matching edges `x x'`, `y y'`, `z z'` from an odd cycle `C` to an
/// odd cycle `C'` whose ends cut both cycles into three odd paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodPairCert {
    pub cycles: (usize, usize),
    pub cross_edges: [usize; 3],
    /// `(end on C, end on C')` for each cross edge.
    pub ends: [(usize, usize); 3],
    /// Path lengths cut on `C` and on `C'`, in cyclic order from the
    /// earliest end.
    pub arcs: [[usize; 3]; 2],
}

/// Lengths of the arcs cut on a cycle of length `len` by at least two
/// distinct positions.
fn arcs_between(len: usize, mut positions: Vec<usize>) -> Vec<usize> {
    positions.sort_unstable();
    let k = positions.len();
    (0..k)
        .map(|i| {
            let (a, b) = (positions[i], positions[(i + 1) % k]);
            (b + len - a) % len
        })
        .collect()
}

fn cycle_exists(tf: &TwoFactor, c: usize) -> Result<(), ConstructionError> {
    match tf.cycles.get(c) {
        None => Err(ConstructionError::NoSuchCycle(c)),
        Some(_) => Ok(()),
    }
}

/// Matching edges with one end on cycle `c` and the other on `c2`, in
/// ascending edge order, as `(edge, end on c, end on c2)`.
fn cross_edges(g: &CubicGraph, tf: &TwoFactor, c: usize, c2: usize) -> Vec<(usize, usize, usize)> {
    tf.matching
        .iter()
        .filter_map(|e| {
            let (u, v) = g.edge(e);
            match (tf.locate(u).0, tf.locate(v).0) {
                (a, b) if a == c && b == c2 => Some((e, u, v)),
                (a, b) if a == c2 && b == c => Some((e, v, u)),
                _ => None,
            }
        })
        .collect()
}

/// The first triple of cross edges between odd cycles `c` and `c2`, in
/// ascending edge-index order, that is a good triple.
pub fn find_good_triple(
    g: &CubicGraph,
    tf: &TwoFactor,
    c: usize,
    c2: usize,
) -> Result<Option<GoodPairCert>, ConstructionError> {
    cycle_exists(tf, c)?;
    cycle_exists(tf, c2)?;
    if c == c2 || !tf.cycles[c].is_odd() || !tf.cycles[c2].is_odd() {
        return Err(ConstructionError::NotOddCycles(c, c2));
    }
    let cross = cross_edges(g, tf, c, c2);
    let (len, len2) = (tf.cycles[c].len(), tf.cycles[c2].len());
    let pos = |v: usize| tf.locate(v).1;
    for i in 0..cross.len() {
        for j in i + 1..cross.len() {
            for k in j + 1..cross.len() {
                let t = [cross[i], cross[j], cross[k]];
                let a = arcs_between(len, t.iter().map(|x| pos(x.1)).collect());
                let b = arcs_between(len2, t.iter().map(|x| pos(x.2)).collect());
                if a.iter().chain(&b).all(|l| l % 2 == 1) {
                    return Ok(Some(GoodPairCert {
                        cycles: (c, c2),
                        cross_edges: t.map(|x| x.0),
                        ends: t.map(|x| (x.1, x.2)),
                        arcs: [[a[0], a[1], a[2]], [b[0], b[1], b[2]]],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Pairs up all odd cycles of `tf` so that each pair is good, backtracking
/// over partners in ascending cycle order. Even cycles are left out.
pub fn pair_odd_cycles(g: &CubicGraph, tf: &TwoFactor) -> Option<Vec<GoodPairCert>> {
    fn rec(g: &CubicGraph, tf: &TwoFactor, free: &mut Vec<usize>, out: &mut Vec<GoodPairCert>) -> bool {
        let Some(&first) = free.first() else {
            return true;
        };
        for k in 1..free.len() {
            let partner = free[k];
            let Some(cert) = find_good_triple(g, tf, first, partner).expect("odd cycles of tf") else {
                continue;
            };
            free.remove(k);
            free.remove(0);
            out.push(cert);
            if rec(g, tf, free, out) {
                return true;
            }
            out.pop();
            free.insert(0, first);
            free.insert(k, partner);
        }
        false
    }
    let mut free = tf.odd_cycles();
    let mut out = Vec::new();
    rec(g, tf, &mut free, &mut out).then_some(out)
}

fn check_cert(g: &CubicGraph, tf: &TwoFactor, cert: &GoodPairCert) -> Result<(), ConstructionError> {
    let bad = |s: &str| Err(ConstructionError::InvalidCertificate(s.to_string()));
    let (c, c2) = cert.cycles;
    cycle_exists(tf, c)?;
    cycle_exists(tf, c2)?;
    if c == c2 || !tf.cycles[c].is_odd() || !tf.cycles[c2].is_odd() {
        return Err(ConstructionError::NotOddCycles(c, c2));
    }
    for (&e, &(x, y)) in cert.cross_edges.iter().zip(&cert.ends) {
        let (u, v) = g.edge(e);
        if !tf.matching.contains(e) || !((u, v) == (x, y) || (u, v) == (y, x)) {
            return bad("cross edge does not match its ends");
        }
        if tf.locate(x).0 != c || tf.locate(y).0 != c2 {
            return bad("cross edge does not join the two cycles");
        }
    }
    if cert.cross_edges[0] == cert.cross_edges[1]
        || cert.cross_edges[1] == cert.cross_edges[2]
        || cert.cross_edges[0] == cert.cross_edges[2]
    {
        return bad("cross edges are not distinct");
    }
    let a = arcs_between(tf.cycles[c].len(), cert.ends.iter().map(|e| tf.locate(e.0).1).collect());
    let b = arcs_between(tf.cycles[c2].len(), cert.ends.iter().map(|e| tf.locate(e.1).1).collect());
    if a.iter().chain(&b).any(|l| l % 2 == 0) {
        return bad("some path is even");
    }
    Ok(())
}

/// Four perfect matchings covering `g`, built from a 2-factor whose odd
/// cycles are paired by the given good-pair certificates.
///
/// `M1` is the matching complementing the 2-factor. For `j = 2, 3, 4`, `M_j`
/// takes the `(j-1)`-th cross edge of every pair together with the perfect
/// matchings of the two paths left after deleting its ends. On even cycles,
/// one alternating class goes to `M2` and the other to `M3` and `M4`.
pub fn four_covering_from_good_pairs(
    g: &CubicGraph,
    tf: &TwoFactor,
    certs: &[GoodPairCert],
) -> Result<Covering, ConstructionError> {
    let mut seen = vec![false; tf.cycles.len()];
    for cert in certs {
        check_cert(g, tf, cert)?;
        for c in [cert.cycles.0, cert.cycles.1] {
            if std::mem::replace(&mut seen[c], true) {
                return Err(ConstructionError::InvalidCertificate(format!("cycle {c} paired twice")));
            }
        }
    }
    if let Some(c) = tf.odd_cycles().into_iter().find(|&c| !seen[c]) {
        return Err(ConstructionError::InvalidCertificate(format!("odd cycle {c} is unpaired")));
    }

    let mut ms = vec![tf.matching.clone()];
    for j in 0..3 {
        let mut mj = g.empty_edge_set();
        for cert in certs {
            mj.insert(cert.cross_edges[j]);
            let (x, y) = cert.ends[j];
            for v in [x, y] {
                let (id, pos) = tf.locate(v);
                for e in tf.cycles[id].path_matching_without(pos) {
                    mj.insert(e);
                }
            }
        }
        for c in tf.even_cycles() {
            let (first, second) = tf.cycles[c].alternating_classes();
            for e in if j == 0 { first } else { second } {
                mj.insert(e);
            }
        }
        if !g.is_perfect_matching(&mj) || mj.intersection(&tf.matching) != cross_class(g, certs, j) {
            return Err(ConstructionError::ConstructionFailed(format!("M{} is not as claimed", j + 2)));
        }
        ms.push(mj);
    }
    Ok(Covering::new(g, CoveringKind::Plain, ms)?)
}

fn cross_class(g: &CubicGraph, certs: &[GoodPairCert], j: usize) -> EdgeSet {
    EdgeSet::from_indices(g.m(), certs.iter().map(|c| c.cross_edges[j]))
}

/// The first perfect matching in catalog order whose complementary 2-factor
/// has its odd cycles arranged into good pairs.
pub fn find_good_pair_two_factor(g: &CubicGraph, catalog: &PmCatalog) -> Option<(TwoFactor, Vec<GoodPairCert>)> {
    catalog.matchings().iter().find_map(|pm| {
        let tf = g.two_factor_of(pm).expect("catalog members are perfect matchings");
        pair_odd_cycles(g, &tf).map(|certs| (tf, certs))
    })
}
