use std::collections::HashMap;

use serde::Serialize;

use super::{check_catalog, covering_multiplicities, multiplicities, Covering, CoveringError, CoveringKind, SolverOptions};
use crate::deadline::Ticker;
use crate::edgeset::EdgeSet;
use crate::gf2::Basis;
use crate::graph::CubicGraph;
use crate::matchings::PmCatalog;

/// Minimum counts are only tallied up to this size and catalog length.
const COUNT_MAX_SIZE: usize = 7;
const COUNT_MAX_CATALOG: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OddResult {
    Found {
        size: usize,
        witness: Covering,
        /// Number of minimum odd coverings, when small enough to count.
        count_minimum: Option<u64>,
        /// C(catalog length, size).
        subsets_at_size: u64,
    },
    NoneExists,
    Exceeds { cap: usize },
    TimedOut {
        above: usize,
    },
}

impl OddResult {
    pub fn size(&self) -> Option<usize> {
        match self {
            OddResult::Found { size, .. } => Some(*size),
            _ => None,
        }
    }
}

/// Whether the all-ones edge vector is a sum over GF(2) of catalog members,
/// which is exactly when some set of distinct members is an odd covering.
pub fn odd_covering_exists(catalog: &PmCatalog) -> bool {
    let m = catalog.graph().m();
    Basis::from_vectors(catalog.matchings(), m).contains(&EdgeSet::full(m))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

fn fingerprint(s: &EdgeSet) -> u64 {
    s.words()
        .iter()
        .fold(0xcbf2_9ce4_8422_2325, |h, w| (h ^ w).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(17))
}

/// Minimum number of distinct catalog members covering every edge an odd
/// number of times.
pub fn odd_covering_number(g: &CubicGraph, catalog: &PmCatalog, cap: usize) -> Result<OddResult, CoveringError> {
    odd_covering_number_with(g, catalog, cap, &SolverOptions::default())
}

/// As [`odd_covering_number`]. Only odd sizes are tried: at each vertex the
/// three incident multiplicities are odd and sum to the covering size.
pub fn odd_covering_number_with(
    g: &CubicGraph,
    catalog: &PmCatalog,
    cap: usize,
    opts: &SolverOptions,
) -> Result<OddResult, CoveringError> {
    check_catalog(g, catalog)?;
    if catalog.is_empty() || !odd_covering_exists(catalog) {
        return Ok(OddResult::NoneExists);
    }
    let p = catalog.len();
    let pms = catalog.matchings();
    let target = g.edge_set();
    let mut ticker = Ticker::new(opts.deadline);

    // XOR of every pair (a, b), a < b, listed in lexicographic order.
    let mut pairs: HashMap<u64, Vec<(u32, u32)>> = HashMap::new();
    for a in 0..p {
        for b in a + 1..p {
            let x = pms[a].symmetric_difference(&pms[b]);
            pairs.entry(fingerprint(&x)).or_default().push((a as u32, b as u32));
        }
    }

    let mut size = 3;
    while size <= cap.min(p) {
        let counting = size <= COUNT_MAX_SIZE && p <= COUNT_MAX_CATALOG;
        let mut first: Option<Vec<usize>> = None;
        let mut count = 0u64;
        let prefix_len = size - 2;
        let mut prefix: Vec<usize> = (0..prefix_len).collect();
        let mut acc: Vec<EdgeSet> = Vec::with_capacity(prefix_len + 1);
        acc.push(target.clone());
        for &i in &prefix {
            let next = acc.last().unwrap().symmetric_difference(&pms[i]);
            acc.push(next);
        }
        loop {
            if ticker.tick() {
                return Ok(OddResult::TimedOut { above: size - 2 });
            }
            let need = acc.last().unwrap();
            let last = prefix.last().copied();
            if let Some(list) = pairs.get(&fingerprint(need)) {
                let start = list.partition_point(|&(a, _)| last.is_some_and(|l| a as usize <= l));
                for &(a, b) in &list[start..] {
                    let (a, b) = (a as usize, b as usize);
                    if pms[a].symmetric_difference(&pms[b]) != *need {
                        continue;
                    }
                    if first.is_none() {
                        let mut w = prefix.clone();
                        w.extend([a, b]);
                        first = Some(w);
                    }
                    count += 1;
                    if !counting {
                        break;
                    }
                }
            }
            if first.is_some() && !counting {
                break;
            }
            if !advance(&mut prefix, p - 2, &mut acc, pms) {
                break;
            }
        }
        if let Some(indices) = first {
            let witness = Covering::from_catalog(catalog, CoveringKind::Odd, indices)?;
            return Ok(OddResult::Found {
                size,
                witness,
                count_minimum: counting.then_some(count),
                subsets_at_size: binomial(p, size),
            });
        }
        size += 2;
    }
    Ok(OddResult::Exceeds { cap })
}

/// Steps `prefix` to the next combination of `0..limit` in lexicographic
/// order, keeping the running XORs in `acc` in sync.
fn advance(prefix: &mut [usize], limit: usize, acc: &mut Vec<EdgeSet>, pms: &[EdgeSet]) -> bool {
    let k = prefix.len();
    let Some(pos) = (0..k).rev().find(|&i| prefix[i] < limit - (k - i)) else {
        return false;
    };
    prefix[pos] += 1;
    for i in pos + 1..k {
        prefix[i] = prefix[i - 1] + 1;
    }
    acc.truncate(pos + 1);
    for &i in &prefix[pos..] {
        let next = acc.last().unwrap().symmetric_difference(&pms[i]);
        acc.push(next);
    }
    true
}

/// Adjoins the doubly covered matching of a 4-covering: every edge is then
/// covered once or three times.
pub fn odd_covering_from_four_covering(g: &CubicGraph, cov4: &Covering) -> Result<Covering, CoveringError> {
    let profile = covering_multiplicities(g, cov4)?;
    let mut matchings = vec![profile.doubly_covered];
    matchings.extend(cov4.matchings().iter().cloned());
    Covering::new(g, CoveringKind::Odd, matchings)
}

/// Every member of a plain covering taken twice.
pub fn double_covering(g: &CubicGraph, cov: &Covering) -> Result<Covering, CoveringError> {
    if let Some(e) = cov.multiplicity().iter().position(|&k| k == 0) {
        return Err(CoveringError::NotACovering(e));
    }
    let matchings = cov.matchings().iter().flat_map(|m| [m.clone(), m.clone()]).collect();
    Covering::new(g, CoveringKind::Even, matchings)
}

/// The size-8 even covering obtained by doubling a 4-covering.
pub fn even_covering_from_four_covering(g: &CubicGraph, cov4: &Covering) -> Result<Covering, CoveringError> {
    covering_multiplicities(g, cov4)?;
    double_covering(g, cov4)
}

/// Removes pairs of equal members while every edge of the removed matching
/// stays covered. Pairs are tried in ascending matching order, restarting
/// after each removal, until none can go. On a valid odd input a duplicated
/// matching's edges are covered at least three times, so removal never
/// blocks and the result has distinct members.
pub fn reduce_odd_covering(g: &CubicGraph, members: &[EdgeSet]) -> Result<Covering, CoveringError> {
    for (i, pm) in members.iter().enumerate() {
        if !g.is_perfect_matching(pm) {
            return Err(CoveringError::NotPerfectMatching(i));
        }
    }
    let mut mult = multiplicities(g.m(), members);
    if let Some(e) = mult.iter().position(|&k| k % 2 == 0) {
        return Err(CoveringError::NotOdd(e));
    }
    let mut rest: Vec<EdgeSet> = members.to_vec();
    rest.sort();
    'scan: loop {
        for i in 0..rest.len().saturating_sub(1) {
            if rest[i] != rest[i + 1] {
                continue;
            }
            if rest[i].iter().all(|e| mult[e] >= 3) {
                for e in &rest[i] {
                    mult[e] -= 2;
                }
                rest.drain(i..i + 2);
                continue 'scan;
            }
        }
        break;
    }
    Covering::new(g, CoveringKind::Odd, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{tau5odd_example, three_cut_join};
    use crate::coverings::{covering_number, TauResult};
    use crate::generators;
    use crate::matchings::enumerate_perfect_matchings;

    /// All subsets by bitmask; only for catalogs of at most ~25 members.
    fn exhaustive_min_odd(cat: &PmCatalog) -> Option<(usize, u64)> {
        let p = cat.len();
        assert!(p <= 25);
        let full = cat.graph().edge_set();
        let mut best: Option<(usize, u64)> = None;
        for mask in 1u32..(1 << p) {
            let mut x = cat.graph().empty_edge_set();
            for i in 0..p {
                if mask >> i & 1 == 1 {
                    x.xor_with(cat.get(i));
                }
            }
            if x == full {
                let s = mask.count_ones() as usize;
                best = match best {
                    Some((b, c)) if b == s => Some((b, c + 1)),
                    Some((b, c)) if b < s => Some((b, c)),
                    _ => Some((s, 1)),
                };
            }
        }
        best
    }

    fn odd(g: &CubicGraph, cap: usize) -> OddResult {
        odd_covering_number(g, &enumerate_perfect_matchings(g), cap).unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(odd(&generators::petersen(), 9), OddResult::NoneExists);
        assert_eq!(odd(&generators::k4(), 9).size(), Some(3));
        assert_eq!(odd(&generators::blanusa1(), 9).size(), Some(5));
        let p = generators::petersen();
        let pk = three_cut_join(&p, 0, &generators::k33(), 0).unwrap().graph;
        assert_eq!(odd(&pk, 9), OddResult::NoneExists);
    }

    #[test]
    fn tau5odd_example_counts() {
        let g = tau5odd_example();
        let cat = enumerate_perfect_matchings(&g);
        let res = odd_covering_number(&g, &cat, 9).unwrap();
        let OddResult::Found {
            size,
            witness,
            count_minimum,
            subsets_at_size,
        } = res
        else {
            panic!("expected an odd covering, got {res:?}");
        };
        assert_eq!(size, 7);
        assert_eq!(count_minimum, Some(64));
        assert_eq!(subsets_at_size, 77520);
        assert_eq!(witness.len() % 2, 1);
        assert_eq!(exhaustive_min_odd(&cat), Some((7, 64)));
    }

    #[test]
    fn gf2_and_search_agree_with_exhaustive_enumeration() {
        let mut checked = 0;
        for seed in 0..200 {
            let g = generators::random_bridgeless_cubic(8 + 2 * (seed as usize % 4), seed).unwrap();
            let cat = enumerate_perfect_matchings(&g);
            if cat.len() > 25 {
                continue;
            }
            checked += 1;
            let brute = exhaustive_min_odd(&cat);
            assert_eq!(odd_covering_exists(&cat), brute.is_some());
            let res = odd_covering_number(&g, &cat, 25).unwrap();
            assert_eq!(res.size(), brute.map(|b| b.0));
            if let OddResult::Found { count_minimum: Some(c), .. } = res {
                assert_eq!(Some(c), brute.map(|b| b.1));
            }
        }
        assert!(checked >= 50);
        for g in [generators::petersen(), generators::k4(), generators::k33()] {
            let cat = enumerate_perfect_matchings(&g);
            assert_eq!(odd_covering_exists(&cat), exhaustive_min_odd(&cat).is_some());
        }
    }

    #[test]
    fn from_four_covering() {
        let g = generators::blanusa1();
        let cat = enumerate_perfect_matchings(&g);
        let TauResult::Found { witness, .. } = covering_number(&g, &cat, 6).unwrap() else {
            panic!()
        };
        let odd5 = odd_covering_from_four_covering(&g, &witness).unwrap();
        assert_eq!(odd5.len(), 5);
        assert!(odd5.multiplicity().iter().all(|&k| k == 1 || k == 3));
        let even8 = even_covering_from_four_covering(&g, &witness).unwrap();
        assert_eq!(even8.len(), 8);
        assert!(even8.multiplicity().iter().all(|&k| k == 2 || k == 4));
    }

    #[test]
    fn reduction() {
        let g = generators::k4();
        let cat = enumerate_perfect_matchings(&g);
        let (a, b, c) = (cat.get(0).clone(), cat.get(1).clone(), cat.get(2).clone());
        // {M, M, M1, M2, M3} with M = a.
        let cov = reduce_odd_covering(&g, &[a.clone(), a.clone(), a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(cov.matchings(), &[a.clone(), b.clone(), c.clone()]);
        // Already distinct: unchanged.
        let cov = reduce_odd_covering(&g, &[a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(cov.len(), 3);
        // {A, A, B, B, C} covers the edges of A and B twice.
        assert!(matches!(
            reduce_odd_covering(&g, &[a.clone(), a.clone(), b.clone(), b.clone(), c.clone()]),
            Err(CoveringError::NotOdd(_))
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 7), 77520);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
