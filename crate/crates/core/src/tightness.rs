//! Subset-based characterizations: the polymatroid-style hypertree test,
//! tight subsets, and the tightness route to transfer feasibility.
//!
//! These run by exhaustive subset enumeration and serve as the bounded
//! second opinion next to the realization-based checkers in `hypertree`.
//! Exceeding the bound is an error, never a silent fallback.

use crate::bipartite::{BipartiteGraph, EdgeSet};
use crate::error::{Error, Result};
use crate::hypertree::{Hypertree, TransferMove};

/// Cap on the hyperedge count for subset-enumeration operations.
pub const EXHAUSTIVE_EDGE_BOUND: usize = 20;

fn ensure_exhaustive_bound(bip: &BipartiteGraph) -> Result<()> {
    let edges = bip.hyperedge_count();
    if edges > EXHAUSTIVE_EDGE_BOUND {
        return Err(Error::ExhaustiveBoundExceeded {
            edges,
            bound: EXHAUSTIVE_EDGE_BOUND,
        });
    }
    Ok(())
}

/// `mu` of every subset, indexed by bitmask.
pub fn mu_table(bip: &BipartiteGraph) -> Result<Vec<u64>> {
    ensure_exhaustive_bound(bip)?;
    let ne = bip.hyperedge_count();
    Ok((0u64..1 << ne)
        .map(|mask| bip.mu(EdgeSet::from_mask(mask)))
        .collect())
}

/// Subset sums of a valence vector, indexed by bitmask.
pub(crate) fn subset_sums(values: &[u32]) -> Vec<u64> {
    let ne = values.len();
    let mut sums = vec![0u64; 1 << ne];
    for mask in 1usize..1 << ne {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + values[low] as u64;
    }
    sums
}

/// Subset-based hypertree test: nonnegative values summing to `|V| - 1`
/// whose sum over every nonempty subset is at most `mu` of the subset.
pub fn is_hypertree_polymatroid(bip: &BipartiteGraph, candidate: &[u32]) -> Result<bool> {
    let ne = bip.hyperedge_count();
    if candidate.len() != ne {
        return Err(Error::DomainMismatch {
            expected: ne,
            got: candidate.len(),
        });
    }
    let mu = mu_table(bip)?;
    Ok(polymatroid_feasible(candidate, &mu, bip.vertex_count()))
}

/// Table-driven form of the subset-based hypertree test.
pub(crate) fn polymatroid_feasible(candidate: &[u32], mu: &[u64], vertex_count: usize) -> bool {
    if vertex_count == 0 {
        return false;
    }
    let total: u64 = candidate.iter().map(|&x| x as u64).sum();
    if total != vertex_count as u64 - 1 {
        return false;
    }
    let sums = subset_sums(candidate);
    sums.iter().zip(mu).all(|(&s, &m)| s <= m)
}

/// Whether the subset is tight at `f`, i.e. `f` sums to `mu` on it.
pub fn is_tight(bip: &BipartiteGraph, f: &Hypertree, set: EdgeSet) -> bool {
    let sum: u64 = set.iter().map(|e| f.value(e) as u64).sum();
    sum == bip.mu(set)
}

/// All subsets tight at `f`, in ascending bitmask order. The empty set and
/// the full hyperedge set are always members.
pub fn tight_family(bip: &BipartiteGraph, f: &Hypertree) -> Result<Vec<EdgeSet>> {
    let mu = mu_table(bip)?;
    let sums = subset_sums(f.values());
    Ok((0..sums.len())
        .filter(|&mask| sums[mask] == mu[mask])
        .map(|mask| EdgeSet::from_mask(mask as u64))
        .collect())
}

/// Tightness route to transfer feasibility: valence can move along `mv`
/// exactly when the source is nonzero and no subset containing the target
/// but not the source is tight at `f`.
pub fn transfer_valid_by_tightness(
    bip: &BipartiteGraph,
    f: &Hypertree,
    mv: TransferMove,
) -> Result<bool> {
    let ne = bip.hyperedge_count();
    if mv.from == mv.to {
        return Err(Error::IdenticalEndpoints);
    }
    for index in [mv.from, mv.to] {
        if index >= ne {
            return Err(Error::EdgeIndexOutOfRange { index, edges: ne });
        }
    }
    ensure_exhaustive_bound(bip)?;
    if f.value(mv.from) == 0 {
        return Ok(false);
    }
    // enumerate subsets containing `to` but not `from`
    let free: u64 = {
        let full = if ne == 0 { 0 } else { u64::MAX >> (64 - ne) };
        full & !(1 << mv.from) & !(1 << mv.to)
    };
    let mut sub = free;
    loop {
        let mask = sub | 1 << mv.to;
        let set = EdgeSet::from_mask(mask);
        let sum: u64 = set.iter().map(|e| f.value(e) as u64).sum();
        if sum == bip.mu(set) {
            return Ok(false);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::build_bipartite;
    use crate::hypergraph::parse_hypergraph;
    use crate::hypertree::enumerate_hypertrees;

    fn bip(text: &str) -> BipartiteGraph {
        build_bipartite(&parse_hypergraph(text).unwrap())
    }

    fn triangle() -> BipartiteGraph {
        bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"a","vertices":["v1","v2"]},
            {"id":"b","vertices":["v2","v3"]},
            {"id":"c","vertices":["v1","v3"]}]}"#)
    }

    #[test]
    fn polymatroid_agrees_on_triangle_examples() {
        let b = triangle();
        assert!(is_hypertree_polymatroid(&b, &[1, 1, 0]).unwrap());
        assert!(!is_hypertree_polymatroid(&b, &[1, 0, 0]).unwrap());
        assert!(!is_hypertree_polymatroid(&b, &[2, 0, 0]).unwrap());
    }

    #[test]
    fn polymatroid_accepts_parallel_extreme() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2","v3"]},
            {"id":"e2","vertices":["v1","v2","v3"]}]}"#);
        assert!(is_hypertree_polymatroid(&b, &[2, 0]).unwrap());
    }

    #[test]
    fn tightness_examples() {
        let b = triangle();
        let trees = enumerate_hypertrees(&b).unwrap();
        let f110 = trees.iter().find(|t| t.values() == [1, 1, 0]).unwrap();
        assert!(is_tight(&b, f110, EdgeSet::EMPTY));
        assert!(is_tight(&b, f110, b.full_edge_set().unwrap()));
        assert!(!is_tight(&b, f110, b.edge_set_from_ids(&["c"]).unwrap()));

        let family = tight_family(&b, f110).unwrap();
        let masks: Vec<u64> = family.iter().map(|s| s.mask()).collect();
        // {}, {a}, {b}, {a,b}, {a,b,c}
        assert_eq!(masks, vec![0b000, 0b001, 0b010, 0b011, 0b111]);
    }

    #[test]
    fn tight_family_of_parallel_extreme() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2","v3"]},
            {"id":"e2","vertices":["v1","v2","v3"]}]}"#);
        let trees = enumerate_hypertrees(&b).unwrap();
        let f20 = trees.iter().find(|t| t.values() == [2, 0]).unwrap();
        let family = tight_family(&b, f20).unwrap();
        let masks: Vec<u64> = family.iter().map(|s| s.mask()).collect();
        assert!(masks.contains(&0b01)); // {e1}
        assert!(!masks.contains(&0b10)); // {e2}
    }

    #[test]
    fn tightness_transfer_route() {
        let b = triangle();
        let trees = enumerate_hypertrees(&b).unwrap();
        let f101 = trees.iter().find(|t| t.values() == [1, 0, 1]).unwrap();
        assert!(transfer_valid_by_tightness(&b, f101, TransferMove::new(2, 1).unwrap()).unwrap());
        let f110 = trees.iter().find(|t| t.values() == [1, 1, 0]).unwrap();
        assert!(!transfer_valid_by_tightness(&b, f110, TransferMove::new(2, 0).unwrap()).unwrap());
        assert!(!transfer_valid_by_tightness(&b, f110, TransferMove::new(1, 0).unwrap()).unwrap());
    }

    #[test]
    fn star_tight_family() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#);
        let trees = enumerate_hypertrees(&b).unwrap();
        let family = tight_family(&b, &trees[0]).unwrap();
        let masks: Vec<u64> = family.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b0, 0b1]);
    }
}
