//! Internal and external activities under a hyperedge ordering, and the
//! interior and exterior polynomials.
//!
//! A hyperedge is internally active at a hypertree when no smaller hyperedge
//! can receive valence from it, and externally active when no smaller
//! hyperedge can send valence to it. The interior polynomial counts
//! hypertrees by internal inactivity, the exterior polynomial by external
//! inactivity.

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use crate::hypertree::{enumerate_hypertrees_with_budget, is_hypertree, Hypertree};
use crate::ordering::EdgeOrdering;
use crate::poly::IntPolynomial;
use std::collections::HashMap;

/// Per-hyperedge activity flags for one hypertree under one ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityProfile {
    internally_active: Vec<bool>,
    externally_active: Vec<bool>,
}

impl ActivityProfile {
    pub fn internally_active(&self, edge: usize) -> bool {
        self.internally_active[edge]
    }

    pub fn externally_active(&self, edge: usize) -> bool {
        self.externally_active[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.internally_active.len()
    }

    pub fn internal_activity(&self) -> usize {
        self.internally_active.iter().filter(|&&a| a).count()
    }

    pub fn internal_inactivity(&self) -> usize {
        self.internally_active.len() - self.internal_activity()
    }

    pub fn external_activity(&self) -> usize {
        self.externally_active.iter().filter(|&&a| a).count()
    }

    pub fn external_inactivity(&self) -> usize {
        self.externally_active.len() - self.external_activity()
    }
}

/// Memo for single transfer queries, keyed by (valence vector, from, to).
/// One full activity profile issues a quadratic number of transfer queries,
/// and distinct orderings repeat most of them.
#[derive(Debug, Default)]
pub struct TransferCache {
    entries: HashMap<(Vec<u32>, usize, usize), bool>,
}

impl TransferCache {
    pub fn new() -> Self {
        TransferCache::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn query(
        &mut self,
        bip: &BipartiteGraph,
        values: &[u32],
        from: usize,
        to: usize,
    ) -> Result<bool> {
        if values[from] == 0 {
            return Ok(false);
        }
        let key = (values.to_vec(), from, to);
        if let Some(&hit) = self.entries.get(&key) {
            return Ok(hit);
        }
        let mut shifted = values.to_vec();
        shifted[from] -= 1;
        shifted[to] += 1;
        let valid = is_hypertree(bip, &shifted)?.is_some();
        self.entries.insert(key, valid);
        Ok(valid)
    }
}

/// Activity flags of one hypertree under one ordering, computed from
/// memoized transfer queries.
pub fn activity_profile(
    bip: &BipartiteGraph,
    f: &Hypertree,
    ordering: &EdgeOrdering,
    cache: &mut TransferCache,
) -> Result<ActivityProfile> {
    let ne = bip.hyperedge_count();
    if ordering.len() != ne || f.len() != ne {
        return Err(Error::InvalidOrdering);
    }
    let mut internally_active = vec![true; ne];
    let mut externally_active = vec![true; ne];
    for e in 0..ne {
        for smaller in 0..ne {
            if ordering.rank(smaller) >= ordering.rank(e) {
                continue;
            }
            if internally_active[e] && cache.query(bip, f.values(), e, smaller)? {
                internally_active[e] = false;
            }
            if externally_active[e] && cache.query(bip, f.values(), smaller, e)? {
                externally_active[e] = false;
            }
            if !internally_active[e] && !externally_active[e] {
                break;
            }
        }
    }
    Ok(ActivityProfile {
        internally_active,
        externally_active,
    })
}

/// All pairwise transfer feasibilities over an enumerated hypertree basis,
/// as bitmasks. Since the basis is complete, a transfer is feasible exactly
/// when the shifted vector is again a basis member.
#[derive(Debug, Clone)]
pub struct TransferTable {
    edge_count: usize,
    can_send: Vec<Vec<u64>>,
    can_receive: Vec<Vec<u64>>,
}

impl TransferTable {
    pub fn build(bip: &BipartiteGraph, basis: &[Hypertree]) -> Result<Self> {
        let ne = bip.hyperedge_count();
        if ne > 64 {
            return Err(Error::TooManyHyperedges(ne));
        }
        let index: HashMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(i, f)| (f.values(), i))
            .collect();
        let mut can_send = vec![vec![0u64; ne]; basis.len()];
        let mut can_receive = vec![vec![0u64; ne]; basis.len()];
        for (fi, f) in basis.iter().enumerate() {
            for from in 0..ne {
                if f.value(from) == 0 {
                    continue;
                }
                for to in 0..ne {
                    if to == from {
                        continue;
                    }
                    let shifted = f.transferred(from, to).expect("source checked nonzero");
                    if index.contains_key(shifted.as_slice()) {
                        can_send[fi][from] |= 1 << to;
                        can_receive[fi][to] |= 1 << from;
                    }
                }
            }
        }
        Ok(TransferTable {
            edge_count: ne,
            can_send,
            can_receive,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn can_transfer(&self, fi: usize, from: usize, to: usize) -> bool {
        self.can_send[fi][from] >> to & 1 == 1
    }

    /// Bitmask of hyperedges that can receive valence from `from` at basis
    /// member `fi`.
    pub fn send_mask(&self, fi: usize, from: usize) -> u64 {
        self.can_send[fi][from]
    }

    /// Bitmask of hyperedges that can send valence to `to` at basis member
    /// `fi`.
    pub fn receive_mask(&self, fi: usize, to: usize) -> u64 {
        self.can_receive[fi][to]
    }

    pub fn profile(&self, fi: usize, ordering: &EdgeOrdering) -> ActivityProfile {
        let ne = self.edge_count;
        let mut internally_active = vec![true; ne];
        let mut externally_active = vec![true; ne];
        let mut smaller = 0u64;
        for rank in 0..ne {
            let e = ordering.edge_at_rank(rank);
            internally_active[e] = self.can_send[fi][e] & smaller == 0;
            externally_active[e] = self.can_receive[fi][e] & smaller == 0;
            smaller |= 1 << e;
        }
        ActivityProfile {
            internally_active,
            externally_active,
        }
    }

    /// `(internal inactivity, external inactivity)` of basis member `fi`.
    pub fn inactivity_counts(&self, fi: usize, ordering: &EdgeOrdering) -> (usize, usize) {
        let ne = self.edge_count;
        let mut internal = 0;
        let mut external = 0;
        let mut smaller = 0u64;
        for rank in 0..ne {
            let e = ordering.edge_at_rank(rank);
            internal += usize::from(self.can_send[fi][e] & smaller != 0);
            external += usize::from(self.can_receive[fi][e] & smaller != 0);
            smaller |= 1 << e;
        }
        (internal, external)
    }
}

/// Interior and exterior polynomials over a prepared basis and table.
pub fn polynomial_pair(
    table: &TransferTable,
    basis_len: usize,
    ordering: &EdgeOrdering,
) -> (IntPolynomial, IntPolynomial) {
    let mut interior_exponents = Vec::with_capacity(basis_len);
    let mut exterior_exponents = Vec::with_capacity(basis_len);
    for fi in 0..basis_len {
        let (internal, external) = table.inactivity_counts(fi, ordering);
        interior_exponents.push(internal);
        exterior_exponents.push(external);
    }
    (
        IntPolynomial::from_exponents(interior_exponents),
        IntPolynomial::from_exponents(exterior_exponents),
    )
}

/// Interior polynomial: hypertrees counted by internal inactivity.
pub fn interior_polynomial(bip: &BipartiteGraph, ordering: &EdgeOrdering) -> Result<IntPolynomial> {
    interior_polynomial_with_budget(bip, ordering, crate::hypertree::DEFAULT_TREE_BUDGET)
}

pub fn interior_polynomial_with_budget(
    bip: &BipartiteGraph,
    ordering: &EdgeOrdering,
    budget: u64,
) -> Result<IntPolynomial> {
    if ordering.len() != bip.hyperedge_count() {
        return Err(Error::InvalidOrdering);
    }
    let basis = enumerate_hypertrees_with_budget(bip, budget)?;
    let table = TransferTable::build(bip, &basis)?;
    Ok(polynomial_pair(&table, basis.len(), ordering).0)
}

/// Exterior polynomial: hypertrees counted by external inactivity.
pub fn exterior_polynomial(bip: &BipartiteGraph, ordering: &EdgeOrdering) -> Result<IntPolynomial> {
    exterior_polynomial_with_budget(bip, ordering, crate::hypertree::DEFAULT_TREE_BUDGET)
}

pub fn exterior_polynomial_with_budget(
    bip: &BipartiteGraph,
    ordering: &EdgeOrdering,
    budget: u64,
) -> Result<IntPolynomial> {
    if ordering.len() != bip.hyperedge_count() {
        return Err(Error::InvalidOrdering);
    }
    let basis = enumerate_hypertrees_with_budget(bip, budget)?;
    let table = TransferTable::build(bip, &basis)?;
    Ok(polynomial_pair(&table, basis.len(), ordering).1)
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

    fn parallel_triple() -> BipartiteGraph {
        bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2","v3"]},
            {"id":"e2","vertices":["v1","v2","v3"]}]}"#)
    }

    #[test]
    fn triangle_profile_under_document_order() {
        let b = triangle();
        let f = Hypertree::try_new(&b, vec![1, 1, 0]).unwrap();
        let o = EdgeOrdering::document(3);
        let mut cache = TransferCache::new();
        let p = activity_profile(&b, &f, &o, &mut cache).unwrap();
        assert_eq!(p.internal_inactivity(), 0);
        assert_eq!(p.external_inactivity(), 1);
        assert!(!p.externally_active(2));
    }

    #[test]
    fn single_hyperedge_is_vacuously_active() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#);
        let f = Hypertree::try_new(&b, vec![2]).unwrap();
        let o = EdgeOrdering::document(1);
        let mut cache = TransferCache::new();
        let p = activity_profile(&b, &f, &o, &mut cache).unwrap();
        assert_eq!(p.internal_inactivity(), 0);
        assert_eq!(p.external_inactivity(), 0);
    }

    #[test]
    fn parallel_pair_profile() {
        let b = parallel_triple();
        let f = Hypertree::try_new(&b, vec![1, 1]).unwrap();
        let o = EdgeOrdering::document(2);
        let mut cache = TransferCache::new();
        let p = activity_profile(&b, &f, &o, &mut cache).unwrap();
        assert!(!p.internally_active(1));
        assert!(!p.externally_active(1));
        assert_eq!(p.internal_inactivity(), 1);
        assert_eq!(p.external_inactivity(), 1);
    }

    #[test]
    fn profiles_match_between_routes() {
        let b = triangle();
        let basis = enumerate_hypertrees(&b).unwrap();
        let table = TransferTable::build(&b, &basis).unwrap();
        let mut cache = TransferCache::new();
        for ordering in EdgeOrdering::all(3) {
            for (fi, f) in basis.iter().enumerate() {
                let direct = activity_profile(&b, f, &ordering, &mut cache).unwrap();
                let bulk = table.profile(fi, &ordering);
                assert_eq!(direct, bulk);
            }
        }
    }

    #[test]
    fn triangle_polynomials() {
        let b = triangle();
        let o = EdgeOrdering::document(3);
        assert_eq!(
            interior_polynomial(&b, &o).unwrap().coefficients(),
            &[1, 1, 1]
        );
        assert_eq!(
            exterior_polynomial(&b, &o).unwrap().coefficients(),
            &[1, 2]
        );
    }

    #[test]
    fn star_polynomials_are_one() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#);
        let o = EdgeOrdering::document(1);
        assert_eq!(interior_polynomial(&b, &o).unwrap(), IntPolynomial::one());
        assert_eq!(exterior_polynomial(&b, &o).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn parallel_triple_polynomials() {
        let b = parallel_triple();
        let o = EdgeOrdering::document(2);
        assert_eq!(
            interior_polynomial(&b, &o).unwrap().coefficients(),
            &[1, 2]
        );
        assert_eq!(
            exterior_polynomial(&b, &o).unwrap().coefficients(),
            &[1, 2]
        );
    }
}
