//! Fibers: maximal families of hypertrees agreeing everywhere outside two
//! designated hyperedges, ordered by the value at the first of them. Along a
//! fiber that value takes consecutive integers, which is checked rather than
//! assumed.

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use crate::hypertree::{enumerate_hypertrees, Hypertree};
use std::collections::BTreeMap;

/// One fiber, as indices into the basis, ascending by the pivot value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    members: Vec<usize>,
}

impl Fiber {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Fiber member with the smallest pivot value.
    pub fn low_end(&self) -> usize {
        self.members[0]
    }

    /// Fiber member with the largest pivot value.
    pub fn high_end(&self) -> usize {
        self.members[self.members.len() - 1]
    }

    /// Whether the pivot values of consecutive members differ by one.
    pub fn is_consecutive(&self, basis: &[Hypertree], pivot: usize) -> bool {
        self.members
            .windows(2)
            .all(|w| basis[w[1]].value(pivot) == basis[w[0]].value(pivot) + 1)
    }
}

/// Partitions a hypertree basis by its restriction off `{pivot, co_pivot}`.
/// Fibers come out in lexicographic order of the restriction; members ascend
/// by pivot value. No consecutiveness check here.
pub fn partition_into_fibers(
    basis: &[Hypertree],
    pivot: usize,
    co_pivot: usize,
) -> Result<Vec<Fiber>> {
    if pivot == co_pivot {
        return Err(Error::IdenticalEndpoints);
    }
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, f) in basis.iter().enumerate() {
        let key: Vec<u32> = f
            .values()
            .iter()
            .enumerate()
            .filter(|&(e, _)| e != pivot && e != co_pivot)
            .map(|(_, &v)| v)
            .collect();
        groups.entry(key).or_default().push(i);
    }
    Ok(groups
        .into_values()
        .map(|mut members| {
            members.sort_by_key(|&i| basis[i].value(pivot));
            Fiber { members }
        })
        .collect())
}

/// Fibers of the full hypertree set of a connected hypergraph, with the
/// consecutive-value invariant verified.
#[derive(Debug, Clone)]
pub struct FiberDecomposition {
    basis: Vec<Hypertree>,
    pivot: usize,
    co_pivot: usize,
    fibers: Vec<Fiber>,
}

impl FiberDecomposition {
    pub fn basis(&self) -> &[Hypertree] {
        &self.basis
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn co_pivot(&self) -> usize {
        self.co_pivot
    }
}

/// Enumerates the hypertrees and partitions them into fibers for the two
/// given hyperedges, failing if any fiber skips a pivot value.
pub fn fiber_decomposition(
    bip: &BipartiteGraph,
    pivot: usize,
    co_pivot: usize,
) -> Result<FiberDecomposition> {
    let ne = bip.hyperedge_count();
    for index in [pivot, co_pivot] {
        if index >= ne {
            return Err(Error::EdgeIndexOutOfRange { index, edges: ne });
        }
    }
    let basis = enumerate_hypertrees(bip)?;
    let fibers = partition_into_fibers(&basis, pivot, co_pivot)?;
    for fiber in &fibers {
        if !fiber.is_consecutive(&basis, pivot) {
            return Err(Error::NonConsecutiveFiber);
        }
    }
    Ok(FiberDecomposition {
        basis,
        pivot,
        co_pivot,
        fibers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::build_bipartite;
    use crate::hypergraph::parse_hypergraph;

    fn bip(text: &str) -> BipartiteGraph {
        build_bipartite(&parse_hypergraph(text).unwrap())
    }

    #[test]
    fn triangle_fibers_for_b_c() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"a","vertices":["v1","v2"]},
            {"id":"b","vertices":["v2","v3"]},
            {"id":"c","vertices":["v1","v3"]}]}"#);
        // pivot b (index 1), co-pivot c (index 2): group by the a-value
        let d = fiber_decomposition(&b, 1, 2).unwrap();
        let shapes: Vec<Vec<&[u32]>> = d
            .fibers()
            .iter()
            .map(|f| f.members().iter().map(|&i| d.basis()[i].values()).collect())
            .collect();
        assert_eq!(
            shapes,
            vec![vec![&[0, 1, 1][..]], vec![&[1, 0, 1][..], &[1, 1, 0]]]
        );
    }

    #[test]
    fn parallel_pair_is_one_fiber_of_three() {
        let b = bip(r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2","v3"]},
            {"id":"e2","vertices":["v1","v2","v3"]}]}"#);
        let d = fiber_decomposition(&b, 0, 1).unwrap();
        assert_eq!(d.fibers().len(), 1);
        let fiber = &d.fibers()[0];
        assert_eq!(fiber.len(), 3);
        assert_eq!(d.basis()[fiber.low_end()].values(), &[0, 2]);
        assert_eq!(d.basis()[fiber.high_end()].values(), &[2, 0]);
        assert!(fiber.is_consecutive(d.basis(), 0));
    }

    #[test]
    fn identical_pivots_are_rejected() {
        let b = bip(r#"{"vertices":["v1","v2"],"hyperedges":[{"id":"e","vertices":["v1","v2"]}]}"#);
        assert_eq!(
            fiber_decomposition(&b, 0, 0).unwrap_err(),
            Error::IdenticalEndpoints
        );
    }
}
