//! Total orders on hyperedges. Position in the order is the rank; smaller
//! rank means smaller hyperedge.

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeOrdering {
    by_rank: Vec<usize>,
    rank_of: Vec<usize>,
}

impl EdgeOrdering {
    /// The document order: rank equals hyperedge index.
    pub fn document(edge_count: usize) -> Self {
        EdgeOrdering {
            by_rank: (0..edge_count).collect(),
            rank_of: (0..edge_count).collect(),
        }
    }

    /// Builds an ordering from edge indices listed smallest first. Must be a
    /// permutation of `0..edge_count`.
    pub fn from_ranked_indices(by_rank: Vec<usize>) -> Result<Self> {
        let n = by_rank.len();
        let mut rank_of = vec![usize::MAX; n];
        for (rank, &e) in by_rank.iter().enumerate() {
            if e >= n || rank_of[e] != usize::MAX {
                return Err(Error::InvalidOrdering);
            }
            rank_of[e] = rank;
        }
        Ok(EdgeOrdering { by_rank, rank_of })
    }

    /// Parses a comma-separated list of hyperedge ids, smallest first. Every
    /// hyperedge must appear exactly once.
    pub fn from_ids<S: AsRef<str>>(bip: &BipartiteGraph, ids: &[S]) -> Result<Self> {
        if ids.len() != bip.hyperedge_count() {
            return Err(Error::InvalidOrdering);
        }
        let mut by_rank = Vec::with_capacity(ids.len());
        for id in ids {
            match bip.hyperedge_index(id.as_ref()) {
                Some(e) => by_rank.push(e),
                None => return Err(Error::UnknownHyperedge(id.as_ref().to_owned())),
            }
        }
        EdgeOrdering::from_ranked_indices(by_rank)
    }

    pub fn len(&self) -> usize {
        self.by_rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_rank.is_empty()
    }

    pub fn rank(&self, edge: usize) -> usize {
        self.rank_of[edge]
    }

    pub fn edge_at_rank(&self, rank: usize) -> usize {
        self.by_rank[rank]
    }

    pub fn by_rank(&self) -> &[usize] {
        &self.by_rank
    }

    /// The ordering with the edges at ranks `rank` and `rank + 1` swapped.
    pub fn swap_adjacent(&self, rank: usize) -> Self {
        let mut by_rank = self.by_rank.clone();
        by_rank.swap(rank, rank + 1);
        EdgeOrdering::from_ranked_indices(by_rank).expect("swap keeps a permutation")
    }

    /// All orderings of `edge_count` hyperedges, lexicographic by rank list.
    /// Callers are responsible for keeping `edge_count` small.
    pub fn all(edge_count: usize) -> Vec<EdgeOrdering> {
        let mut items: Vec<usize> = (0..edge_count).collect();
        let mut out = Vec::new();
        permute(&mut items, 0, &mut out);
        out
    }

    /// Uniform random ordering from the given generator.
    pub fn random(edge_count: usize, rng: &mut impl Rng) -> Self {
        let mut by_rank: Vec<usize> = (0..edge_count).collect();
        by_rank.shuffle(rng);
        EdgeOrdering::from_ranked_indices(by_rank).expect("shuffle keeps a permutation")
    }

    /// Hyperedge labels smallest first.
    pub fn labels(&self, bip: &BipartiteGraph) -> Vec<String> {
        self.by_rank
            .iter()
            .map(|&e| bip.hyperedge_id(e).as_str().to_owned())
            .collect()
    }
}

fn permute(items: &mut Vec<usize>, from: usize, out: &mut Vec<EdgeOrdering>) {
    if from == items.len() {
        out.push(EdgeOrdering::from_ranked_indices(items.clone()).expect("permutation"));
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permute(items, from + 1, out);
        items.swap(from, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_order_roundtrip() {
        let o = EdgeOrdering::document(3);
        assert_eq!(o.rank(0), 0);
        assert_eq!(o.edge_at_rank(2), 2);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(EdgeOrdering::from_ranked_indices(vec![0, 0, 1]).is_err());
        assert!(EdgeOrdering::from_ranked_indices(vec![0, 3]).is_err());
    }

    #[test]
    fn swap_adjacent_swaps_ranks() {
        let o = EdgeOrdering::document(3).swap_adjacent(1);
        assert_eq!(o.by_rank(), &[0, 2, 1]);
        assert_eq!(o.rank(2), 1);
    }

    #[test]
    fn all_orderings_count() {
        assert_eq!(EdgeOrdering::all(0).len(), 1);
        assert_eq!(EdgeOrdering::all(1).len(), 1);
        assert_eq!(EdgeOrdering::all(4).len(), 24);
    }

    #[test]
    fn empty_ordering_is_fine() {
        let o = EdgeOrdering::document(0);
        assert!(o.is_empty());
    }
}
