//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! The oracles are deliberately built on different machinery than the crate:
//! spanning trees come from filtering all incidence subsets of the right
//! size, and transfer feasibility from membership in the brute-forced
//! hypertree list. They only scale to tiny instances, which is all the
//! frozen expected values need.

#![allow(dead_code)]

use hyperpoly::{BipartiteGraph, EdgeOrdering, Hypergraph};
use std::collections::BTreeSet;

pub fn triangle() -> Hypergraph {
    hyperpoly::parse_hypergraph(
        r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"a","vertices":["v1","v2"]},
            {"id":"b","vertices":["v2","v3"]},
            {"id":"c","vertices":["v1","v3"]}]}"#,
    )
    .unwrap()
}

pub fn one_edge_star() -> Hypergraph {
    hyperpoly::parse_hypergraph(
        r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#,
    )
    .unwrap()
}

pub fn parallel_triple() -> Hypergraph {
    hyperpoly::parse_hypergraph(
        r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2","v3"]},
            {"id":"e2","vertices":["v1","v2","v3"]}]}"#,
    )
    .unwrap()
}

pub fn parallel_pair() -> Hypergraph {
    hyperpoly::parse_hypergraph(
        r#"{"vertices":["v1","v2"],"hyperedges":[
            {"id":"e1","vertices":["v1","v2"]},
            {"id":"e2","vertices":["v1","v2"]}]}"#,
    )
    .unwrap()
}

pub fn path_three() -> Hypergraph {
    hyperpoly::parse_hypergraph(
        r#"{"vertices":["v1","v2","v3"],"hyperedges":[
            {"id":"g1","vertices":["v1","v2"]},
            {"id":"g2","vertices":["v2","v3"]}]}"#,
    )
    .unwrap()
}

struct TinyUnionFind {
    parent: Vec<usize>,
}

impl TinyUnionFind {
    fn new(n: usize) -> Self {
        TinyUnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Every spanning tree of the incidence graph, by filtering all incidence
/// subsets of size `|V| + |E| - 1` for acyclicity.
pub fn brute_spanning_trees(bip: &BipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    let nv = bip.vertex_count();
    let ne = bip.hyperedge_count();
    let mut incidences = Vec::new();
    for e in 0..ne {
        for &v in bip.incident_vertices(e) {
            incidences.push((v, e));
        }
    }
    let k = incidences.len();
    assert!(k <= 20, "brute oracle is for tiny instances only");
    let need = nv + ne - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << k) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut uf = TinyUnionFind::new(nv + ne);
        let mut acyclic = true;
        let mut tree = Vec::with_capacity(need);
        for (i, &(v, e)) in incidences.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if !uf.union(v, nv + e) {
                    acyclic = false;
                    break;
                }
                tree.push((v, e));
            }
        }
        if acyclic {
            out.push(tree);
        }
    }
    out
}

/// Hypertree valence vectors from the brute spanning trees, deduplicated
/// and sorted.
pub fn brute_hypertrees(bip: &BipartiteGraph) -> Vec<Vec<u32>> {
    let ne = bip.hyperedge_count();
    let mut seen = BTreeSet::new();
    for tree in brute_spanning_trees(bip) {
        let mut degrees = vec![0u32; ne];
        for (_, e) in tree {
            degrees[e] += 1;
        }
        for d in &mut degrees {
            *d -= 1;
        }
        seen.insert(degrees);
    }
    seen.into_iter().collect()
}

/// Transfer feasibility by membership in the brute hypertree list.
pub fn brute_transfer(basis: &BTreeSet<Vec<u32>>, f: &[u32], from: usize, to: usize) -> bool {
    if f[from] == 0 {
        return false;
    }
    let mut shifted = f.to_vec();
    shifted[from] -= 1;
    shifted[to] += 1;
    basis.contains(&shifted)
}

/// `(internal inactivity, external inactivity)` per hypertree, straight
/// from the definitions over the brute basis.
pub fn brute_inactivity(
    basis: &BTreeSet<Vec<u32>>,
    f: &[u32],
    ordering: &EdgeOrdering,
) -> (usize, usize) {
    let ne = f.len();
    let mut internal = 0;
    let mut external = 0;
    for e in 0..ne {
        let mut internally_active = true;
        let mut externally_active = true;
        for smaller in 0..ne {
            if ordering.rank(smaller) >= ordering.rank(e) {
                continue;
            }
            if brute_transfer(basis, f, e, smaller) {
                internally_active = false;
            }
            if brute_transfer(basis, f, smaller, e) {
                externally_active = false;
            }
        }
        internal += usize::from(!internally_active);
        external += usize::from(!externally_active);
    }
    (internal, external)
}

/// Interior and exterior coefficient lists from the brute basis.
pub fn brute_polynomials(bip: &BipartiteGraph, ordering: &EdgeOrdering) -> (Vec<u64>, Vec<u64>) {
    let basis: BTreeSet<Vec<u32>> = brute_hypertrees(bip).into_iter().collect();
    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    for f in &basis {
        let (i, e) = brute_inactivity(&basis, f, ordering);
        if interior.len() <= i {
            interior.resize(i + 1, 0);
        }
        interior[i] += 1;
        if exterior.len() <= e {
            exterior.resize(e + 1, 0);
        }
        exterior[e] += 1;
    }
    while interior.last() == Some(&0) {
        interior.pop();
    }
    while exterior.last() == Some(&0) {
        exterior.pop();
    }
    (interior, exterior)
}
